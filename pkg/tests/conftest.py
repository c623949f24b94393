from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

from fqhg.constructions import alpha_dual_pair, hecke_pair, omega_free_product, omega_from_group, twosub_pair
from fqhg.groups import preset, subgroup_generate

settings.register_profile(
    "fqhg",
    max_examples=int(os.environ.get("FQHG_EXAMPLES", "15")),
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fqhg")


def gen(G, *labels):
    return subgroup_generate(G, [G.index(x) for x in labels])


@pytest.fixture(scope="session")
def S3():
    return preset("S3")


@pytest.fixture(scope="session")
def hecke_s3(S3):
    return hecke_pair(S3, gen(S3, "(1 2)"), ["u", "v"], ["bH", "bV"])


@pytest.fixture(scope="session")
def free_z2():
    Z2 = preset("Z2")
    return twosub_pair(omega_free_product(Z2, Z2))


@pytest.fixture(scope="session")
def matched_s3(S3):
    return twosub_pair(omega_from_group(S3, gen(S3, "(1 2)"), gen(S3, "(1 2 3)")))


@pytest.fixture(scope="session")
def vw_pair():
    return alpha_dual_pair("vw", "-3/2")


CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
