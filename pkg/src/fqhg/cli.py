"""Command-line interface: ``fqhg build|verify|dualize|pair-check|report``.

Exit codes: 0 all checks pass, 1 a mathematical check fails, 2 malformed
input, 3 a precondition of a construction is violated.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import constructions as C
from .duality import dual_fqh, verify_fqh
from .errors import FQHError, MalformedInput, PreconditionError
from .groups import FiniteGroup, preset, subgroup_generate
from .pairing import (
    action_properties,
    canonical_dual_pair,
    check_nondegenerate,
    check_star_pairing,
    induced_coproduct,
    induced_counit,
)
from .render import render_certificate, render_pair, render_side
from .serialize import (
    SCHEMA,
    Bundle,
    Side,
    bundle_to_json,
    certificate_to_json,
    dumps,
    loads,
    to_plain,
)

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_PRECONDITION = 0, 1, 2, 3


def _guard(fn):
    """Map package errors onto the exit-code contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            code = fn(*args, **kwargs)
        except PreconditionError as e:
            click.echo(f"precondition violated: {e}", err=True)
            code = EXIT_PRECONDITION
        except (MalformedInput, FQHError, ValueError, KeyError, OSError) as e:
            click.echo(f"malformed input: {e}", err=True)
            code = EXIT_MALFORMED
        sys.exit(code or 0)

    return wrapper


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _load(path: str) -> Bundle:
    return loads(Path(path).read_text(encoding="utf-8"))


def _group(text: str) -> FiniteGroup:
    if text.endswith(".json"):
        return FiniteGroup.from_json(json.loads(Path(text).read_text(encoding="utf-8")))
    return preset(text)


def _subgroup(G: FiniteGroup, gens: tuple[str, ...]):
    labels = [g.strip() for item in gens for g in item.split(";") if g.strip()]
    return subgroup_generate(G, [G.index(x) for x in labels])


def _labels(text: str | None):
    return [x.strip() for x in text.split(",")] if text else None


def _construction_bundle(c: C.Construction) -> Bundle:
    return Bundle(c.name, Side.from_fqh(c.fqh_a), Side.from_fqh(c.fqh_b), c.pair.P, c.meta)


# ---------------------------------------------------------------------------
# verification helpers (also used by the tests)
# ---------------------------------------------------------------------------


def verify_bundle(b: Bundle) -> tuple[dict, bool]:
    """Certificates for every side that carries an integral."""
    out: dict = {"schema": SCHEMA, "name": b.name, "certificates": {}}
    ok = True
    for key, side in (("a", b.a), ("b", b.b)):
        if side is None:
            continue
        cert = verify_fqh(side.algebra, side.coproduct, side.counit, side.integral)
        entry = certificate_to_json(cert)
        if side.antipode is not None:
            match = cert.antipode is not None and cert.antipode == side.antipode
            entry["antipode_matches"] = match
            ok = ok and match
        out["certificates"][key] = entry
        ok = ok and cert.ok
    return out, ok


def pair_report(b: Bundle) -> tuple[dict, bool]:
    D = b.pair()
    checks: dict = {"nondegenerate": check_nondegenerate(D)}
    if not checks["nondegenerate"]:
        return {"schema": SCHEMA, "name": b.name, "checks": checks}, False
    checks["coproduct_a_induced"] = induced_coproduct(D, "A") == b.a.coproduct
    checks["coproduct_b_induced"] = induced_coproduct(D, "B") == b.b.coproduct
    checks["counit_a_induced"] = induced_counit(D, "A") == tuple(b.a.counit)
    checks["counit_b_induced"] = induced_counit(D, "B") == tuple(b.b.counit)
    out: dict = {"schema": SCHEMA, "name": b.name, "checks": checks}
    ok = all(checks.values())
    if D.A.star is not None and D.B.star is not None:
        rep = check_star_pairing(D)
        out["star_pairing"] = to_plain(rep.as_dict())
        ok = ok and rep.ok
    out["actions"] = to_plain(action_properties(D))
    return out, ok


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Exact finite quantum hypergroups over Q(i)."""


@main.group()
def build():
    """Construct a preset and write its JSON bundle."""


_out = click.option("-o", "--output", type=click.Path(dir_okay=False), help="write here instead of stdout")


@build.command("hecke")
@click.option("--group", "group", required=True, help="preset name (S3, D4, Z4, V4, ...) or group JSON file")
@click.option("--subgroup", "gens", multiple=True, required=True, help="generator label; repeat or separate with ';'")
@click.option("--labels-a", default=None, help="comma-separated basis labels for the double-coset side")
@click.option("--labels-b", default=None, help="comma-separated basis labels for the dual side")
@_out
@_guard
def build_hecke(group, gens, labels_a, labels_b, output):
    G = _group(group)
    H = _subgroup(G, gens)
    c = C.hecke_pair(G, H, _labels(labels_a), _labels(labels_b))
    _emit(dumps(bundle_to_json(_construction_bundle(c))), output)


def _parse_free(values):
    out = {}
    for v in values:
        if "=" not in v:
            raise MalformedInput(f"expected NAME=GROUP, got {v!r}")
        k, g = v.split("=", 1)
        out[k.strip().upper()] = g.strip()
    if set(out) != {"H", "K"}:
        raise MalformedInput("--free needs H=<group> K=<group>")
    return out


@build.command("twosub")
@click.option("--free", nargs=2, default=None, help="free product: H=<group> K=<group>")
@click.option("--group", "group", default=None, help="ambient group for --h/--k")
@click.option("--h", "h_gens", multiple=True, help="generator of H")
@click.option("--k", "k_gens", multiple=True, help="generator of K")
@_out
@_guard
def build_twosub(free, group, h_gens, k_gens, output):
    if free:
        given = _parse_free(free)
        Om = C.omega_free_product(_group(given["H"]), _group(given["K"]))
    else:
        if not group or not h_gens or not k_gens:
            raise MalformedInput("give --free H=.. K=.. or --group with --h and --k")
        G = _group(group)
        Om = C.omega_from_group(G, _subgroup(G, h_gens), _subgroup(G, k_gens))
    _emit(dumps(bundle_to_json(_construction_bundle(C.twosub_pair(Om)))), output)


@build.command("family")
@click.option("--kind", type=click.Choice(["v", "vw", "vy", "xy"]), default="v", show_default=True)
@click.option("--alpha", required=True, help="rational parameter, e.g. -3/2")
@_out
@_guard
def build_family(kind, alpha, output):
    if kind == "v":
        F = C.alpha_family(alpha)
        a = -F.integral[0]
        b = Bundle(f"family v alpha={a}", Side.from_fqh(F), meta={"kind": "v", "alpha": str(a)})
    else:
        b = _construction_bundle(C.alpha_dual_pair(kind, alpha))
    _emit(dumps(bundle_to_json(b)), output)


@build.command("counterexample")
@click.option("--name", type=click.Choice(["groupoid2", "c3", "c4", "m2"]), required=True)
@click.option("--lambda", "lam", default="0", show_default=True, help="shift for c4")
@click.option("--p", default="1", show_default=True, help="m2 parameter p")
@click.option("--q", default="2", show_default=True, help="m2 parameter q")
@_out
@_guard
def build_counterexample(name, lam, p, q, output):
    params = {"c4": {"lam": lam}, "m2": {"p": p, "q": q}}.get(name, {})
    x = C.counterexample(name, **params)
    a = Side(x.algebra, x.coproduct, x.counit, x.phi, None)
    meta = dict(x.meta)
    meta["counterexample"] = name
    _emit(dumps(bundle_to_json(Bundle(name, a, meta=meta))), output)


@main.command()
@click.argument("bundle", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@_guard
def verify(bundle, fmt):
    """Verify every side of BUNDLE; exit 0 iff all certificate fields hold."""
    b = _load(bundle)
    report, ok = verify_bundle(b)
    if fmt == "json":
        click.echo(dumps(report), nl=False)
    else:
        for key, side in (("a", b.a), ("b", b.b)):
            if side is None:
                continue
            cert = verify_fqh(side.algebra, side.coproduct, side.counit, side.integral)
            click.echo(render_certificate(cert, f"side {key}"))
    return EXIT_OK if ok else EXIT_FAIL


@main.command()
@click.argument("bundle", type=click.Path(exists=True, dir_okay=False))
@_out
@_guard
def dualize(bundle, output):
    """Write the dual hypergroup; the result pairs it with the input side a."""
    b = _load(bundle)
    F = b.a.to_fqh()
    if b.b is not None and b.pairing is not None:
        D = b.pair()
    else:
        D = canonical_dual_pair(F.algebra, F.coproduct, F.counit, labels=None)
    G = dual_fqh(D, F)
    out = Bundle(f"dual of {b.name}".strip(), Side.from_fqh(G), Side.from_fqh(F), D.P.T(),
                 {"notes": list(G.notes)})
    _emit(dumps(bundle_to_json(out)), output)


@main.command("pair-check")
@click.argument("bundle", type=click.Path(exists=True, dir_okay=False))
@_guard
def pair_check(bundle):
    """Check the pairing of BUNDLE: consistency, *-structure, actions."""
    report, ok = pair_report(_load(bundle))
    click.echo(dumps(report), nl=False)
    return EXIT_OK if ok else EXIT_FAIL


@main.command()
@click.argument("bundle", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
@_guard
def report(bundle, fmt):
    """Human-readable (text) or machine-readable (json) summary of BUNDLE."""
    b = _load(bundle)
    ver, ok = verify_bundle(b)
    if fmt == "json":
        out = bundle_to_json(b)
        out["certificates"] = ver["certificates"]
        click.echo(dumps(out), nl=False)
        return EXIT_OK if ok else EXIT_FAIL
    parts = [b.name] if b.name else []
    for key, side in (("A", b.a), ("B", b.b)):
        if side is None:
            continue
        parts.append(render_side(key, side.algebra, side.coproduct, side.counit, side.integral, side.antipode))
        cert = verify_fqh(side.algebra, side.coproduct, side.counit, side.integral)
        parts.append(render_certificate(cert, f"{key} certificate"))
    if b.pairing is not None:
        parts.append(render_pair(b.pairing, b.a.algebra.labels, b.b.algebra.labels))
    click.echo("\n".join(parts))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    main()
