"""Deterministic pseudo-random sampling of exact vectors.

The seed comes from the ``FQHG_SEED`` environment variable unless passed in
explicitly; the default is 0 so runs are reproducible out of the box.
"""

from __future__ import annotations

import os
import random

from .exactnum import Scalar

SEED_ENV = "FQHG_SEED"


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(default_seed() if seed is None else seed)


def gaussian_integer_vector(rng: random.Random, n: int, bound: int = 4, real: bool = False) -> tuple[Scalar, ...]:
    """A vector of Gaussian integers with parts in [-bound, bound]."""
    out = []
    for _ in range(n):
        re = rng.randint(-bound, bound)
        im = 0 if real else rng.randint(-bound, bound)
        out.append(Scalar(re, im))
    return tuple(out)
