"""JSON bundles (schema ``fqhg/1``).

Scalars are written as canonical strings ("3/2", "1/2-i").  A bundle holds
one or two sides, each with its algebra, coproduct, counit, integral and
optionally an antipode, plus an optional pairing matrix.  Output is
deterministic: fixed key order, no floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .algebra import Algebra
from .duality import FQH, FQHCertificate, CERTIFICATE_FIELDS
from .errors import MalformedInput, ShapeError
from .exactnum import Matrix, Scalar
from .pairing import DualPair

SCHEMA = "fqhg/1"

__all__ = [
    "SCHEMA",
    "MalformedInput",
    "Side",
    "Bundle",
    "to_plain",
    "matrix_to_json",
    "matrix_from_json",
    "algebra_to_json",
    "algebra_from_json",
    "side_to_json",
    "side_from_json",
    "bundle_to_json",
    "bundle_from_json",
    "certificate_to_json",
    "dumps",
    "loads",
]


def to_plain(obj: Any) -> Any:
    """Recursively turn scalars, matrices and tuples into JSON-ready values."""
    if isinstance(obj, Scalar):
        return str(obj)
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_plain(x) for x in items]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    return str(obj)


def _scalar(x) -> Scalar:
    if isinstance(x, bool) or not isinstance(x, (int, str, dict)):
        raise MalformedInput(f"expected a scalar, got {x!r}")
    try:
        return Scalar.from_json(x)
    except (ValueError, TypeError) as exc:
        raise MalformedInput(str(exc)) from None


def _vector(xs, n: int | None, what: str) -> tuple[Scalar, ...]:
    if not isinstance(xs, list):
        raise MalformedInput(f"{what} must be a list")
    if n is not None and len(xs) != n:
        raise MalformedInput(f"{what} must have length {n}")
    return tuple(_scalar(x) for x in xs)


def _need(obj, key: str, what: str):
    if not isinstance(obj, dict):
        raise MalformedInput(f"{what} must be an object")
    if key not in obj:
        raise MalformedInput(f"{what} is missing '{key}'")
    return obj[key]


def matrix_to_json(M: Matrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "entries": [str(x) for x in M.entries]}


def matrix_from_json(obj, shape: tuple[int, int] | None = None, what: str = "matrix") -> Matrix:
    rows = _need(obj, "rows", what)
    cols = _need(obj, "cols", what)
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise MalformedInput(f"{what}: rows and cols must be non-negative integers")
    entries = _vector(_need(obj, "entries", what), rows * cols, f"{what} entries")
    if shape is not None and (rows, cols) != shape:
        raise MalformedInput(f"{what} must be {shape[0]}x{shape[1]}, got {rows}x{cols}")
    return Matrix(rows, cols, entries)


def algebra_to_json(A: Algebra) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.labels),
        "unit": None if A.unit is None else [str(x) for x in A.unit],
        "mult": [[str(x) for x in A.table[i][j]] for i in range(A.dim) for j in range(A.dim)],
        "star": None if A.star is None else matrix_to_json(A.star),
    }


def algebra_from_json(obj) -> Algebra:
    d = _need(obj, "dim", "algebra")
    if not isinstance(d, int) or d < 1:
        raise MalformedInput("algebra dim must be a positive integer")
    labels = obj.get("basis") or [f"e{i}" for i in range(d)]
    if not isinstance(labels, list) or len(labels) != d or not all(isinstance(x, str) for x in labels):
        raise MalformedInput(f"algebra basis must be {d} strings")
    mult = _need(obj, "mult", "algebra")
    if not isinstance(mult, list) or len(mult) != d * d:
        raise MalformedInput(f"algebra mult must list {d * d} products")
    flat = [_vector(v, d, f"product {n // d},{n % d}") for n, v in enumerate(mult)]
    table = [flat[i * d:(i + 1) * d] for i in range(d)]
    unit = obj.get("unit")
    unit = None if unit is None else _vector(unit, d, "unit")
    star = obj.get("star")
    star = None if star is None else matrix_from_json(star, (d, d), "star")
    try:
        return Algebra(table, unit=unit, labels=labels, star=star)
    except ShapeError as exc:
        raise MalformedInput(str(exc)) from None


@dataclass(frozen=True)
class Side:
    """One algebra with its coalgebra data; the antipode may be absent."""

    algebra: Algebra
    coproduct: Matrix
    counit: tuple
    integral: tuple
    antipode: Matrix | None = None

    @classmethod
    def from_fqh(cls, F: FQH) -> "Side":
        return cls(F.algebra, F.coproduct, F.counit, F.integral, F.antipode)

    def to_fqh(self) -> FQH:
        if self.antipode is None:
            raise MalformedInput("this side carries no antipode")
        return FQH(self.algebra, self.coproduct, self.counit, self.integral, self.antipode)


@dataclass(frozen=True)
class Bundle:
    name: str
    a: Side
    b: Side | None = None
    pairing: Matrix | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def pair(self) -> DualPair:
        if self.b is None or self.pairing is None:
            raise MalformedInput("bundle has no dual pair")
        return DualPair(self.a.algebra, self.b.algebra, self.pairing)


def side_to_json(s: Side) -> dict:
    return {
        "algebra": algebra_to_json(s.algebra),
        "coproduct": matrix_to_json(s.coproduct),
        "counit": [str(x) for x in s.counit],
        "integral": [str(x) for x in s.integral],
        "antipode": None if s.antipode is None else matrix_to_json(s.antipode),
    }


def side_from_json(obj) -> Side:
    A = algebra_from_json(_need(obj, "algebra", "side"))
    d = A.dim
    Delta = matrix_from_json(_need(obj, "coproduct", "side"), (d * d, d), "coproduct")
    eps = _vector(_need(obj, "counit", "side"), d, "counit")
    phi = _vector(_need(obj, "integral", "side"), d, "integral")
    S = obj.get("antipode")
    S = None if S is None else matrix_from_json(S, (d, d), "antipode")
    return Side(A, Delta, eps, phi, S)


def bundle_to_json(B: Bundle) -> dict:
    return {
        "schema": SCHEMA,
        "name": B.name,
        "a": side_to_json(B.a),
        "b": None if B.b is None else side_to_json(B.b),
        "pairing": None if B.pairing is None else matrix_to_json(B.pairing),
        "meta": to_plain(B.meta),
    }


def bundle_from_json(obj) -> Bundle:
    if not isinstance(obj, dict):
        raise MalformedInput("bundle must be a JSON object")
    if obj.get("schema") != SCHEMA:
        raise MalformedInput(f"unsupported schema {obj.get('schema')!r}; expected {SCHEMA!r}")
    a = side_from_json(_need(obj, "a", "bundle"))
    b = obj.get("b")
    b = None if b is None else side_from_json(b)
    P = obj.get("pairing")
    if P is not None:
        if b is None:
            raise MalformedInput("a pairing needs both sides")
        P = matrix_from_json(P, (a.algebra.dim, b.algebra.dim), "pairing")
    name = obj.get("name", "")
    meta = obj.get("meta")
    meta = {} if meta is None else meta
    if not isinstance(name, str) or not isinstance(meta, dict):
        raise MalformedInput("bundle name must be a string and meta an object")
    return Bundle(name, a, b, P, meta)


def certificate_to_json(cert: FQHCertificate) -> dict:
    out = {f: getattr(cert, f) for f in CERTIFICATE_FIELDS}
    out["witnesses"] = {k: to_plain(cert.witnesses[k]) for k in CERTIFICATE_FIELDS if k in cert.witnesses}
    out["info"] = to_plain(cert.info)
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def loads(text: str) -> Bundle:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    return bundle_from_json(obj)

