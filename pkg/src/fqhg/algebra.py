"""Finite-dimensional algebras given by structure constants.

Conventions used throughout the package:

* an element is a tuple of coordinates in the basis ``e_0 .. e_{d-1}``;
* a linear functional is a covector (tuple of length d);
* a linear map is a d x d :class:`Matrix` acting on columns;
* a coproduct is a d^2 x d matrix whose column j holds Delta(e_j) in the
  basis e_i (x) e_k, with row index ``i*d + k``;
* an involution is a matrix J with ``a* = J @ conj(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import PreconditionError, ShapeError
from .exactnum import ONE, ZERO, Matrix, Scalar, as_scalar, is_psd_hermitian, kron, rank, solve
from .sampling import gaussian_integer_vector, make_rng

Vector = tuple[Scalar, ...]
Covector = tuple[Scalar, ...]

__all__ = [
    "Algebra",
    "AlgebraReport",
    "CoproductReport",
    "FaithfulSearch",
    "basis_vector",
    "dot",
    "evaluate",
    "compose_functional",
    "gram_matrix",
    "validate_algebra",
    "is_faithful",
    "represent_functional",
    "modular_automorphism",
    "is_positive",
    "validate_coproduct",
    "find_faithful_functional",
    "flip_matrix",
    "tensor",
    "tensor_mul",
    "tensor_star",
    "slice_right",
    "slice_left",
    "is_anti_isomorphism",
    "is_homomorphism",
]


def basis_vector(d: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(d))


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    if len(u) != len(v):
        raise ShapeError(f"length mismatch {len(u)} vs {len(v)}")
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


evaluate = dot


def compose_functional(omega: Covector, M: Matrix) -> Covector:
    """The covector of omega o M."""
    return tuple(dot(omega, M.col(j)) for j in range(M.cols))


def _vec(v: Sequence, d: int, what: str = "vector") -> Vector:
    if len(v) != d:
        raise ShapeError(f"{what} has length {len(v)}, expected {d}")
    return tuple(as_scalar(x) for x in v)


class Algebra:
    """A finite-dimensional algebra over Q(i).

    ``table[i][j]`` is the coordinate vector of e_i e_j.  ``unit`` may be
    ``None`` only for negative fixtures; every constructor in the package
    supplies one.
    """

    def __init__(
        self,
        table: Sequence[Sequence[Sequence]],
        unit: Sequence | None = None,
        labels: Sequence[str] | None = None,
        star: Matrix | None = None,
    ):
        d = len(table)
        if d == 0:
            raise ShapeError("zero-dimensional algebras are not supported")
        rows = []
        for i, row in enumerate(table):
            if len(row) != d:
                raise ShapeError(f"structure-constant row {i} has {len(row)} entries, expected {d}")
            rows.append(tuple(_vec(v, d, f"product e{i}e{j}") for j, v in enumerate(row)))
        self.dim = d
        self.table: tuple[tuple[Vector, ...], ...] = tuple(rows)
        self.unit: Vector | None = None if unit is None else _vec(unit, d, "unit")
        if labels is None:
            labels = [f"e{i}" for i in range(d)]
        if len(labels) != d:
            raise ShapeError("one label per basis element is required")
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        if star is not None and star.shape != (d, d):
            raise ShapeError(f"involution matrix must be {d}x{d}")
        self.star = star

    @classmethod
    def from_products(cls, dim: int, products: dict, unit=None, labels=None, star=None) -> "Algebra":
        """Build from a sparse dict ``{(i, j): coords}``; missing products are zero."""
        zero = tuple(ZERO for _ in range(dim))
        table = [[products.get((i, j), zero) for j in range(dim)] for i in range(dim)]
        return cls(table, unit=unit, labels=labels, star=star)

    def with_star(self, star: Matrix | None) -> "Algebra":
        return Algebra(self.table, self.unit, self.labels, star)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.table == other.table
            and self.unit == other.unit
            and self.labels == other.labels
            and self.star == other.star
        )

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis={list(self.labels)})"

    # basic operations -----------------------------------------------------

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def zero(self) -> Vector:
        return tuple(ZERO for _ in range(self.dim))

    def one(self) -> Vector:
        if self.unit is None:
            raise PreconditionError("algebra has no unit")
        return self.unit

    def multiply(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        d = self.dim
        x = _vec(x, d)
        y = _vec(y, d)
        acc = [ZERO] * d
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] = acc[k] + ab * c
        return tuple(acc)

    def star_of(self, x: Sequence[Scalar]) -> Vector:
        if self.star is None:
            raise PreconditionError("algebra has no involution")
        return self.star.apply(tuple(c.conj() for c in x))

    @cached_property
    def mult_matrix(self) -> Matrix:
        """d x d^2 matrix; column i*d+j is e_i e_j."""
        d = self.dim
        cols = [self.table[i][j] for i in range(d) for j in range(d)]
        return Matrix.from_columns(cols)

    def left_matrix(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of y -> x y."""
        d = self.dim
        return Matrix.from_columns([self.multiply(x, self.basis(j)) for j in range(d)])

    def right_matrix(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of y -> y x."""
        d = self.dim
        return Matrix.from_columns([self.multiply(self.basis(j), x) for j in range(d)])

    def is_abelian(self) -> bool:
        d = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(d) for j in range(i + 1, d))


# ---------------------------------------------------------------------------
# tensor helpers for A (x) A
# ---------------------------------------------------------------------------


def flip_matrix(d: int) -> Matrix:
    """The flip e_i (x) e_k -> e_k (x) e_i on A (x) A."""
    n = d * d
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(d):
        for k in range(d):
            rows[k * d + i][i * d + k] = ONE
    return Matrix._from_rows(n, n, rows)


def tensor(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return tuple(a * b for a in x for b in y)


def tensor_mul(A: Algebra, T: Sequence[Scalar], U: Sequence[Scalar]) -> Vector:
    """Product in the algebra A (x) A."""
    d = A.dim
    n = d * d
    if len(T) != n or len(U) != n:
        raise ShapeError("tensor_mul needs vectors of length dim^2")
    acc = [ZERO] * n
    nzT = [(idx // d, idx % d, t) for idx, t in enumerate(T) if t]
    nzU = [(idx // d, idx % d, u) for idx, u in enumerate(U) if u]
    tab = A.table
    for i, k, t in nzT:
        for i2, k2, u in nzU:
            left = tab[i][i2]
            right = tab[k][k2]
            tu = t * u
            for a, x in enumerate(left):
                if not x:
                    continue
                xt = x * tu
                base = a * d
                for b, y in enumerate(right):
                    if y:
                        acc[base + b] = acc[base + b] + xt * y
    return tuple(acc)


def tensor_star(A: Algebra, T: Sequence[Scalar]) -> Vector:
    """(x (x) y)* = x* (x) y*, extended conjugate-linearly."""
    if A.star is None:
        raise PreconditionError("algebra has no involution")
    J2 = kron(A.star, A.star)
    return J2.apply(tuple(c.conj() for c in T))


def slice_right(T: Sequence[Scalar], phi: Sequence[Scalar], d: int) -> Vector:
    """(iota (x) phi) T."""
    out = []
    for i in range(d):
        acc = ZERO
        for k in range(d):
            t = T[i * d + k]
            if t and phi[k]:
                acc = acc + t * phi[k]
        out.append(acc)
    return tuple(out)


def slice_left(T: Sequence[Scalar], phi: Sequence[Scalar], d: int) -> Vector:
    """(phi (x) iota) T."""
    out = []
    for k in range(d):
        acc = ZERO
        for i in range(d):
            t = T[i * d + k]
            if t and phi[i]:
                acc = acc + t * phi[i]
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraReport:
    associative: bool
    unital: bool
    star_ok: bool | None
    abelian: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.associative and self.unital and self.star_ok is not False

    def as_dict(self) -> dict:
        return {
            "associative": self.associative,
            "unital": self.unital,
            "star_ok": self.star_ok,
            "abelian": self.abelian,
            "witnesses": self.witnesses,
        }


def _find_unit(A: Algebra) -> Vector | None:
    d = A.dim
    blocks = []
    rhs = []
    for j in range(d):
        ej = A.basis(j)
        blocks.append(A.right_matrix(ej))  # e -> e e_j
        rhs.extend(ej)
        blocks.append(A.left_matrix(ej))  # e -> e_j e
        rhs.extend(ej)
    M = blocks[0]
    for b in blocks[1:]:
        M = M.vstack(b)
    sol = solve(M, Matrix.column(rhs))
    if sol.kind == "none":
        return None
    return sol.particular.col(0)


def validate_algebra(A: Algebra) -> AlgebraReport:
    d = A.dim
    tab = A.table
    wit: dict = {}
    bad_triples = []
    for i in range(d):
        for j in range(d):
            ij = tab[i][j]
            for k in range(d):
                left = A.multiply(ij, A.basis(k))
                right = A.multiply(A.basis(i), tab[j][k])
                if left != right:
                    bad_triples.append([i, j, k])
    if bad_triples:
        wit["associative"] = bad_triples

    if A.unit is not None:
        bad = [i for i in range(d) if A.multiply(A.unit, A.basis(i)) != A.basis(i)
               or A.multiply(A.basis(i), A.unit) != A.basis(i)]
        unital = not bad
        if bad:
            wit["unital"] = bad
    else:
        found = _find_unit(A) if not bad_triples else None
        unital = False
        wit["unital"] = ["no unit supplied"] + (["a unit exists but was not supplied"] if found else ["no element acts as a unit"])

    star_ok = None
    if A.star is not None:
        J = A.star
        star_ok = True
        if J @ J.conj() != Matrix.identity(d):
            star_ok = False
            wit["star_involutive"] = ["J conj(J) != I"]
        bad = []
        for i in range(d):
            for j in range(d):
                lhs = A.star_of(tab[i][j])
                rhs = A.multiply(A.star_of(A.basis(j)), A.star_of(A.basis(i)))
                if lhs != rhs:
                    bad.append([i, j])
        if bad:
            star_ok = False
            wit["star_antimultiplicative"] = bad

    abelian = A.is_abelian()
    return AlgebraReport(not bad_triples, unital, star_ok, abelian, wit)


# ---------------------------------------------------------------------------
# functionals
# ---------------------------------------------------------------------------


def gram_matrix(A: Algebra, omega: Sequence[Scalar]) -> Matrix:
    """M[i][j] = omega(e_i e_j)."""
    omega = _vec(omega, A.dim, "functional")
    return Matrix.from_rows([[dot(omega, A.table[i][j]) for j in range(A.dim)] for i in range(A.dim)])


def is_faithful(A: Algebra, omega: Sequence[Scalar]) -> bool:
    return rank(gram_matrix(A, omega)) == A.dim


def represent_functional(A: Algebra, omega: Sequence[Scalar], f: Sequence[Scalar]) -> tuple[Vector, Vector]:
    """Return (c_right, c_left) with f = omega(. c_right) = omega(c_left .)."""
    M = gram_matrix(A, omega)
    if rank(M) != A.dim:
        raise PreconditionError("omega is not faithful")
    f = Matrix.column(_vec(f, A.dim, "functional"))
    c_right = solve(M, f).particular.col(0)
    c_left = solve(M.T(), f).particular.col(0)
    return c_right, c_left


def is_homomorphism(A: Algebra, M: Matrix, B: Algebra | None = None) -> bool:
    B = B or A
    d = A.dim
    return all(
        M.apply(A.table[i][j]) == B.multiply(M.col(i), M.col(j)) for i in range(d) for j in range(d)
    )


def is_anti_isomorphism(A: Algebra, M: Matrix) -> bool:
    """S(ab) = S(b)S(a) on basis pairs and S bijective."""
    d = A.dim
    if M.shape != (d, d) or rank(M) != d:
        return False
    return all(
        M.apply(A.table[i][j]) == A.multiply(M.col(j), M.col(i)) for i in range(d) for j in range(d)
    )


def modular_automorphism(A: Algebra, omega: Sequence[Scalar]) -> Matrix:
    """The sigma with omega(a c) = omega(c sigma(a))."""
    M = gram_matrix(A, omega)
    if rank(M) != A.dim:
        raise PreconditionError("omega is not faithful")
    # column i solves M s = (row i of M)^T
    sigma = solve(M, M.T()).particular
    omega = tuple(as_scalar(x) for x in omega)
    if not is_homomorphism(A, sigma):
        raise AssertionError("modular automorphism failed to be multiplicative")
    if compose_functional(omega, sigma) != omega:
        raise AssertionError("modular automorphism does not preserve omega")
    return sigma


def is_positive(A: Algebra, omega: Sequence[Scalar]) -> bool:
    """omega(x* x) >= 0 for all x, via the Gram matrix omega(e_i* e_j)."""
    if A.star is None:
        raise PreconditionError("positivity needs an involution")
    omega = _vec(omega, A.dim, "functional")
    d = A.dim
    stars = [A.star_of(A.basis(i)) for i in range(d)]
    G = Matrix.from_rows([[dot(omega, A.multiply(stars[i], A.basis(j))) for j in range(d)] for i in range(d)])
    if G != G.H():
        return False
    return is_psd_hermitian(G)


@dataclass(frozen=True)
class FaithfulSearch:
    functional: Covector | None
    tries: int
    seed: int | None

    @property
    def status(self) -> str:
        return "found" if self.functional is not None else "none found (inconclusive)"


def find_faithful_functional(A: Algebra, budget: int = 64, seed: int | None = None) -> FaithfulSearch:
    """Sample Gaussian-integer covectors until one is faithful.

    A miss within the budget proves nothing, hence the "inconclusive" status.
    """
    rng = make_rng(seed)
    for t in range(1, budget + 1):
        omega = gaussian_integer_vector(rng, A.dim)
        if is_faithful(A, omega):
            return FaithfulSearch(omega, t, seed)
    return FaithfulSearch(None, budget, seed)


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoproductReport:
    coassociative: bool
    counit_law: bool
    unital: bool
    star_map: bool | None
    homomorphism: bool
    coabelian: bool
    witnesses: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "coassociative": self.coassociative,
            "counit_law": self.counit_law,
            "unital": self.unital,
            "star_map": self.star_map,
            "homomorphism": self.homomorphism,
            "coabelian": self.coabelian,
            "witnesses": self.witnesses,
        }


def _first_bad_column(M: Matrix, N: Matrix) -> list[int]:
    return [j for j in range(M.cols) if M.col(j) != N.col(j)]


def check_coassociative(Delta: Matrix, d: int) -> list[int]:
    Id = Matrix.identity(d)
    return _first_bad_column(kron(Delta, Id) @ Delta, kron(Id, Delta) @ Delta)


def check_counit_law(Delta: Matrix, eps: Sequence[Scalar], d: int) -> list[int]:
    Id = Matrix.identity(d)
    E = Matrix.from_rows([list(eps)])
    left = kron(E, Id) @ Delta
    right = kron(Id, E) @ Delta
    return sorted(set(_first_bad_column(left, Id)) | set(_first_bad_column(right, Id)))


def validate_coproduct(A: Algebra, Delta: Matrix, eps: Sequence[Scalar]) -> CoproductReport:
    d = A.dim
    if Delta.shape != (d * d, d):
        raise ShapeError(f"coproduct must be {d * d}x{d}, got {Delta.shape}")
    eps = _vec(eps, d, "counit")
    wit: dict = {}

    bad = check_coassociative(Delta, d)
    if bad:
        wit["coassociative"] = bad
    bad_c = check_counit_law(Delta, eps, d)
    if bad_c:
        wit["counit_law"] = bad_c

    if A.unit is None:
        unital = False
        wit["unital"] = ["algebra has no unit"]
    else:
        unital = Delta.apply(A.unit) == tensor(A.unit, A.unit)

    star_map = None
    if A.star is not None:
        lhs = Delta @ A.star
        rhs = kron(A.star, A.star) @ Delta.conj()
        bad_s = _first_bad_column(lhs, rhs)
        star_map = not bad_s
        if bad_s:
            wit["star_map"] = bad_s

    cols = [Delta.col(j) for j in range(d)]
    bad_h = []
    for i in range(d):
        for j in range(d):
            if Delta.apply(A.table[i][j]) != tensor_mul(A, cols[i], cols[j]):
                bad_h.append([i, j])
    if bad_h:
        wit["homomorphism"] = bad_h

    bad_f = _first_bad_column(flip_matrix(d) @ Delta, Delta)
    if bad_f:
        wit["coabelian"] = bad_f

    return CoproductReport(not bad, not bad_c, unital, star_map, not bad_h, not bad_f, wit)
