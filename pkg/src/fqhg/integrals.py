"""Invariant functionals, integrals and the linear system for the antipode.

For a functional phi on A with coproduct Delta, the left integral equation
asks for a linear S with

    S((iota (x) phi)(Delta(a)(1 (x) c))) = (iota (x) phi)((1 (x) a)Delta(c))

for all a, c.  Writing X_{a,c} and Y_{a,c} for the two slices, S is any
solution of S X = Y where X, Y stack the slices as d x d^2 matrices.  The
right-handed version mirrors every tensor leg.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    Algebra,
    Covector,
    Vector,
    compose_functional,
    dot,
    is_anti_isomorphism,
    slice_left,
    slice_right,
)
from .errors import PreconditionError, ShapeError
from .exactnum import ZERO, Matrix, as_scalar, first_inconsistent_row, null_space, rank, solve
from .pairing import DualPair, action_matrix, adjoint_map

__all__ = [
    "AntipodeResult",
    "is_invariant",
    "invariant_space",
    "integral_system",
    "solve_antipode",
    "verify_integral",
    "compose_right_integral",
    "find_cointegral",
    "normalized_cointegral",
    "modular_element",
    "rank_of_slices",
]


def _side(side: str) -> str:
    s = str(side).lower()
    if s not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return s


def _check(A: Algebra, Delta: Matrix, phi: Sequence) -> Covector:
    d = A.dim
    if Delta.shape != (d * d, d):
        raise ShapeError(f"coproduct must be {d * d}x{d}")
    if len(phi) != d:
        raise ShapeError(f"functional must have length {d}")
    return tuple(as_scalar(x) for x in phi)


def is_invariant(A: Algebra, Delta: Matrix, phi: Sequence, side: str = "left") -> bool:
    """(iota (x) phi)Delta(a) = phi(a)1, or (phi (x) iota)Delta(a) = phi(a)1."""
    phi = _check(A, Delta, phi)
    one = A.one()
    cut = slice_right if _side(side) == "left" else slice_left
    for j in range(A.dim):
        lhs = cut(Delta.col(j), phi, A.dim)
        if lhs != tuple(phi[j] * x for x in one):
            return False
    return True


def invariant_space(A: Algebra, Delta: Matrix, side: str = "left") -> list[Covector]:
    """Basis of all invariant functionals on the given side."""
    d = A.dim
    one = A.one()
    left = _side(side) == "left"
    rows = []
    for j in range(d):
        for i in range(d):
            row = [ZERO] * d
            for k in range(d):
                row[k] = Delta[i * d + k, j] if left else Delta[k * d + i, j]
            row[j] = row[j] - one[i]
            rows.append(row)
    M = Matrix.from_rows(rows)
    return [v.col(0) for v in null_space(M)]


def _shifted(A: Algebra, phi: Covector, c: int, right_mult: bool) -> Covector:
    """Covector of x -> phi(x e_c) (right_mult) or x -> phi(e_c x)."""
    d = A.dim
    tab = A.table
    if right_mult:
        return tuple(dot(phi, tab[k][c]) for k in range(d))
    return tuple(dot(phi, tab[c][k]) for k in range(d))


def integral_system(A: Algebra, Delta: Matrix, phi: Sequence, side: str = "left") -> tuple[Matrix, Matrix]:
    """The d x d^2 matrices X and Y; column a*d + c holds X_{a,c} and Y_{a,c}."""
    phi = _check(A, Delta, phi)
    d = A.dim
    cols_D = [Delta.col(j) for j in range(d)]
    Xs, Ys = [], []
    if _side(side) == "left":
        phi_c = [_shifted(A, phi, c, True) for c in range(d)]   # phi(. c)
        phi_a = [_shifted(A, phi, a, False) for a in range(d)]  # phi(a .)
        for a in range(d):
            for c in range(d):
                Xs.append(slice_right(cols_D[a], phi_c[c], d))
                Ys.append(slice_right(cols_D[c], phi_a[a], d))
    else:
        psi_c = [_shifted(A, phi, c, False) for c in range(d)]  # psi(c .)
        psi_a = [_shifted(A, phi, a, True) for a in range(d)]   # psi(. a)
        for a in range(d):
            for c in range(d):
                Xs.append(slice_left(cols_D[a], psi_c[c], d))
                Ys.append(slice_left(cols_D[c], psi_a[a], d))
    return Matrix.from_columns(Xs), Matrix.from_columns(Ys)


@dataclass(frozen=True)
class AntipodeResult:
    status: str  # no_solution | unique | non_unique
    S: Matrix | None
    freedom_dim: int
    witness: tuple[int, int] | None = None
    rank_X: int = 0

    @property
    def unique(self) -> bool:
        return self.status == "unique"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "S": None if self.S is None else self.S.to_json(),
            "freedom_dim": self.freedom_dim,
            "witness": None if self.witness is None else list(self.witness),
        }


def solve_antipode(A: Algebra, Delta: Matrix, phi: Sequence, side: str = "left") -> AntipodeResult:
    X, Y = integral_system(A, Delta, phi, side)
    d = A.dim
    XT, YT = X.T(), Y.T()
    sol = solve(XT, YT)
    r = d - len(sol.null_basis) if sol.kind != "none" else rank(X)
    if sol.kind == "none":
        row = first_inconsistent_row(XT, YT)
        return AntipodeResult("no_solution", None, 0, (row // d, row % d), r)
    S = sol.particular.T()
    if sol.kind == "unique":
        return AntipodeResult("unique", S, 0, None, r)
    return AntipodeResult("non_unique", S, d * (d - r), None, r)


def verify_integral(A: Algebra, Delta: Matrix, phi: Sequence, S: Matrix, side: str = "left",
                    pair: DualPair | None = None) -> bool:
    """Check the integral equation for S on all basis pairs.

    With a dual pair whose first algebra is A, the equivalent pairing form
    phi((a <| S_B(b)) c) = phi(a (c <| b)) (or its right-handed mirror
    psi(c (S_B(b) |> a)) = psi((b |> c) a)) is checked on all basis triples,
    S_B being the adjoint of S.
    """
    phi = _check(A, Delta, phi)
    d = A.dim
    if S.shape != (d, d):
        raise ShapeError("S must be a dim x dim matrix")
    X, Y = integral_system(A, Delta, phi, side)
    if S @ X != Y:
        return False
    if pair is None:
        return True
    if pair.A.table != A.table:
        raise PreconditionError("pair's first algebra must be A")
    SB = adjoint_map(pair, S, "A")
    B = pair.B
    left = _side(side) == "left"
    key = "A<B" if left else "B>A"
    for j in range(d):
        M_Sb = action_matrix(pair, key, SB.col(j))
        M_b = action_matrix(pair, key, B.basis(j))
        for i in range(d):
            a = A.basis(i)
            for k in range(d):
                c = A.basis(k)
                if left:
                    lhs = dot(phi, A.multiply(M_Sb.col(i), c))
                    rhs = dot(phi, A.multiply(a, M_b.col(k)))
                else:
                    lhs = dot(phi, A.multiply(c, M_Sb.col(i)))
                    rhs = dot(phi, A.multiply(M_b.col(k), a))
                if lhs != rhs:
                    return False
    return True


def compose_right_integral(A: Algebra, phi: Sequence, S: Matrix) -> Covector:
    """psi = phi o S, a right integral with the same antipode."""
    if not is_anti_isomorphism(A, S):
        raise PreconditionError("S is not an anti-isomorphism")
    return compose_functional(tuple(as_scalar(x) for x in phi), S)


def _check_counit_hom(B: Algebra, eps: Covector) -> None:
    d = B.dim
    ok = dot(eps, B.one()) == 1 and all(
        dot(eps, B.table[i][j]) == eps[i] * eps[j] for i in range(d) for j in range(d)
    )
    if not ok:
        raise PreconditionError("counit is not a homomorphism")


def find_cointegral(B: Algebra, eps: Sequence, side: str = "left") -> list[Vector]:
    """Basis of {h : b h = eps(b) h} (left), {h : h b = eps(b) h} (right) or both."""
    eps = tuple(as_scalar(x) for x in eps)
    if len(eps) != B.dim:
        raise ShapeError("counit length mismatch")
    _check_counit_hom(B, eps)
    d = B.dim
    side = str(side).lower()
    if side not in ("left", "right", "both"):
        raise ValueError("side must be left, right or both")
    Id = Matrix.identity(d)
    blocks = []
    for i in range(d):
        ei = B.basis(i)
        if side in ("left", "both"):
            blocks.append(B.left_matrix(ei) - Id.scale(eps[i]))
        if side in ("right", "both"):
            blocks.append(B.right_matrix(ei) - Id.scale(eps[i]))
    M = blocks[0]
    for blk in blocks[1:]:
        M = M.vstack(blk)
    return [v.col(0) for v in null_space(M)]


def normalized_cointegral(B: Algebra, eps: Sequence) -> Vector | None:
    """The two-sided cointegral h with eps(h) = 1, when it is unique."""
    sols = find_cointegral(B, eps, "both")
    if len(sols) != 1:
        return None
    h = sols[0]
    e = dot(tuple(as_scalar(x) for x in eps), h)
    if not e:
        return None
    inv = e.inverse()
    return tuple(x * inv for x in h)


def modular_element(A: Algebra, Delta: Matrix, phi: Sequence, S: Matrix, phi2: Sequence) -> Vector:
    """delta with (phi2 (x) iota)Delta(a) = phi(a) delta."""
    phi = _check(A, Delta, phi)
    phi2 = _check(A, Delta, phi2)
    d = A.dim
    if not verify_integral(A, Delta, phi, S, "left"):
        raise PreconditionError("phi is not a left integral with antipode S")
    if S.apply(A.one()) != A.one():
        raise PreconditionError("S(1) != 1")
    if not is_invariant(A, Delta, phi2, "left"):
        raise PreconditionError("phi' is not left invariant")
    i0 = next((i for i in range(d) if phi[i]), None)
    if i0 is None:
        raise PreconditionError("phi is zero")
    inv = phi[i0].inverse()
    c0 = tuple(x * inv for x in A.basis(i0))
    delta = slice_left(Delta.apply(c0), phi2, d)
    for j in range(d):
        lhs = slice_left(Delta.col(j), phi2, d)
        if lhs != tuple(phi[j] * x for x in delta):
            raise ArithmeticError(f"modular element identity fails at basis {j}")
        if dot(phi2, S.col(j)) != dot(phi, A.multiply(A.basis(j), delta)):
            raise ArithmeticError(f"phi'(S(a)) = phi(a delta) fails at basis {j}")
    return delta


def rank_of_slices(A: Algebra, Delta: Matrix, phi: Sequence, side: str = "left") -> int:
    X, _ = integral_system(A, Delta, phi, side)
    return rank(X)

