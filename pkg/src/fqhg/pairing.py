"""Dual pairs of algebras and everything a pairing induces.

A :class:`DualPair` holds algebras A and B of equal dimension and the matrix
``P[i][j] = <e_i, f_j>``.  The product of each side induces the coproduct of
the other, the unit of each side induces the counit of the other, and the
involutions (when present) induce the star-antipodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .algebra import (
    Algebra,
    Vector,
    dot,
    flip_matrix,
    is_anti_isomorphism,
)
from .errors import PreconditionError, ShapeError
from .exactnum import Matrix, Scalar, as_scalar, kron, rank

__all__ = [
    "DualPair",
    "StarPairingReport",
    "ACTIONS",
    "check_nondegenerate",
    "induced_coproduct",
    "induced_counit",
    "dual_algebra",
    "canonical_dual_pair",
    "act",
    "action_matrix",
    "action_properties",
    "star_antipode",
    "adjoint_map",
    "check_star_pairing",
]


class DualPair:
    def __init__(self, A: Algebra, B: Algebra, P: Matrix):
        if A.dim != B.dim:
            raise ShapeError(f"paired algebras must have equal dimension ({A.dim} vs {B.dim})")
        if P.shape != (A.dim, B.dim):
            raise ShapeError(f"pairing matrix must be {A.dim}x{B.dim}")
        self.A = A
        self.B = B
        self.P = P

    @property
    def dim(self) -> int:
        return self.A.dim

    def swap(self) -> "DualPair":
        return DualPair(self.B, self.A, self.P.T())

    def side(self, which: str) -> Algebra:
        return {"A": self.A, "B": self.B}[_side(which)]

    def pair(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
        return dot(a, self.P.apply(tuple(as_scalar(x) for x in b)))

    @cached_property
    def P_inv(self) -> Matrix:
        if rank(self.P) != self.dim:
            raise PreconditionError("pairing is degenerate")
        return self.P.inverse()

    @cached_property
    def P_inv_T(self) -> Matrix:
        return self.P_inv.T()

    def __repr__(self):
        return f"DualPair(dim={self.dim}, A={list(self.A.labels)}, B={list(self.B.labels)})"


def _side(which: str) -> str:
    w = str(which).upper()
    if w not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {which!r}")
    return w


def check_nondegenerate(D: DualPair) -> bool:
    return rank(D.P) == D.dim


def induced_coproduct(D: DualPair, side: str = "A") -> Matrix:
    """The coproduct on one side dual to the product on the other.

    <Delta(a), b (x) b'> = <a, b b'>, so
    Delta_A = (P^-T (x) P^-T) M_B^T P^T with M_B the multiplication matrix of B.
    """
    if _side(side) == "B":
        return induced_coproduct(D.swap(), "A")
    PiT = D.P_inv_T
    return kron(PiT, PiT) @ (D.B.mult_matrix.T() @ D.P.T())


def induced_counit(D: DualPair, side: str = "A") -> Vector:
    """eps_A(a) = <a, 1_B> and eps_B(b) = <1_A, b>."""
    if _side(side) == "B":
        return D.P.T().apply(D.A.one())
    return D.P.apply(D.B.one())


def dual_algebra(Delta: Matrix, eps: Sequence[Scalar], P: Matrix | None = None,
                 labels: Sequence[str] | None = None, star: Matrix | None = None) -> Algebra:
    """The algebra B whose product is dual to Delta under the pairing P.

    <e_i, f_j f_k> = <Delta(e_i), f_j (x) f_k>; the unit of B represents eps.
    """
    d = Delta.cols
    if P is None:
        P = Matrix.identity(d)
    Pinv = P.inverse()
    MB = Pinv @ (Delta.T() @ kron(P, P))
    table = [[MB.col(j * d + k) for k in range(d)] for j in range(d)]
    unit = Pinv.apply(tuple(as_scalar(x) for x in eps))
    if labels is None:
        labels = [f"f{j}" for j in range(d)]
    return Algebra(table, unit=unit, labels=labels, star=star)


def canonical_dual_pair(A: Algebra, Delta: Matrix, eps: Sequence[Scalar],
                        labels: Sequence[str] | None = None) -> DualPair:
    """Pair A with its linear dual, product from Delta and the dual basis."""
    if labels is None:
        labels = [f"{x}^" for x in A.labels]
    return DualPair(A, dual_algebra(Delta, eps, None, labels), Matrix.identity(A.dim))


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------

# canonical key -> (actor side, actee side)
ACTIONS = {
    "B>A": ("B", "A"),  # <b'|>a, b> = <a, b b'>
    "A<B": ("B", "A"),  # <a<|b, b'> = <a, b b'>
    "A>B": ("A", "B"),  # <a, a'|>b> = <a a', b>
    "B<A": ("A", "B"),  # <a', b<|a> = <a a', b>
}

_ALIASES = {"B▷A": "B>A", "A◁B": "A<B", "A▷B": "A>B", "B◁A": "B<A"}


def _action_key(which: str) -> str:
    key = _ALIASES.get(which, which)
    if key not in ACTIONS:
        raise ValueError(f"unknown action {which!r}; use one of {sorted(ACTIONS)}")
    return key


def action_matrix(D: DualPair, which: str, actor: Sequence[Scalar]) -> Matrix:
    """Matrix of the map actee -> action(actor, actee)."""
    key = _action_key(which)
    actor = tuple(as_scalar(x) for x in actor)
    if key == "B>A":
        return D.P_inv_T @ (D.B.right_matrix(actor).T() @ D.P.T())
    if key == "A<B":
        return D.P_inv_T @ (D.B.left_matrix(actor).T() @ D.P.T())
    if key == "A>B":
        return D.P_inv @ (D.A.right_matrix(actor).T() @ D.P)
    return D.P_inv @ (D.A.left_matrix(actor).T() @ D.P)


def act(D: DualPair, which: str, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """Evaluate an action with operands in written order.

    ``act(D, "B>A", b, a)`` is b|>a, ``act(D, "A<B", a, b)`` is a<|b,
    ``act(D, "A>B", a, b)`` is a|>b and ``act(D, "B<A", b, a)`` is b<|a.
    """
    key = _action_key(which)
    if key in ("B>A", "A>B"):
        actor, actee = x, y
    else:
        actee, actor = x, y
    return action_matrix(D, key, actor).apply(tuple(as_scalar(v) for v in actee))


def action_properties(D: DualPair) -> dict:
    """Faithfulness, unitality and non-degeneracy of each action by rank tests."""
    d = D.dim
    out = {}
    for key, (actor_side, actee_side) in ACTIONS.items():
        actor_alg = D.side(actor_side)
        mats = [action_matrix(D, key, actor_alg.basis(i)) for i in range(d)]
        # faithful: actor -> operator is injective
        vecs = Matrix.from_columns([m.entries for m in mats])
        faithful = rank(vecs) == d
        unital = action_matrix(D, key, actor_alg.one()) == Matrix.identity(d)
        stacked = mats[0]
        for m in mats[1:]:
            stacked = stacked.vstack(m)
        nondegenerate = rank(stacked) == d
        out[key] = {"faithful": faithful, "unital": unital, "nondegenerate": nondegenerate}
    return out


# ---------------------------------------------------------------------------
# star structure
# ---------------------------------------------------------------------------


def star_antipode(D: DualPair, side: str = "A") -> Matrix:
    """S with <S_A(a)*, b> = conj<a, b*> (and the mirrored rule on B)."""
    if _side(side) == "B":
        return star_antipode(D.swap(), "A")
    if D.A.star is None or D.B.star is None:
        raise PreconditionError("star_antipode needs involutions on both algebras")
    JA, JB, P = D.A.star, D.B.star, D.P
    # conj(S)^T J_A^T P = conj(P J_B)
    X = (P @ JB).conj() @ (JA.T() @ P).inverse()
    return X.H()


def adjoint_map(D: DualPair, S: Matrix, side: str = "A") -> Matrix:
    """The map T on the other side with <S a, b> = <a, T b> (side A given)."""
    if _side(side) == "B":
        return adjoint_map(D.swap(), S, "A")
    # S^T P = P T
    return D.P_inv @ (S.T() @ D.P)


@dataclass(frozen=True)
class StarPairingReport:
    delta_star_A: bool
    delta_star_B: bool
    S_anti_iso_A: bool
    S_anti_iso_B: bool
    S_flips_A: bool
    S_flips_B: bool
    adjointness: bool
    star_flip_A: bool
    star_flip_B: bool
    actions_1: bool
    actions_2: bool
    actions_3: bool
    witnesses: dict = field(default_factory=dict)

    FIELDS = (
        "delta_star_A", "delta_star_B", "S_anti_iso_A", "S_anti_iso_B",
        "S_flips_A", "S_flips_B", "adjointness", "star_flip_A", "star_flip_B",
        "actions_1", "actions_2", "actions_3",
    )

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) for f in self.FIELDS)

    def as_dict(self) -> dict:
        out = {f: getattr(self, f) for f in self.FIELDS}
        out["witnesses"] = self.witnesses
        return out


def _delta_star_ok(alg: Algebra, Delta: Matrix) -> bool:
    J = alg.star
    return Delta @ J == kron(J, J) @ Delta.conj()


def _flips(Delta: Matrix, S: Matrix, d: int) -> bool:
    return Delta @ S == flip_matrix(d) @ (kron(S, S) @ Delta)


def _star_flip(alg: Algebra, Delta: Matrix, S: Matrix) -> bool:
    """Delta(S(a)*) = flip(((S (x) S) Delta(a))*)."""
    J = alg.star
    lhs = Delta @ (J @ S.conj())
    rhs = flip_matrix(alg.dim) @ (kron(J, J) @ (kron(S, S) @ Delta).conj())
    return lhs == rhs


def _action_identities(D: DualPair, SA: Matrix, SB: Matrix) -> tuple[list, list, list]:
    A, B = D.A, D.B
    d = D.dim
    bad1, bad2, bad3 = [], [], []
    for i in range(d):
        a = A.basis(i)
        a_st = A.star_of(a)
        Sa = SA.col(i)
        Sa_st = A.star_of(Sa)
        for j in range(d):
            b = B.basis(j)
            b_st = B.star_of(b)
            Sb = SB.col(j)
            Sb_st = B.star_of(Sb)
            # S(b|>a)* = S(a)* <| b*  and  S(a|>b)* = S(b)* <| a*
            if A.star_of(SA.apply(act(D, "B>A", b, a))) != act(D, "A<B", Sa_st, b_st):
                bad1.append(["A", i, j])
            if B.star_of(SB.apply(act(D, "A>B", a, b))) != act(D, "B<A", Sb_st, a_st):
                bad1.append(["B", i, j])
            # (a<|b)* = a* <| S(b)*  and  (a|>b)* = S(a)* |> b*
            if A.star_of(act(D, "A<B", a, b)) != act(D, "A<B", a_st, Sb_st):
                bad2.append(["A", i, j])
            if B.star_of(act(D, "A>B", a, b)) != act(D, "A>B", Sa_st, b_st):
                bad2.append(["B", i, j])
            # S(S(b)|>a) = S(a)<|b  and  S(S(a)|>b) = S(b)<|a
            if SA.apply(act(D, "B>A", Sb, a)) != act(D, "A<B", Sa, b):
                bad3.append(["A", i, j])
            if SB.apply(act(D, "A>B", Sa, b)) != act(D, "B<A", Sb, a):
                bad3.append(["B", i, j])
    return bad1, bad2, bad3


def check_star_pairing(D: DualPair) -> StarPairingReport:
    """The full compatibility report for a pairing of *-algebras."""
    A, B = D.A, D.B
    if A.star is None or B.star is None:
        raise PreconditionError("star pairing report needs involutions on both algebras")
    d = D.dim
    DA = induced_coproduct(D, "A")
    DB = induced_coproduct(D, "B")
    SA = star_antipode(D, "A")
    SB = star_antipode(D, "B")
    wit: dict = {}
    adjoint = SA.T() @ D.P == D.P @ SB
    b1, b2, b3 = _action_identities(D, SA, SB)
    for name, bad in (("actions_1", b1), ("actions_2", b2), ("actions_3", b3)):
        if bad:
            wit[name] = bad
    return StarPairingReport(
        delta_star_A=_delta_star_ok(A, DA),
        delta_star_B=_delta_star_ok(B, DB),
        S_anti_iso_A=is_anti_isomorphism(A, SA),
        S_anti_iso_B=is_anti_isomorphism(B, SB),
        S_flips_A=_flips(DA, SA, d),
        S_flips_B=_flips(DB, SB, d),
        adjointness=adjoint,
        star_flip_A=_star_flip(A, DA, SA),
        star_flip_B=_star_flip(B, DB, SB),
        actions_1=not b1,
        actions_2=not b2,
        actions_3=not b3,
        witnesses=wit,
    )

