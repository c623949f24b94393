"""Fourier transform, dual integrals, the hypergroup verifier and dual objects."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    Algebra,
    Covector,
    Vector,
    compose_functional,
    dot,
    flip_matrix,
    gram_matrix,
    is_anti_isomorphism,
    is_faithful,
    is_positive,
    validate_algebra,
    validate_coproduct,
)
from .errors import PreconditionError, ShapeError
from .exactnum import Matrix, as_scalar, kron, rank
from .integrals import is_invariant, solve_antipode, verify_integral
from .pairing import DualPair, adjoint_map, induced_coproduct, induced_counit

__all__ = [
    "FQH",
    "FQHCertificate",
    "CERTIFICATE_FIELDS",
    "fourier_matrix",
    "fourier",
    "inverse_fourier",
    "dual_right_integral",
    "check_biduality",
    "check_plancherel",
    "dual_involution",
    "verify_fqh",
    "dual_fqh",
]


@dataclass(frozen=True)
class FQH:
    """Algebra, coproduct, counit, left integral and its antipode."""

    algebra: Algebra
    coproduct: Matrix
    counit: Covector
    integral: Covector
    antipode: Matrix
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        d = self.algebra.dim
        if self.coproduct.shape != (d * d, d) or self.antipode.shape != (d, d):
            raise ShapeError("FQH matrices do not match the algebra dimension")
        if len(self.counit) != d or len(self.integral) != d:
            raise ShapeError("FQH functionals do not match the algebra dimension")
        object.__setattr__(self, "counit", tuple(as_scalar(x) for x in self.counit))
        object.__setattr__(self, "integral", tuple(as_scalar(x) for x in self.integral))

    def certify(self) -> "FQHCertificate":
        return verify_fqh(self.algebra, self.coproduct, self.counit, self.integral)


CERTIFICATE_FIELDS = (
    "algebra_ok",
    "coassoc",
    "counit_law",
    "counit_hom",
    "delta_unital",
    "integral_faithful",
    "integral_equation",
    "antipode_anti_iso",
    "antipode_flips",
    "star_ok",
)


@dataclass(frozen=True)
class FQHCertificate:
    algebra_ok: bool
    coassoc: bool
    counit_law: bool
    counit_hom: bool
    delta_unital: bool
    integral_faithful: bool
    integral_equation: bool
    antipode_anti_iso: bool
    antipode_flips: bool
    star_ok: bool | None
    witnesses: dict = field(default_factory=dict, compare=False)
    antipode: Matrix | None = field(default=None, compare=False)
    info: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) is not False for f in CERTIFICATE_FIELDS)

    def failed(self) -> list[str]:
        return [f for f in CERTIFICATE_FIELDS if getattr(self, f) is False]

    def as_dict(self) -> dict:
        out = {f: getattr(self, f) for f in CERTIFICATE_FIELDS}
        out["witnesses"] = self.witnesses
        return out


# ---------------------------------------------------------------------------
# Fourier transform and the dual integral
# ---------------------------------------------------------------------------


def fourier_matrix(D: DualPair, phi: Sequence) -> Matrix:
    """Matrix of c -> b with <a, b> = phi(a c) for all a."""
    return D.P_inv @ gram_matrix(D.A, phi)


def fourier(D: DualPair, phi: Sequence, c: Sequence) -> Vector:
    if not is_faithful(D.A, phi):
        raise PreconditionError("phi is not faithful")
    return fourier_matrix(D, phi).apply(tuple(as_scalar(x) for x in c))


def inverse_fourier(D: DualPair, phi: Sequence, b: Sequence) -> Vector:
    if not is_faithful(D.A, phi):
        raise PreconditionError("phi is not faithful")
    return fourier_matrix(D, phi).inverse().apply(tuple(as_scalar(x) for x in b))


def dual_right_integral(D: DualPair, phi: Sequence, S: Matrix) -> Covector:
    """psi on B with psi(b) = eps(c) where b = phi(. c).

    The result is checked to be a faithful right integral on B whose
    antipode is the adjoint of S.
    """
    A, B = D.A, D.B
    phi = tuple(as_scalar(x) for x in phi)
    DA = induced_coproduct(D, "A")
    if not is_faithful(A, phi):
        raise PreconditionError("phi is not faithful")
    if not verify_integral(A, DA, phi, S, "left"):
        raise PreconditionError("phi is not a left integral with antipode S")
    if not is_anti_isomorphism(A, S):
        raise PreconditionError("S is not an anti-isomorphism")
    eps = induced_counit(D, "A")
    Finv = fourier_matrix(D, phi).inverse()
    psi = compose_functional(eps, Finv)
    SB = adjoint_map(D, S, "A")
    DB = induced_coproduct(D, "B")
    if not is_faithful(B, psi) or not verify_integral(B, DB, psi, SB, "right"):
        raise ArithmeticError("dual functional failed to be a faithful right integral")
    return psi


def check_biduality(D: DualPair, phi: Sequence, S: Matrix) -> bool:
    """Go to B and back; the round trip must close on phi exactly.

    psi (right integral on B) composed with the adjoint antipode is a left
    integral on B; its dual right integral on A, composed with S, is phi.
    """
    phi = tuple(as_scalar(x) for x in phi)
    psi = dual_right_integral(D, phi, S)
    SB = adjoint_map(D, S, "A")
    phi_B = compose_functional(psi, SB)
    psi_A = dual_right_integral(D.swap(), phi_B, SB)
    return compose_functional(psi_A, S) == phi


def check_plancherel(D: DualPair, phi: Sequence, psi: Sequence, extra: Sequence[Sequence] = ()) -> bool:
    """psi(b* b) = conj(phi(a* a)) for b = fourier(a), a over basis and extras.

    When phi is positive, positivity of psi is part of the check.
    """
    A, B = D.A, D.B
    if A.star is None or B.star is None:
        raise PreconditionError("Plancherel needs involutions on both sides")
    phi = tuple(as_scalar(x) for x in phi)
    psi = tuple(as_scalar(x) for x in psi)
    F = fourier_matrix(D, phi)
    samples = [A.basis(i) for i in range(A.dim)] + [tuple(as_scalar(x) for x in v) for v in extra]
    for a in samples:
        b = F.apply(a)
        lhs = dot(psi, B.multiply(B.star_of(b), b))
        rhs = dot(phi, A.multiply(A.star_of(a), a)).conj()
        if lhs != rhs:
            return False
    if is_positive(A, phi) and not is_positive(B, psi):
        return False
    return True


def dual_involution(D: DualPair, S: Matrix) -> Matrix:
    """J_B from <a, b*> = conj<S(a)*, b>."""
    JA = D.A.star
    if JA is None:
        raise PreconditionError("A has no involution")
    return D.P_inv @ (S.T() @ (JA.conj().T() @ D.P.conj()))


# ---------------------------------------------------------------------------
# the verifier
# ---------------------------------------------------------------------------


def verify_fqh(A: Algebra, Delta: Matrix, eps: Sequence, phi: Sequence) -> FQHCertificate:
    d = A.dim
    eps = tuple(as_scalar(x) for x in eps)
    phi = tuple(as_scalar(x) for x in phi)
    wit: dict = {}
    info: dict = {}

    alg = validate_algebra(A)
    if not alg.ok:
        wit["algebra_ok"] = alg.witnesses
    cop = validate_coproduct(A, Delta, eps)
    for name, key in (("coassoc", "coassociative"), ("counit_law", "counit_law"), ("delta_unital", "unital")):
        if key in cop.witnesses:
            wit[name] = cop.witnesses[key]
    info["homomorphism"] = cop.homomorphism
    info["coabelian"] = cop.coabelian

    bad_eps = [[i, j] for i in range(d) for j in range(d) if dot(eps, A.table[i][j]) != eps[i] * eps[j]]
    counit_hom = not bad_eps and A.unit is not None and dot(eps, A.unit) == 1
    if not counit_hom:
        wit["counit_hom"] = bad_eps or ["eps(1) != 1"]

    faithful = is_faithful(A, phi)
    if not faithful:
        wit["integral_faithful"] = [f"rank of Gram is {rank(gram_matrix(A, phi))} < {d}"]

    res = solve_antipode(A, Delta, phi, "left")
    info["antipode_status"] = res.status
    integral_equation = res.status == "unique"
    if not integral_equation:
        wit["integral_equation"] = {"status": res.status, "witness": list(res.witness) if res.witness else None,
                                    "freedom_dim": res.freedom_dim}
    S = res.S if integral_equation else None
    if S is not None:
        anti = is_anti_isomorphism(A, S) and A.unit is not None and S.apply(A.unit) == A.unit
        flips = Delta @ S == flip_matrix(d) @ (kron(S, S) @ Delta)
    else:
        anti = flips = False
    if not anti:
        wit["antipode_anti_iso"] = ["no unique antipode"] if S is None else ["S is not an anti-isomorphism fixing 1"]
    if not flips:
        wit["antipode_flips"] = ["no unique antipode"] if S is None else ["Delta S != flip (S x S) Delta"]

    star_ok = None
    if A.star is not None:
        star_ok = bool(cop.star_map)
        if not star_ok:
            wit["star_ok"] = cop.witnesses.get("star_map", [])

    if A.unit is not None:
        info["left_invariant"] = is_invariant(A, Delta, phi, "left")
    if A.star is not None and alg.star_ok:
        # reported only: positivity of phi o S is not expected in general
        info["integral_positive"] = is_positive(A, phi)
        if S is not None and anti:
            info["right_integral_positive"] = is_positive(A, compose_functional(phi, S))

    return FQHCertificate(
        algebra_ok=alg.ok,
        coassoc=cop.coassociative,
        counit_law=cop.counit_law,
        counit_hom=counit_hom,
        delta_unital=cop.unital,
        integral_faithful=faithful,
        integral_equation=integral_equation,
        antipode_anti_iso=anti,
        antipode_flips=flips,
        star_ok=star_ok,
        witnesses=wit,
        antipode=S,
        info=info,
    )


def dual_fqh(D: DualPair, F: FQH) -> FQH:
    """The dual hypergroup on the second algebra of D."""
    A = F.algebra
    if D.A.table != A.table or D.A.unit != A.unit:
        raise PreconditionError("the pair's first algebra is not the hypergroup's algebra")
    cert = F.certify()
    if not cert.ok:
        raise PreconditionError(f"input fails verification: {', '.join(cert.failed())}")
    D = DualPair(A, D.B, D.P)
    if induced_coproduct(D, "A") != F.coproduct:
        raise PreconditionError("pairing is not consistent with the coproduct")
    if induced_counit(D, "A") != F.counit:
        raise PreconditionError("pairing is not consistent with the counit")
    S = cert.antipode
    SB = adjoint_map(D, S, "A")
    psi = dual_right_integral(D, F.integral, S)
    phi_B = compose_functional(psi, SB)
    notes = []
    star = None
    if A.star is not None:
        if cert.star_ok and is_anti_isomorphism(A, S):
            star = dual_involution(D, S)
        else:
            notes.append("no dual involution: Delta is not a *-map or S is not anti-multiplicative")
    B = D.B.with_star(star)
    if star is not None:
        rep = validate_algebra(B)
        if not rep.star_ok:
            notes.append("dual involution failed the star axioms; dropped")
            B = D.B.with_star(None)
    return FQH(B, induced_coproduct(D, "B"), induced_counit(D, "B"), phi_B, SB, tuple(notes))
