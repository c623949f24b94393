from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from fqhg.algebra import compose_functional, dot, gram_matrix, tensor
from fqhg.constructions import alpha_dual_pair, alpha_family, counterexample
from fqhg.duality import (
    CERTIFICATE_FIELDS,
    FQH,
    check_biduality,
    check_plancherel,
    dual_fqh,
    dual_right_integral,
    fourier,
    inverse_fourier,
    verify_fqh,
)
from fqhg.errors import PreconditionError
from fqhg.exactnum import Matrix, Scalar, vector
from fqhg.pairing import act, adjoint_map, canonical_dual_pair, induced_counit

small = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def test_fourier_of_half_u_is_unit(hecke_s3):
    D, A = hecke_s3.pair, hecke_s3.fqh_a
    assert fourier(D, A.integral, ["1/2", 0]) == D.B.one()
    assert inverse_fourier(D, A.integral, D.B.one()) == vector(["1/2", 0])
    with pytest.raises(PreconditionError):
        fourier(D, (1, 0), (1, 0))


@pytest.mark.parametrize("fx", ["hecke_s3", "free_z2", "matched_s3", "vw_pair"])
def test_fourier_module_law(fx, request):
    c = request.getfixturevalue(fx)
    D, F = c.pair, c.fqh_a
    SB_inv = adjoint_map(D, F.antipode, "A").inverse()
    n = D.dim
    for i in range(n):
        for j in range(n):
            cvec, d = D.A.basis(i), D.B.basis(j)
            lhs = fourier(D, F.integral, act(D, "A<B", cvec, SB_inv.col(j)))
            rhs = D.B.multiply(d, fourier(D, F.integral, cvec))
            assert lhs == rhs


@pytest.mark.parametrize("fx", ["hecke_s3", "free_z2", "matched_s3", "vw_pair"])
def test_dual_integral_matches_oracle(fx, request):
    c = request.getfixturevalue(fx)
    D, F = c.pair, c.fqh_a
    psi = dual_right_integral(D, F.integral, F.antipode)
    Finv = oracle.inverse(oracle.from_sympy(oracle.to_sympy(D.P).inv() * oracle.to_sympy(gram_matrix(D.A, F.integral))))
    assert psi == compose_functional(induced_counit(D, "A"), Finv)
    # psi(F(c)) = eps(c)
    for i in range(D.dim):
        assert dot(psi, fourier(D, F.integral, D.A.basis(i))) == F.counit[i]


@pytest.mark.parametrize("fx", ["hecke_s3", "free_z2", "matched_s3", "vw_pair"])
def test_biduality(fx, request):
    c = request.getfixturevalue(fx)
    assert check_biduality(c.pair, c.fqh_a.integral, c.fqh_a.antipode)


def test_biduality_alpha_minus_two():
    F = alpha_family(-2)
    D = canonical_dual_pair(F.algebra, F.coproduct, F.counit, labels=("1", "w"))
    assert check_biduality(D, F.integral, F.antipode)


def test_plancherel_values(hecke_s3):
    D, A = hecke_s3.pair, hecke_s3.fqh_a
    psi = dual_right_integral(D, A.integral, A.antipode)
    alg = A.algebra
    for a, expected in (((1, 0), 2), ((1, 1), 6)):
        a = vector(a)
        assert dot(A.integral, alg.multiply(alg.star_of(a), a)) == expected
        b = fourier(D, A.integral, a)
        assert dot(psi, D.B.multiply(D.B.star_of(b), b)) == expected
    assert check_plancherel(D, A.integral, psi)


@given(st.lists(st.tuples(small, small), min_size=1, max_size=3))
def test_plancherel_random(hecke_s3, pairs):
    D, A = hecke_s3.pair, hecke_s3.fqh_a
    psi = dual_right_integral(D, A.integral, A.antipode)
    extra = [(Scalar(x), Scalar(0, y)) for x, y in pairs]
    assert check_plancherel(D, A.integral, psi, extra)


def test_plancherel_detects_wrong_psi(hecke_s3):
    D, A = hecke_s3.pair, hecke_s3.fqh_a
    assert not check_plancherel(D, A.integral, (1, 1))


@pytest.mark.parametrize("fx", ["hecke_s3", "free_z2", "matched_s3", "vw_pair"])
def test_verify_both_sides(fx, request):
    c = request.getfixturevalue(fx)
    for F in (c.fqh_a, c.fqh_b):
        cert = F.certify()
        assert cert.ok, cert.failed()
        assert cert.antipode == F.antipode


def test_certificate_failures():
    c3 = counterexample("c3")
    cert = verify_fqh(c3.algebra, c3.coproduct, c3.counit, c3.phi)
    assert not cert.ok
    assert set(cert.failed()) >= {"integral_faithful", "integral_equation"}
    assert cert.witnesses["integral_equation"]["status"] == "no_solution"
    assert list(cert.as_dict())[:-1] == list(CERTIFICATE_FIELDS)
    ok = counterexample("c4", lam=0)
    assert verify_fqh(ok.algebra, ok.coproduct, ok.counit, ok.phi).ok


@pytest.mark.parametrize("fx", ["hecke_s3", "free_z2", "matched_s3", "vw_pair"])
def test_dual_fqh_reproduces_other_side(fx, request):
    c = request.getfixturevalue(fx)
    G = dual_fqh(c.pair, c.fqh_a)
    assert G == c.fqh_b or fx == "vw_pair"
    assert G.certify().ok
    assert G.coproduct == oracle.induced_coproduct(c.pair.B, c.pair.A, c.pair.P.T())
    back = dual_fqh(c.pair.swap(), G)
    assert back == c.fqh_a


def test_vw_dual_integral_is_scalar_multiple(vw_pair):
    G = dual_fqh(vw_pair.pair, vw_pair.fqh_a)
    closed = vw_pair.fqh_b.integral
    ratio = G.integral[1] / closed[1]
    assert ratio and tuple(ratio * x for x in closed) == G.integral
    assert G.coproduct == vw_pair.fqh_b.coproduct and G.antipode == vw_pair.fqh_b.antipode


def test_dual_of_alpha_minus_two_is_group_algebra():
    F = alpha_family(-2)
    D = canonical_dual_pair(F.algebra, F.coproduct, F.counit, labels=("1", "w"))
    G = dual_fqh(D, F)
    cert = G.certify()
    assert cert.ok and cert.info["homomorphism"]
    g = vector([1, 1])  # 1 + w with w^2 = -2w
    assert G.algebra.multiply(g, g) == G.algebra.one()
    assert G.coproduct.apply(g) == tensor(g, g)
    assert dual_fqh(D.swap(), G) == F


def test_dual_fqh_rejects_inconsistent_pair(hecke_s3):
    F = hecke_s3.fqh_a
    from fqhg.pairing import DualPair

    bad = DualPair(hecke_s3.pair.A, hecke_s3.pair.B, Matrix.diag([1, 2]))
    with pytest.raises(PreconditionError):
        dual_fqh(bad, F)
    broken = FQH(F.algebra, F.coproduct, F.counit, (1, 1), F.antipode)
    with pytest.raises(PreconditionError):
        dual_fqh(hecke_s3.pair, broken)


def test_dual_of_xy_pair():
    c = alpha_dual_pair("xy", 3)
    G = dual_fqh(c.pair, c.fqh_a)
    assert G.certify().ok
    assert G.coproduct == c.fqh_b.coproduct


def test_positivity_is_reported(hecke_s3):
    info = hecke_s3.fqh_a.certify().info
    assert info["integral_positive"] and info["right_integral_positive"]
    assert alpha_family(1).certify().info["integral_positive"] is False
    assert alpha_family("-3/2").certify().info["integral_positive"] is True
