"""Independent reference computations in sympy.

Nothing here calls the package's elimination code; results are compared
against the package in the tests.
"""

from __future__ import annotations

from itertools import combinations

import sympy as sp
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from fqhg.exactnum import Matrix, Scalar


def sym(x: Scalar):
    return sp.Rational(x.re.numerator, x.re.denominator) + sp.I * sp.Rational(x.im.numerator, x.im.denominator)


def unsym(z) -> Scalar:
    re, im = sp.expand(z).as_real_imag()
    return Scalar(str(sp.Rational(re)), str(sp.Rational(im)))


def to_sympy(M: Matrix) -> sp.Matrix:
    return sp.Matrix(M.rows, M.cols, [sym(x) for x in M.entries])


def from_sympy(M: sp.Matrix) -> Matrix:
    return Matrix(M.rows, M.cols, [unsym(x) for x in M])


def dm(M) -> DomainMatrix:
    """Exact matrix over Q(i) in sympy's polynomial-domain machinery."""
    if isinstance(M, Matrix):
        M = to_sympy(M)
    return DomainMatrix.from_Matrix(M).convert_to(QQ_I)


def rank(M: Matrix) -> int:
    return dm(M).rank()


def inverse(M: Matrix) -> Matrix:
    return from_sympy(dm(M).inv().to_Matrix())


def psd(M: Matrix) -> bool:
    """Hermitian and every principal minor non-negative."""
    S = to_sympy(M)
    if S != S.H:
        raise ValueError("not Hermitian")
    n = S.rows
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            minor = QQ_I.to_sympy(dm(S.extract(list(idx), list(idx))).det())
            if sp.re(minor) < 0:
                return False
    return True


def _mul(A, x, y):
    d = A.dim
    out = [sp.Integer(0)] * d
    for i in range(d):
        for j in range(d):
            if x[i] != 0 and y[j] != 0:
                for k in range(d):
                    out[k] += x[i] * y[j] * sym(A.table[i][j][k])
    return out


def induced_coproduct(A, B, P: Matrix) -> Matrix:
    """Solve <Delta(e_j), f_m (x) f_n> = <e_j, f_m f_n> for Delta, one column at a time."""
    d = A.dim
    Ps = to_sympy(P)
    K = sp.zeros(d * d, d * d)
    for m in range(d):
        for n in range(d):
            for i in range(d):
                for k in range(d):
                    K[m * d + n, i * d + k] = sp.expand(Ps[i, m] * Ps[k, n])
    cols = []
    for j in range(d):
        rhs = sp.Matrix([sp.expand(sum(sym(B.table[m][n][l]) * Ps[j, l] for l in range(d)))
                         for m in range(d) for n in range(d)])
        cols.append([unsym(v) for v in dm(K).lu_solve(dm(rhs)).to_Matrix()])
    return Matrix.from_columns(cols)


def antipode_solutions(A, Delta: Matrix, phi) -> list:
    """All S with S X_{a,c} = Y_{a,c} from first principles; [] if none."""
    d = A.dim
    ph = [sym(x) for x in phi]
    Dl = to_sympy(Delta)
    S = sp.Matrix(d, d, sp.symbols(f"s0:{d * d}"))
    eqs = []

    def leg(a):  # Delta(e_a) as dict (i, k) -> coefficient
        return {(i, k): Dl[i * d + k, a] for i in range(d) for k in range(d) if Dl[i * d + k, a] != 0}

    def phi_of(v):
        return sum(p * x for p, x in zip(ph, v))

    def e(i):
        return [sp.Integer(1) if j == i else sp.Integer(0) for j in range(d)]

    for a in range(d):
        for c in range(d):
            X = [sp.Integer(0)] * d
            for (i, k), t in leg(a).items():  # (iota (x) phi)(Delta(a)(1 (x) c))
                w = t * phi_of(_mul(A, e(k), e(c)))
                X[i] += w
            Y = [sp.Integer(0)] * d
            for (i, k), t in leg(c).items():  # (iota (x) phi)((1 (x) a) Delta(c))
                w = t * phi_of(_mul(A, e(a), e(k)))
                Y[i] += w
            SX = S * sp.Matrix(X)
            eqs.extend(SX[r] - Y[r] for r in range(d))
    sol = sp.linsolve(eqs, list(S))
    return list(sol)


def modular_automorphism(A, omega) -> Matrix:
    d = A.dim
    om = [sym(x) for x in omega]
    s = sp.Matrix(d, d, sp.symbols(f"m0:{d * d}"))
    eqs = []
    for i in range(d):
        sig = [s[k, i] for k in range(d)]
        for j in range(d):
            ej = [sp.Integer(1) if t == j else sp.Integer(0) for t in range(d)]
            ei = [sp.Integer(1) if t == i else sp.Integer(0) for t in range(d)]
            lhs = sum(o * x for o, x in zip(om, _mul(A, ei, ej)))
            rhs = sum(o * x for o, x in zip(om, _mul(A, ej, sig)))
            eqs.append(lhs - rhs)
    (sol,) = sp.linsolve(eqs, list(s))
    return from_sympy(sp.Matrix(d, d, list(sol)))


def solve_linear(M: Matrix, y) -> list:
    """Unique solution x of M x = y."""
    x = dm(M).lu_solve(dm(sp.Matrix([sym(v) for v in y]))).to_Matrix()
    return [unsym(v) for v in x]
