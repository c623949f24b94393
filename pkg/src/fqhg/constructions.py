"""Generators for concrete hypergroups, dual pairs and counterexamples.

* Hecke pairs: functions on the double cosets of a subgroup H of G, paired
  with the compressed group algebra u C[G] u.
* The two-dimensional alpha family and its three pairings.
* Small abelian and matrix counterexamples separating invariant functionals
  from integrals.
* The two-subgroup construction: for H, K with trivial intersection, the set
  Omega of pairs (h, k) with hk in KH and the two groupoid algebras on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, Covector, Vector, basis_vector
from .duality import FQH
from .errors import PreconditionError
from .exactnum import ONE, ZERO, Matrix, Scalar, as_scalar
from .groups import FiniteGroup, Subgroup, double_cosets, set_products
from .pairing import DualPair, canonical_dual_pair, induced_coproduct, induced_counit

__all__ = [
    "Construction",
    "Counterexample",
    "OmegaStructure",
    "hecke_pair",
    "hecke_expectation",
    "restricted_group_coproduct",
    "group_like_check",
    "alpha_family",
    "alpha_dual_pair",
    "counterexample",
    "omega_from_group",
    "omega_free_product",
    "twosub_pair",
    "free_product_ambient",
    "matrix_unit_span",
]


@dataclass(frozen=True)
class Construction:
    """A dual pair together with the hypergroup data on each side."""

    name: str
    pair: DualPair
    fqh_a: FQH
    fqh_b: FQH
    meta: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Counterexample:
    name: str
    algebra: Algebra
    coproduct: Matrix
    counit: Covector
    phi: Covector
    pair: DualPair | None = None
    meta: dict = field(default_factory=dict, compare=False)


def _perm_matrix(images: Sequence[int]) -> Matrix:
    """Matrix sending e_j to e_{images[j]}."""
    n = len(images)
    rows = [[ZERO] * n for _ in range(n)]
    for j, i in enumerate(images):
        rows[i][j] = ONE
    return Matrix._from_rows(n, n, rows)


def _coproduct_from_dict(d: int, cols: Sequence[dict]) -> Matrix:
    """cols[j] maps (i, k) -> coefficient of e_i (x) e_k in Delta(e_j)."""
    rows = [[ZERO] * d for _ in range(d * d)]
    for j, terms in enumerate(cols):
        for (i, k), c in terms.items():
            rows[i * d + k][j] = rows[i * d + k][j] + as_scalar(c)
    return Matrix._from_rows(d * d, d, rows)


def _idempotent_table(d: int) -> list[list[Vector]]:
    return [[basis_vector(d, i) if i == j else tuple([ZERO] * d) for j in range(d)] for i in range(d)]


# ---------------------------------------------------------------------------
# Hecke pairs
# ---------------------------------------------------------------------------


class _GroupAlgebra:
    """Just enough of C[G] for the dual Hecke side: dense coefficient lists."""

    def __init__(self, G: FiniteGroup):
        self.G = G

    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> list[Scalar]:
        G = self.G
        out = [ZERO] * G.order
        for g, a in enumerate(x):
            if not a:
                continue
            row = G.table[g]
            for h, b in enumerate(y):
                if b:
                    out[row[h]] = out[row[h]] + a * b
        return out

    def delta(self, g: int) -> list[Scalar]:
        v = [ZERO] * self.G.order
        v[g] = ONE
        return v

    def average(self, members: Sequence[int]) -> list[Scalar]:
        w = Scalar(Fraction(1, len(members)))
        v = [ZERO] * self.G.order
        for h in members:
            v[h] = w
        return v


def _coset_index(G: FiniteGroup, cosets: Sequence[Sequence[int]]) -> list[int]:
    where = [0] * G.order
    for n, D in enumerate(cosets):
        for g in D:
            where[g] = n
    return where


def hecke_pair(G: FiniteGroup, H: Subgroup, labels_a: Sequence[str] | None = None,
               labels_b: Sequence[str] | None = None) -> Construction:
    """The double-coset hypergroup of (G, H) and its dual u C[G] u."""
    if H.parent != G:
        raise PreconditionError("H must be a subgroup of G")
    Ds = double_cosets(G, H)
    m = len(Ds)
    n = H.order
    where = _coset_index(G, Ds)
    inv_of = [where[G.inv(D[0])] for D in Ds]
    e_idx = where[G.identity]
    reps = [G.labels[D[0]] for D in Ds]
    labels_a = list(labels_a) if labels_a else [f"χ[{r}]" for r in reps]
    labels_b = list(labels_b) if labels_b else [f"b[{r}]" for r in reps]

    # A: functions constant on double cosets, pointwise product
    A = Algebra(_idempotent_table(m), unit=[ONE] * m, labels=labels_a, star=Matrix.identity(m))
    inv_n = Fraction(1, n)
    cols: list[dict] = [dict() for _ in range(m)]
    for a, D1 in enumerate(Ds):
        for b, D2 in enumerate(Ds):
            counts = None
            for p in D1:
                for q in D2:
                    c = [0] * m
                    for k in H.members:
                        c[where[G.prod(p, k, q)]] += 1
                    if counts is None:
                        counts = c
                    elif c != counts:
                        raise ArithmeticError("Hecke coproduct depends on the representatives")
            for target, cnt in enumerate(counts):
                if cnt:
                    cols[target][(a, b)] = Scalar(cnt * inv_n)
    Delta_A = _coproduct_from_dict(m, cols)
    eps_A = tuple(ONE if i == e_idx else ZERO for i in range(m))
    phi_A = tuple(Scalar(len(D)) for D in Ds)
    S_A = _perm_matrix(inv_of)

    # B: the elements b_D = u l_p u computed inside C[G]
    CG = _GroupAlgebra(G)
    u = CG.average(H.members)
    bvec = [CG.mul(CG.mul(u, CG.delta(D[0])), u) for D in Ds]

    def coords(z: Sequence[Scalar]) -> Vector:
        out = []
        for D in Ds:
            vals = {z[g] for g in D}
            if len(vals) != 1:
                raise ArithmeticError("element of u C[G] u is not constant on a double coset")
            out.append(next(iter(vals)) * len(D))
        back = [ZERO] * G.order
        for c, D in zip(out, Ds):
            for g in D:
                back[g] = c / len(D)
        if back != list(z):
            raise ArithmeticError("element lies outside u C[G] u")
        return tuple(out)

    table_B = [[coords(CG.mul(bvec[i], bvec[j])) for j in range(m)] for i in range(m)]
    unit_B = coords(u)
    B = Algebra(table_B, unit=unit_B, labels=labels_b, star=_perm_matrix(inv_of))

    # pairing <f, l_g> = f(g), extended linearly
    P = Matrix.from_rows([[sum((bvec[j][g] for g in Ds[i]), ZERO) for j in range(m)] for i in range(m)])

    # Delta(b) = (u (x) u) Delta_0(b) (u (x) u) with Delta_0(l_g) = l_g (x) l_g
    cols_B: list[dict] = []
    for D_idx in range(m):
        terms: dict = {}
        for g, c in enumerate(bvec[D_idx]):
            if c:
                t = where[g]
                terms[(t, t)] = terms.get((t, t), ZERO) + c
        cols_B.append(terms)
    Delta_B = _coproduct_from_dict(m, cols_B)
    eps_B = tuple(sum(bvec[j], ZERO) for j in range(m))
    phi_B = tuple(bvec[j][G.identity] for j in range(m))
    S_B = Matrix.from_columns([coords([bvec[j][G.inv(g)] for g in range(G.order)]) for j in range(m)])

    pair = DualPair(A, B, P)
    meta = {
        "group": G.name,
        "subgroup": H.labels(),
        "double_cosets": [[G.labels[g] for g in D] for D in Ds],
        "n": n,
    }
    return Construction(
        f"hecke {G.name} <{','.join(H.labels())}>",
        pair,
        FQH(A, Delta_A, eps_A, phi_A, S_A),
        FQH(B, Delta_B, eps_B, phi_B, S_B),
        meta,
    )


def hecke_expectation(G: FiniteGroup, H: Subgroup) -> Matrix:
    """E(f)(p) = (1/n^2) sum_{h,k in H} f(h p k) on functions on G."""
    n = H.order
    w = Scalar(Fraction(1, n * n))
    rows = [[ZERO] * G.order for _ in range(G.order)]
    for p in range(G.order):
        for h in H.members:
            for k in H.members:
                g = G.prod(h, p, k)
                rows[p][g] = rows[p][g] + w
    return Matrix._from_rows(G.order, G.order, rows)


def restricted_group_coproduct(G: FiniteGroup, H: Subgroup) -> Matrix | None:
    """Delta_0(f)(p, q) = f(pq) on double-coset functions, if it stays inside.

    Returns ``None`` when f(pq) depends on the representatives, i.e. when
    Delta_0 does not map A into A (x) A.
    """
    Ds = double_cosets(G, H)
    m = len(Ds)
    where = _coset_index(G, Ds)
    cols: list[dict] = [dict() for _ in range(m)]
    for a, D1 in enumerate(Ds):
        for b, D2 in enumerate(Ds):
            targets = {where[G.mul(p, q)] for p in D1 for q in D2}
            if len(targets) != 1:
                return None
            cols[targets.pop()][(a, b)] = ONE
    return _coproduct_from_dict(m, cols)


def group_like_check(G: FiniteGroup, H: Subgroup) -> bool:
    """Delta_0(u)(1 (x) u) = Delta_0(u)(u (x) 1) = u (x) u in C[G] (x) C[G]."""
    CG = _GroupAlgebra(G)
    u = CG.average(H.members)
    w = Scalar(Fraction(1, H.order))

    def tmul(T: dict, U: dict) -> dict:
        out: dict = {}
        for (a, b), x in T.items():
            for (c, d), y in U.items():
                key = (G.mul(a, c), G.mul(b, d))
                out[key] = out.get(key, ZERO) + x * y
        return {k: v for k, v in out.items() if v}

    delta_u = {(h, h): w for h in H.members}
    one_u = {(G.identity, h): w for h in H.members}
    u_one = {(h, G.identity): w for h in H.members}
    u_u = {(h, k): w * w for h in H.members for k in H.members}
    return tmul(delta_u, one_u) == u_u and tmul(delta_u, u_one) == u_u and bool(u)


# ---------------------------------------------------------------------------
# the alpha family
# ---------------------------------------------------------------------------


def _rational(alpha) -> Scalar:
    a = as_scalar(alpha)
    if not a.is_real():
        raise PreconditionError("α must be rational")
    return a


def _primitive_like(alpha: Scalar) -> Matrix:
    """Delta(1) = 1 (x) 1 and Delta(t) = t (x) 1 + 1 (x) t + alpha t (x) t on basis [1, t]."""
    cols = [{(0, 0): ONE}, {(1, 0): ONE, (0, 1): ONE}]
    if alpha:
        cols[1][(1, 1)] = alpha
    return _coproduct_from_dict(2, cols)


def _two_dim(square: int, labels: Sequence[str]) -> Algebra:
    """span{1, t} with t^2 = t (square=1) or t^2 = 0 (square=0)."""
    t = (ZERO, ONE) if square else (ZERO, ZERO)
    table = [[(ONE, ZERO), (ZERO, ONE)], [(ZERO, ONE), t]]
    return Algebra(table, unit=(ONE, ZERO), labels=labels, star=Matrix.identity(2))


def alpha_family(alpha, allow_degenerate: bool = False) -> FQH:
    """span{1, v}, v^2 = v, Delta(v) = v(x)1 + 1(x)v + alpha v(x)v, phi(1) = -alpha, phi(v) = 1."""
    a = _rational(alpha)
    if a == -1 and not allow_degenerate:
        raise PreconditionError("α=−1 forbidden: φ cannot be faithful")
    A = _two_dim(1, ("1", "v"))
    return FQH(A, _primitive_like(a), (ONE, ZERO), (-a, ONE), Matrix.identity(2))


def alpha_dual_pair(kind: str, alpha=1) -> Construction:
    """The pairings {v, w}, {v, y} and {x, y} with <t, t'> = 1/alpha on the generators."""
    a = _rational(alpha)
    if a == 0:
        raise PreconditionError("α≠0 required: the pairing ⟨t,t′⟩=1/α is undefined at α=0")
    kind = kind.lower()
    P = Matrix.diag([ONE, a.inverse()])
    S = Matrix.identity(2)
    eps = (ONE, ZERO)
    if kind == "vw":
        if a == -1:
            raise PreconditionError("α=−1 forbidden: φ cannot be faithful")
        A = _two_dim(1, ("1", "v"))
        B = _two_dim(1, ("1", "w"))
        fa = FQH(A, _primitive_like(a), eps, (-a, ONE), S)
        fb = FQH(B, _primitive_like(a), eps, (-a, ONE), S)
    elif kind == "vy":
        A = _two_dim(1, ("1", "v"))
        B = _two_dim(0, ("1", "y"))
        fa = FQH(A, _primitive_like(ZERO), eps, (ZERO, ONE), S)
        fb = FQH(B, _primitive_like(a), eps, (-a, ONE), S)
    elif kind == "xy":
        A = _two_dim(0, ("1", "x"))
        B = _two_dim(0, ("1", "y"))
        fa = FQH(A, _primitive_like(ZERO), eps, (ZERO, ONE), S)
        fb = FQH(B, _primitive_like(ZERO), eps, (ZERO, ONE), S)
    else:
        raise PreconditionError(f"unknown family kind {kind!r}; use vw, vy or xy")
    return Construction(f"family {kind} alpha={a}", DualPair(A, B, P), fa, fb, {"kind": kind, "alpha": str(a)})


# ---------------------------------------------------------------------------
# counterexamples
# ---------------------------------------------------------------------------


def _diag_pair(vectors: Sequence[Sequence], labels_a: Sequence[str], labels_b: Sequence[str]) -> DualPair:
    """C^n paired with C^n so that the listed elements of A are dual to the idempotents of B."""
    n = len(vectors)
    Q = Matrix.from_columns([[as_scalar(x) for x in v] for v in vectors])
    P = Q.inverse().T()
    A = Algebra(_idempotent_table(n), unit=[ONE] * n, labels=labels_a, star=Matrix.identity(n))
    B = Algebra(_idempotent_table(n), unit=[ONE] * n, labels=labels_b, star=Matrix.identity(n))
    return DualPair(A, B, P)


def _from_pair(name: str, D: DualPair, meta: dict | None = None) -> Counterexample:
    phi = D.P.col(0)  # phi(a) = <a, h> with h the first idempotent of B
    return Counterexample(name, D.A, induced_coproduct(D, "A"), induced_counit(D, "A"), phi, D, meta or {})


def counterexample(name: str, **params) -> Counterexample:
    """``groupoid2``, ``c3``, ``c4`` (param ``lam``) or ``m2`` (params ``p``, ``q``)."""
    key = name.lower()
    if key == "groupoid2":
        A = Algebra(_idempotent_table(2), unit=[ONE, ONE], labels=("p", "q"), star=Matrix.identity(2))
        Delta = _coproduct_from_dict(2, [{(0, 0): ONE}, {(1, 1): ONE}])
        eps = (ONE, ONE)
        D = canonical_dual_pair(A, Delta, eps, labels=("x", "y"))
        phi = tuple(as_scalar(x) for x in params.get("phi", (1, 2)))
        return Counterexample("groupoid2", A, Delta, eps, phi, D)
    if key == "c3":
        D = _diag_pair([(1, 1, 1), (1, 1, -1), (1, -1, 1)], ("e1", "e2", "e3"), ("h", "x", "y"))
        return _from_pair("c3", D)
    if key == "c4":
        lam = as_scalar(params.get("lam", 0))
        if not lam.is_real():
            raise PreconditionError("λ must be rational")
        w = [1 + lam, -1 + lam, 1 + lam, -1 + lam]
        D = _diag_pair([(1, 1, 1, 1), (1, 1, -1, -1), (1, -1, -1, 1), w], ("e1", "e2", "e3", "e4"), ("h", "x", "y", "z"))
        return _from_pair("c4", D, {"lambda": str(lam)})
    if key == "m2":
        p = as_scalar(params.get("p", 1))
        q = as_scalar(params.get("q", 2))
        for cond, bad in (("p≠q", p == q), ("p≠−q", p == -q), ("p≠0", p == 0), ("q≠0", q == 0)):
            if bad:
                raise PreconditionError(f"m2 needs {cond}")
        # basis e11, e12, e21, e22 with e_ij e_kl = delta_jk e_il
        units = [(0, 0), (0, 1), (1, 0), (1, 1)]
        products = {}
        for x, (i, j) in enumerate(units):
            for y, (k, l) in enumerate(units):
                if j == k:
                    products[(x, y)] = basis_vector(4, units.index((i, l)))
        A = Algebra.from_products(4, products, unit=(1, 0, 0, 1), labels=("e11", "e12", "e21", "e22"))
        Q = Matrix.from_columns([
            [as_scalar(v) for v in c] for c in ((1, 0, 0, 1), (0, 1, 1, 0), (0, 1, -1, 0), (p, 0, 0, q))
        ])
        B = Algebra(_idempotent_table(4), unit=[ONE] * 4, labels=("h", "x", "y", "z"), star=Matrix.identity(4))
        D = DualPair(A, B, Q.inverse().T())
        return _from_pair("m2", D, {"p": str(p), "q": str(q)})
    raise PreconditionError(f"unknown counterexample {name!r}; use groupoid2, c3, c4 or m2")


def matrix_unit_span(n: int) -> Algebra:
    """Span of e_1j and e_jn in M_n: idempotent, non-degenerate, no unit for n >= 3."""
    if n < 2:
        raise PreconditionError("n >= 2 required")
    units = sorted({(0, j) for j in range(n)} | {(j, n - 1) for j in range(n)})
    pos = {u: k for k, u in enumerate(units)}
    d = len(units)
    products = {}
    for x, (i, j) in enumerate(units):
        for y, (k, l) in enumerate(units):
            if j == k:
                products[(x, y)] = basis_vector(d, pos[(i, l)])
    return Algebra.from_products(d, products, labels=[f"e{i + 1}{j + 1}" for i, j in units])


# ---------------------------------------------------------------------------
# the two-subgroup construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OmegaStructure:
    """Pairs (h, k) with the partial actions h|>k in K and h<|k in H.

    Indices are local to the standalone groups H and K.
    """

    H: FiniteGroup
    K: FiniteGroup
    pairs: tuple[tuple[int, int], ...]
    right_act: dict  # (h, k) -> h <| k
    left_act: dict   # (h, k) -> h |> k
    name: str = ""

    def __contains__(self, hk) -> bool:
        return tuple(hk) in self.right_act

    def laws(self) -> dict:
        """Which of the structural laws hold (all should)."""
        H, K = self.H, self.K
        eH, eK = H.identity, K.identity
        Om = set(self.pairs)
        L, R = self.left_act, self.right_act
        unital = all((h, eK) in Om and L[(h, eK)] == eK and R[(h, eK)] == h for h in range(H.order)) and all(
            (eH, k) in Om and L[(eH, k)] == k and R[(eH, k)] == eH for k in range(K.order)
        )
        cocycle_k = True
        cocycle_h = True
        for (h, k) in self.pairs:
            hk_ = R[(h, k)]
            for k2 in range(K.order):
                if (hk_, k2) in Om:
                    kk = K.mul(k, k2)
                    if (h, kk) not in Om or L[(h, kk)] != K.mul(L[(h, k)], L[(hk_, k2)]) \
                            or R[(h, kk)] != R[(hk_, k2)]:
                        cocycle_k = False
            t = L[(h, k)]
            for h2 in range(H.order):
                if (h2, t) in Om:
                    hh = H.mul(h2, h)
                    if (hh, k) not in Om or R[(hh, k)] != H.mul(R[(h2, t)], hk_) or L[(hh, k)] != L[(h2, t)]:
                        cocycle_h = False
        inverse = True
        for (h, k) in self.pairs:
            h1, k1 = H.inv(R[(h, k)]), K.inv(L[(h, k)])
            if (h1, k1) not in Om or L[(h1, k1)] != K.inv(k) or R[(h1, k1)] != H.inv(h):
                inverse = False
        return {"unital": unital, "cocycle_k": cocycle_k, "cocycle_h": cocycle_h, "inverse": inverse}


def omega_from_group(G: FiniteGroup, H: Subgroup, K: Subgroup) -> OmegaStructure:
    if H.parent != G or K.parent != G:
        raise PreconditionError("H and K must be subgroups of G")
    if set_products(G, H, K)["intersection"] != {G.identity}:
        raise PreconditionError("H∩K={e} required")
    Hg, Kg = H.as_group(), K.as_group()
    factor = {}
    for kl, k in enumerate(K.members):
        for hl, h in enumerate(H.members):
            factor[G.mul(k, h)] = (kl, hl)
    pairs, L, R = [], {}, {}
    for hl, h in enumerate(H.members):
        for kl, k in enumerate(K.members):
            g = G.mul(h, k)
            if g in factor:
                k2, h2 = factor[g]
                pairs.append((hl, kl))
                L[(hl, kl)] = k2
                R[(hl, kl)] = h2
    name = f"{G.name} H=<{','.join(H.labels())}> K=<{','.join(K.labels())}>"
    return OmegaStructure(Hg, Kg, tuple(sorted(pairs)), R, L, name)


def omega_free_product(H: FiniteGroup, K: FiniteGroup) -> OmegaStructure:
    eH, eK = H.identity, K.identity
    pairs, L, R = set(), {}, {}
    for h in range(H.order):
        pairs.add((h, eK))
        L[(h, eK)] = eK
        R[(h, eK)] = h
    for k in range(K.order):
        pairs.add((eH, k))
        L[(eH, k)] = k
        R[(eH, k)] = eH
    return OmegaStructure(H, K, tuple(sorted(pairs)), R, L, f"free {H.name}*{K.name}")


def twosub_pair(Om: OmegaStructure) -> Construction:
    """The groupoid algebras C(Omega) and C(Omega^) with their hypergroup data."""
    H, K = Om.H, Om.K
    eH, eK = H.identity, K.identity
    pairs = list(Om.pairs)
    idx = {p: i for i, p in enumerate(pairs)}
    n = len(pairs)
    L, R = Om.left_act, Om.right_act

    def e(i):
        return basis_vector(n, i)

    # C(Omega): delta_(a,b) delta_(c,d) = [c = a<|b] delta_(a, bd)
    prod_a = {}
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if c == R[(a, b)] and (a, K.mul(b, d)) in idx:
                prod_a[(i, j)] = e(idx[(a, K.mul(b, d))])
    unit_a = [ONE if k == eK else ZERO for (h, k) in pairs]
    star_a = _perm_matrix([idx[(R[(a, b)], K.inv(b))] for (a, b) in pairs])
    # C(Omega^): delta_(a,b) delta_(c,d) = [b = c|>d] delta_(ac, d)
    prod_b = {}
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == L[(c, d)] and (H.mul(a, c), d) in idx:
                prod_b[(i, j)] = e(idx[(H.mul(a, c), d)])
    unit_b = [ONE if h == eH else ZERO for (h, k) in pairs]
    star_b = _perm_matrix([idx[(H.inv(a), L[(a, b)])] for (a, b) in pairs])

    lab = [f"[{H.labels[h]},{K.labels[k]}]" for (h, k) in pairs]
    A = Algebra.from_products(n, prod_a, unit=unit_a, labels=lab, star=star_a)
    B = Algebra.from_products(n, prod_b, unit=unit_b, labels=[x + "^" for x in lab], star=star_b)

    # Delta(f)(u,v; h,k) = f(uh, k) [v = h|>k]
    cols_a: list[dict] = [dict() for _ in range(n)]
    for (u, v), i in idx.items():
        for (h, k), j in idx.items():
            if v == L[(h, k)] and (H.mul(u, h), k) in idx:
                cols_a[idx[(H.mul(u, h), k)]][(i, j)] = ONE
    # Delta(g)(u,v; h,k) = g(u, vk) [h = u<|v]
    cols_b: list[dict] = [dict() for _ in range(n)]
    for (u, v), i in idx.items():
        for (h, k), j in idx.items():
            if h == R[(u, v)] and (u, K.mul(v, k)) in idx:
                cols_b[idx[(u, K.mul(v, k))]][(i, j)] = ONE
    Delta_a = _coproduct_from_dict(n, cols_a)
    Delta_b = _coproduct_from_dict(n, cols_b)

    eps_a = tuple(ONE if h == eH else ZERO for (h, k) in pairs)
    eps_b = tuple(ONE if k == eK else ZERO for (h, k) in pairs)
    phi_a = tuple(ONE if k == eK else ZERO for (h, k) in pairs)
    phi_b = tuple(ONE if h == eH else ZERO for (h, k) in pairs)
    # (S f)(h,k) = f((h<|k)^-1, (h|>k)^-1): row x picks out column tau(x)
    tau = [idx[(H.inv(R[p]), K.inv(L[p]))] for p in pairs]
    rows = [[ONE if c == tau[r] else ZERO for c in range(n)] for r in range(n)]
    S = Matrix._from_rows(n, n, rows)

    D = DualPair(A, B, Matrix.identity(n))
    meta = {"omega": [[H.labels[h], K.labels[k]] for (h, k) in pairs], "structure": Om.name}
    return Construction(
        f"twosub {Om.name}",
        D,
        FQH(A, Delta_a, eps_a, phi_a, S),
        FQH(B, Delta_b, eps_b, phi_b, S),
        meta,
    )


def free_product_ambient(Om: OmegaStructure) -> dict:
    """The Hopf algebra F(H) (x) C[K] around C(Omega) and the restriction E.

    Returns the ambient algebra, its coproduct, the inclusion of C(Omega) and
    the restriction map E (multiplication by the indicator of Omega).
    """
    H, K = Om.H, Om.K
    full = [(h, k) for h in range(H.order) for k in range(K.order)]
    fidx = {p: i for i, p in enumerate(full)}
    N = len(full)
    # (f f')(h,k) = sum_v f(h,v) f'(h, v^-1 k): delta_(a,b) delta_(a,d) = delta_(a, bd)
    prods = {}
    for (a, b), i in fidx.items():
        for d in range(K.order):
            prods[(i, fidx[(a, d)])] = basis_vector(N, fidx[(a, K.mul(b, d))])
    unit = [ONE if k == K.identity else ZERO for (h, k) in full]
    A0 = Algebra.from_products(N, prods, unit=unit, labels=[f"[{H.labels[h]},{K.labels[k]}]" for h, k in full])
    cols: list[dict] = [dict() for _ in range(N)]
    for (u, v), i in fidx.items():
        for (h, k), j in fidx.items():
            if v == k:
                cols[fidx[(H.mul(u, h), k)]][(i, j)] = ONE
    Delta0 = _coproduct_from_dict(N, cols)
    pairs = list(Om.pairs)
    incl = Matrix.from_columns([basis_vector(N, fidx[p]) for p in pairs])
    E = Matrix.from_rows([[ONE if (i == j and full[i] in Om) else ZERO for j in range(N)] for i in range(N)])
    restrict = incl.T()  # coordinates in C(Omega) of a function supported on Omega
    return {"algebra": A0, "coproduct": Delta0, "inclusion": incl, "E": E, "restrict": restrict}
