"""Finite groups as Cayley tables.

Elements are indices into ``labels``.  Permutation presets are generated by
composing permutations right to left, ``(st)(x) = s(t(x))``, and then frozen
into a table; after that nothing depends on permutations except label
parsing.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, ShapeError

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "preset",
    "cyclic",
    "symmetric",
    "dihedral",
    "direct_product",
    "subgroup_generate",
    "subgroup_from_labels",
    "left_cosets",
    "right_cosets",
    "double_cosets",
    "is_normal",
    "set_products",
]


class FiniteGroup:
    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]], name: str = "",
                 perm_degree: int | None = None):
        n = len(labels)
        if n == 0:
            raise ShapeError("a group needs at least one element")
        if len(table) != n or any(len(r) != n for r in table):
            raise ShapeError("Cayley table must be order x order")
        if len(set(labels)) != n:
            raise ShapeError("group labels must be distinct")
        self.order = n
        self.labels = tuple(labels)
        self.table = tuple(tuple(int(x) for x in r) for r in table)
        self.name = name
        self.perm_degree = perm_degree
        self._validate()
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def _validate(self) -> None:
        n, t = self.order, self.table
        if any(not 0 <= x < n for r in t for x in r):
            raise ShapeError("table entries out of range")
        ident = [e for e in range(n) if all(t[e][g] == g and t[g][e] == g for g in range(n))]
        if len(ident) != 1:
            raise ShapeError("table has no identity")
        self.identity = ident[0]
        inv = []
        for g in range(n):
            cands = [h for h in range(n) if t[g][h] == self.identity and t[h][g] == self.identity]
            if len(cands) != 1:
                raise ShapeError(f"element {self.labels[g]} has no inverse")
            inv.append(cands[0])
        self.inverse = tuple(inv)
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                tb = t[b]
                for c in range(n):
                    if t[ab][c] != ta[tb[c]]:
                        raise ShapeError(f"table is not associative at {a},{b},{c}")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *elems: int) -> int:
        out = self.identity
        for g in elems:
            out = self.table[out][g]
        return out

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index(self, label: str) -> int:
        """Index of an element given by label, with cycle-notation normalization."""
        if label in self._index:
            return self._index[label]
        text = label.strip()
        if text in ("e", "1", "()", "id") and self.perm_degree is not None:
            return self.identity
        if self.perm_degree is not None:
            perm = _parse_cycles(text, self.perm_degree)
            key = _cycle_label(perm)
            if key in self._index:
                return self._index[key]
        raise KeyError(f"{label!r} is not an element of {self.name or 'the group'}")

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.labels == other.labels and self.table == other.table

    def __hash__(self):
        return hash((self.labels, self.table))

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "table": [list(r) for r in self.table],
            "identity": self.identity,
        }

    @classmethod
    def from_json(cls, obj) -> "FiniteGroup":
        try:
            g = cls(obj["labels"], obj["table"])
        except (KeyError, TypeError):
            raise ValueError("group JSON needs labels and table") from None
        if "identity" in obj and obj["identity"] != g.identity:
            raise ValueError("group JSON identity does not match its table")
        return g


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        G = self.parent
        s = set(self.members)
        if G.identity not in s:
            raise PreconditionError("a subgroup must contain the identity")
        for a in s:
            if G.inv(a) not in s or any(G.mul(a, b) not in s for b in s):
                raise PreconditionError("member set is not closed under product and inverse")
        object.__setattr__(self, "members", tuple(sorted(s)))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def labels(self) -> list[str]:
        return [self.parent.labels[g] for g in self.members]

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; local index k is ``members[k]``."""
        G = self.parent
        pos = {g: k for k, g in enumerate(self.members)}
        table = [[pos[G.mul(a, b)] for b in self.members] for a in self.members]
        return FiniteGroup([G.labels[g] for g in self.members], table, name=f"subgroup of {G.name}",
                           perm_degree=G.perm_degree)


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("Z_n needs n >= 1")
    return FiniteGroup([str(i) for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}")


def _compose(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(s[t[x]] for x in range(len(t)))


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "e"


def _parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse products like ``"(1 2)(2 3)"``; the rightmost cycle acts first."""
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise KeyError(f"cannot read {text!r} as cycle notation")
    perm = tuple(range(degree))
    for body in cycles:
        pts = [int(x) - 1 for x in re.split(r"[\s,]+", body.strip()) if x]
        if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
            raise KeyError(f"bad cycle ({body}) for degree {degree}")
        c = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            c[a] = b
        perm = _compose(perm, tuple(c))
    return perm


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise PreconditionError("symmetric presets exist for 1 <= n <= 5")
    perms = sorted(itertools.permutations(range(n)), key=lambda p: (_perm_rank(p), p))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[_compose(s, t)] for t in perms] for s in perms]
    return FiniteGroup([_cycle_label(p) for p in perms], table, name=f"S{n}", perm_degree=n)


def _perm_rank(p: tuple[int, ...]) -> int:
    """Sort key: identity first, then by number of moved points."""
    return sum(1 for i, x in enumerate(p) if i != x)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon: r^i and s r^i with s r s = r^-1."""
    if n < 1:
        raise PreconditionError("D_n needs n >= 1")
    elems = [(0, i) for i in range(n)] + [(1, i) for i in range(n)]

    def mul(x, y):
        (a, i), (b, j) = x, y
        # s^a r^i s^b r^j = s^(a+b) r^((-1)^b i + j)
        return ((a + b) % 2, ((-i if b else i) + j) % n)

    def label(x):
        a, i = x
        r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        if a == 0:
            return r or "e"
        return "s" + r

    idx = {x: k for k, x in enumerate(elems)}
    return FiniteGroup([label(x) for x in elems], [[idx[mul(x, y)] for y in elems] for x in elems], name=f"D{n}")


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in range(G1.order) for b in range(G2.order)]
    idx = {p: k for k, p in enumerate(pairs)}
    table = [[idx[(G1.mul(a, c), G2.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({G1.labels[a]},{G2.labels[b]})" for a, b in pairs]
    return FiniteGroup(labels, table, name=f"{G1.name}x{G2.name}")


def preset(name: str) -> FiniteGroup:
    """Groups by name: ``Zn``, ``Sn`` (n <= 5), ``Dn``, ``V4``/``Klein``, ``GxH``."""
    key = name.strip()
    if "x" in key and key.lower() not in ("klein",):
        parts = key.split("x")
        if len(parts) >= 2 and all(parts):
            out = preset(parts[0])
            for p in parts[1:]:
                out = direct_product(out, preset(p))
            out.name = key
            return out
    if key.lower() in ("v4", "klein", "klein4"):
        g = direct_product(cyclic(2), cyclic(2))
        g.name = "V4"
        return g
    m = re.fullmatch(r"([ZSD])(\d+)", key)
    if not m:
        raise KeyError(f"unknown group preset {name!r}")
    kind, n = m.group(1), int(m.group(2))
    return {"Z": cyclic, "S": symmetric, "D": dihedral}[kind](n)


# ---------------------------------------------------------------------------
# subgroups and cosets
# ---------------------------------------------------------------------------


def subgroup_generate(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    members = {G.identity}
    frontier = [G.identity]
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise ShapeError(f"generator index {g} out of range")
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return Subgroup(G, tuple(sorted(members)))


def subgroup_from_labels(G: FiniteGroup, labels: Iterable[str]) -> Subgroup:
    return subgroup_generate(G, [G.index(x) for x in labels])


def _check_parent(G: FiniteGroup, *subs: Subgroup) -> None:
    for H in subs:
        if H.parent != G:
            raise PreconditionError("subgroups must belong to the given group")


def _partition(G: FiniteGroup, orbit) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for g in range(G.order):
        if g in seen:
            continue
        block = tuple(sorted(orbit(g)))
        seen.update(block)
        out.append(block)
    return out


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """The sets gH, listed by smallest member."""
    _check_parent(G, H)
    return _partition(G, lambda g: {G.mul(g, h) for h in H.members})


def right_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """The sets Hg, listed by smallest member."""
    _check_parent(G, H)
    return _partition(G, lambda g: {G.mul(h, g) for h in H.members})


def double_cosets(G: FiniteGroup, H: Subgroup, K: Subgroup | None = None) -> list[tuple[int, ...]]:
    """The sets HgK, listed by smallest member (so H itself comes first)."""
    K = H if K is None else K
    _check_parent(G, H, K)
    return _partition(G, lambda g: {G.prod(h, g, k) for h in H.members for k in K.members})


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    _check_parent(G, H)
    s = set(H.members)
    return all(G.prod(g, h, G.inv(g)) in s for g in range(G.order) for h in H.members)


def set_products(G: FiniteGroup, H: Subgroup, K: Subgroup) -> dict:
    _check_parent(G, H, K)
    hk = frozenset(G.mul(h, k) for h in H.members for k in K.members)
    kh = frozenset(G.mul(k, h) for h in H.members for k in K.members)
    return {"HK": hk, "KH": kh, "intersection": frozenset(H.members) & frozenset(K.members)}
