"""Exact Gaussian-rational scalars and dense exact linear algebra.

Every number in this package lives in Q(i).  A :class:`Scalar` is a pair of
``fractions.Fraction`` objects; a :class:`Matrix` is an immutable row-major
grid of scalars.  Elimination is plain Gauss-Jordan with exact pivots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ShapeError

__all__ = [
    "Scalar",
    "Matrix",
    "SolutionSet",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "parse_scalar",
    "vector",
    "rank",
    "solve",
    "null_space",
    "is_psd_hermitian",
    "kron",
    "first_inconsistent_row",
]

Number = Union["Scalar", int, Fraction, str]


class Scalar:
    """An element re + im*i of Q(i), always in lowest terms."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        self.re = _rational(re)
        self.im = _rational(im)
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(cls)
        s.re = re
        s.im = im
        s._hash = None
        return s

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar._raw(self.re * o.re, _F0)
        return Scalar._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._raw(1 / self.re, _F0)
        n = self.re * self.re + self.im * self.im
        return Scalar._raw(self.re / n, -self.im / n)

    def conj(self) -> "Scalar":
        if not self.im:
            return self
        return Scalar._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|x|^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.re, self.im))
        return self._hash

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # formatting -----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return _imag_str(self.im)
        im = _imag_str(self.im)
        sign = "" if im.startswith("-") else "+"
        return f"{_fmt(self.re)}{sign}{im}"

    def to_json(self) -> dict:
        return {"re": _fmt(self.re), "im": _fmt(self.im)}

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        if isinstance(obj, dict):
            try:
                return cls(obj["re"], obj.get("im", "0"))
            except KeyError as exc:
                raise ValueError(f"scalar object missing field {exc}") from None
        return parse_scalar(obj)


_F0 = Fraction(0)
_F1 = Fraction(1)
ZERO = Scalar._raw(_F0, _F0)
ONE = Scalar._raw(_F1, _F0)
I = Scalar._raw(_F0, _F1)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_fmt(q)}i"


_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        t = x.strip()
        if not _RAT.match(t):
            raise ValueError(f"not an exact rational literal: {x!r}")
        q = Fraction(t)
        return q
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _coerce(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Scalar._raw(Fraction(x), _F0)
    return None


_Q = r"\d+(?:/\d+)?"
_REAL_LIT = re.compile(rf"^[+-]?{_Q}$")
_IMAG_LIT = re.compile(rf"^(?P<s>[+-]?)(?P<m>{_Q})?i$")
_CPLX_LIT = re.compile(rf"^(?P<r>[+-]?{_Q})(?P<s>[+-])(?P<m>{_Q})?i$")


def parse_scalar(text: str | int | Fraction | Scalar) -> Scalar:
    """Parse ``"3"``, ``"-3/2"``, ``"1/2+3/4i"``, ``"-i"`` and similar literals.

    Floats and decimal strings are refused; only exact input is accepted.
    """
    if isinstance(text, Scalar):
        return text
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Scalar(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot parse {type(text).__name__} as a scalar")
    t = text.replace(" ", "").replace("\u2212", "-")
    if _REAL_LIT.match(t):
        return Scalar._raw(Fraction(t), _F0)
    m = _IMAG_LIT.match(t)
    if m:
        mag = Fraction(m.group("m")) if m.group("m") else _F1
        return Scalar._raw(_F0, -mag if m.group("s") == "-" else mag)
    m = _CPLX_LIT.match(t)
    if m:
        mag = Fraction(m.group("m")) if m.group("m") else _F1
        return Scalar._raw(Fraction(m.group("r")), -mag if m.group("s") == "-" else mag)
    raise ValueError(f"not an exact Gaussian-rational literal: {text!r}")


def as_scalar(x: Number) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar(x)


def vector(values: Iterable[Number]) -> tuple[Scalar, ...]:
    return tuple(as_scalar(v) for v in values)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix over Q(i)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Sequence[Number]):
        if rows < 0 or cols < 0:
            raise ShapeError("matrix dimensions must be nonnegative")
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        flat = [as_scalar(e) for e in entries]
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(flat[r * cols:(r + 1) * cols]) for r in range(rows))

    @classmethod
    def _from_rows(cls, rows: int, cols: int, data) -> "Matrix":
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = tuple(tuple(r) for r in data)
        return m

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Number]]) -> "Matrix":
        data = [list(r) for r in data]
        if not data:
            return cls._from_rows(0, 0, ())
        cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ShapeError("ragged rows")
        return cls._from_rows(len(data), cols, [[as_scalar(x) for x in r] for r in data])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]], rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if not columns:
            return cls._from_rows(rows or 0, 0, [[] for _ in range(rows or 0)])
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise ShapeError("ragged columns")
        return cls._from_rows(n, len(columns), [[as_scalar(c[r]) for c in columns] for r in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._from_rows(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._from_rows(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence[Number]) -> "Matrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return cls._from_rows(n, n, [[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, values: Sequence[Number]) -> "Matrix":
        return cls._from_rows(len(values), 1, [[as_scalar(v)] for v in values])

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Scalar, ...]:
        return tuple(x for r in self._data for x in r)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self._data)

    def row_list(self) -> list[list[Scalar]]:
        return [list(r) for r in self._data]

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.col(j) for j in range(self.cols)]

    # algebra --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._from_rows(
            self.rows, self.cols,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._from_rows(
            self.rows, self.cols,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def scale(self, c: Number) -> "Matrix":
        c = as_scalar(c)
        return Matrix._from_rows(self.rows, self.cols, [[c * x for x in r] for r in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        odata = other._data
        out = []
        for r in self._data:
            acc = [ZERO] * other.cols
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in enumerate(odata[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix._from_rows(self.rows, other.cols, out)

    def apply(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Matrix times a coordinate vector."""
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} does not fit {self.shape}")
        nz = [(k, x) for k, x in enumerate(v) if x]
        out = []
        for r in self._data:
            acc = ZERO
            for k, x in nz:
                a = r[k]
                if a:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def T(self) -> "Matrix":
        return Matrix._from_rows(self.cols, self.rows, list(zip(*self._data)) if self.rows else [[] for _ in range(self.cols)])

    def conj(self) -> "Matrix":
        return Matrix._from_rows(self.rows, self.cols, [[x.conj() for x in r] for r in self._data])

    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return self.conj().T()

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeError("hstack needs equal row counts")
        return Matrix._from_rows(self.rows, self.cols + other.cols, [r + s for r, s in zip(self._data, other._data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ShapeError("vstack needs equal column counts")
        return Matrix._from_rows(self.rows + other.rows, self.cols, self._data + other._data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._from_rows(len(rows), len(cols), [[self._data[i][j] for j in cols] for i in rows])

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ShapeError("only square matrices can be inverted")
        sol = solve(self, Matrix.identity(self.rows))
        if sol.kind != "unique":
            raise ZeroDivisionError("matrix is singular")
        return sol.particular

    def rank(self) -> int:
        return rank(self)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    # formatting -----------------------------------------------------------

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [x.to_json() for x in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "Matrix":
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError):
            raise ValueError("matrix JSON needs rows, cols, entries") from None
        if not isinstance(rows, int) or not isinstance(cols, int) or not isinstance(entries, list):
            raise ValueError("malformed matrix JSON")
        return cls(rows, cols, [Scalar.from_json(e) for e in entries])


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _rref(rows: list[list[Scalar]], ncols: int) -> list[int]:
    """In-place reduced row echelon form on the first ``ncols`` columns.

    Rows may be longer than ``ncols`` (augmented columns ride along).
    Returns pivot columns; rows are reordered so pivots come first.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((k for k in range(r, nrows) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        prow = [x * inv if x else ZERO for x in rows[r]]
        rows[r] = prow
        nz = [j for j, x in enumerate(prow) if x]
        for k in range(nrows):
            if k != r:
                f = rows[k][c]
                if f:
                    row = rows[k]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def _leading_one(v: list[Scalar]) -> list[Scalar]:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    lead = next(x for x in v if x)
    if lead == ONE:
        return v
    inv = lead.inverse()
    return [x * inv for x in v]


def rank(M: Matrix) -> int:
    rows = M.row_list()
    return len(_rref(rows, M.cols))


def null_space(M: Matrix) -> list[Matrix]:
    """Basis of {x : M x = 0} as column vectors, one per free variable."""
    rows = M.row_list()
    pivots = _rref(rows, M.cols)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(Matrix.column(_leading_one(v)))
    return basis


@dataclass(frozen=True)
class SolutionSet:
    """Exact description of {X : M X = Y}.

    ``kind`` is ``"none"``, ``"unique"`` or ``"affine"``.  For ``affine``
    every solution is ``particular`` plus, column by column, a combination
    of the ``null_basis`` vectors.
    """

    kind: str
    particular: Matrix | None = None
    null_basis: tuple[Matrix, ...] = ()

    def __contains__(self, X: Matrix) -> bool:
        if self.kind == "none":
            return False
        if self.kind == "unique":
            return X == self.particular
        D = X - self.particular
        if not self.null_basis:
            return D.is_zero()
        N = Matrix.from_columns([b.col(0) for b in self.null_basis])
        return solve(N, D).kind != "none"


def solve(M: Matrix, Y: Matrix) -> SolutionSet:
    if M.rows != Y.rows:
        raise ShapeError(f"solve: M has {M.rows} rows but Y has {Y.rows}")
    aug = [list(r) + list(s) for r, s in zip(M._data, Y._data)]
    pivots = _rref(aug, M.cols)
    for r in range(len(pivots), M.rows):
        if any(aug[r][M.cols:]):
            return SolutionSet("none")
    X = [[ZERO] * Y.cols for _ in range(M.cols)]
    for r, pc in enumerate(pivots):
        X[pc] = aug[r][M.cols:]
    particular = Matrix._from_rows(M.cols, Y.cols, X)
    if len(pivots) == M.cols:
        return SolutionSet("unique", particular)
    pset = set(pivots)
    basis = []
    for f in (c for c in range(M.cols) if c not in pset):
        v = [ZERO] * M.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -aug[r][f]
        basis.append(Matrix.column(_leading_one(v)))
    return SolutionSet("affine", particular, tuple(basis))


def first_inconsistent_row(M: Matrix, Y: Matrix) -> int | None:
    """Index of the first row whose equation contradicts the rows before it.

    Rows are added one at a time to an incrementally reduced system; returns
    ``None`` when the whole system M X = Y is consistent.
    """
    if M.rows != Y.rows:
        raise ShapeError("row count mismatch")
    basis: list[tuple[int, list[Scalar]]] = []  # (pivot column, normalized row)
    n = M.cols
    for idx in range(M.rows):
        row = list(M._data[idx]) + list(Y._data[idx])
        for pc, prow in basis:
            f = row[pc]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
        pc = next((c for c in range(n) if row[c]), None)
        if pc is None:
            if any(row[n:]):
                return idx
            continue
        inv = row[pc].inverse()
        row = [x * inv for x in row]
        # keep the stored rows reduced against the new pivot
        basis = [(q, [a - r[pc] * b for a, b in zip(r, row)] if r[pc] else r) for q, r in basis]
        basis.append((pc, row))
    return None


def is_psd_hermitian(G: Matrix) -> bool:
    """Decide x* G x >= 0 for all x by recursive Schur complements."""
    if not G.is_square():
        raise ShapeError("PSD test needs a square matrix")
    if G != G.H():
        raise ValueError("PSD test needs a Hermitian matrix")
    rows = G.row_list()
    while rows:
        n = len(rows)
        if not any(x for r in rows for x in r):
            return True
        pivot = None
        for i in range(n):
            d = rows[i][i].re  # real by Hermitianity
            if d < 0:
                return False
            if d == 0:
                if any(rows[i]):
                    return False
            elif pivot is None:
                pivot = i
        if pivot is None:
            return True
        p = pivot
        piv = rows[p][p]
        keep = [i for i in range(n) if i != p]
        rows = [
            [rows[i][j] - rows[i][p] * rows[p][j] / piv for j in keep]
            for i in keep
        ]
    return True


def kron(M: Matrix, N: Matrix) -> Matrix:
    """Kronecker product; block (i, k) sits at row i*N.rows + k."""
    out = []
    for mi in M._data:
        for nk in N._data:
            row = []
            for a in mi:
                if a:
                    row.extend(a * b if b else ZERO for b in nk)
                else:
                    row.extend([ZERO] * N.cols)
            out.append(row)
    return Matrix._from_rows(M.rows * N.rows, M.cols * N.cols, out)
