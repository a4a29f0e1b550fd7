"""Immutable dense matrices over QQ or GF(p)."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .scalars import QQ, PrimeField, RationalField

Field = RationalField | PrimeField


class Matrix:
    """Dense exact matrix. Indexing is 0-based and returns raw entries
    (Fraction over QQ, int in [0, p) over GF(p))."""

    __slots__ = ("_rows", "nrows", "ncols", "field", "_hash")

    def __init__(self, rows: Iterable[Iterable], field: Field = QQ):
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        self._init(data, field)

    def _init(self, data, field):
        if not data:
            raise ValueError("matrix must have at least one row")
        ncols = len(data[0])
        if ncols == 0 or any(len(r) != ncols for r in data):
            raise ValueError("rows must be non-empty and of equal length")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, data, field: Field) -> "Matrix":
        m = cls.__new__(cls)
        m._init(tuple(tuple(r) for r in data), field)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # constructors

    @classmethod
    def zeros(cls, n: int, m: int | None = None, field: Field = QQ) -> "Matrix":
        m = n if m is None else m
        z = field.zero
        return cls._raw([[z] * m for _ in range(n)], field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def diag(cls, entries: Sequence, field: Field = QQ) -> "Matrix":
        vals = [field.coerce(x) for x in entries]
        n = len(vals)
        z = field.zero
        return cls._raw([[vals[i] if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def antidiag_ones(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw([[o if i + j == n - 1 else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        field = blocks[0].field
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        data = [[field.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            if b.field != field:
                raise ValueError("blocks over different fields")
            for i in range(b.nrows):
                data[r0 + i][c0:c0 + b.ncols] = b._rows[i]
            r0 += b.nrows
            c0 += b.ncols
        return cls._raw(data, field)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def entry(self, i: int, j: int):
        """Entry (i, j) as a field scalar (Fraction or PrimeFieldElement)."""
        return self.field.wrap(self._rows[i][j])

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def rows(self) -> tuple:
        return self._rows

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """Submatrix rows r0:r1, columns c0:c1 (half-open)."""
        return Matrix._raw([r[c0:c1] for r in self._rows[r0:r1]], self.field)

    def with_block(self, r0: int, c0: int, b: "Matrix") -> "Matrix":
        data = [list(r) for r in self._rows]
        for i in range(b.nrows):
            data[r0 + i][c0:c0 + b.ncols] = b._rows[i]
        return Matrix._raw(data, self.field)

    def with_entries(self, updates: dict) -> "Matrix":
        data = [list(r) for r in self._rows]
        for (i, j), v in updates.items():
            data[i][j] = self.field.coerce(v)
        return Matrix._raw(data, self.field)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_identity(self) -> bool:
        return self.is_square() and all(
            x == (1 if i == j else 0)
            for i, r in enumerate(self._rows) for j, x in enumerate(r))

    # arithmetic

    def _same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        f = self.field
        return Matrix._raw([[f.add(a, b) for a, b in zip(r, s)]
                            for r, s in zip(self._rows, other._rows)], f)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        f = self.field
        return Matrix._raw([[f.sub(a, b) for a, b in zip(r, s)]
                            for r, s in zip(self._rows, other._rows)], f)

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix._raw([[f.neg(a) for a in r] for r in self._rows], f)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix._raw([[f.mul(c, a) for a in r] for r in self._rows], f)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows))
        dot = self.field.dot
        return Matrix._raw([[dot(r, c) for c in cols] for r in self._rows], self.field)

    __mul__ = __matmul__

    def __pow__(self, e: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.nrows, self.field)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(list(zip(*self._rows)), self.field)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        s = self.field.zero
        for i in range(self.nrows):
            s = self.field.add(s, self._rows[i][i])
        return s

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product with block (i, j) equal to self[i, j] * other."""
        self._same(other)
        f = self.field
        data = []
        for r in self._rows:
            for s in other._rows:
                data.append([f.mul(a, b) for a in r for b in s])
        return Matrix._raw(data, f)

    def to_field(self, field: Field) -> "Matrix":
        return Matrix(self.tolist(), field)

    # elimination

    def _echelon(self, augment: "Matrix | None" = None):
        """Gauss-Jordan over the field; returns (reduced rows, pivot columns)."""
        f = self.field
        n = self.ncols
        data = [list(r) + (list(augment._rows[i]) if augment is not None else [])
                for i, r in enumerate(self._rows)]
        pivots = []
        prow = 0
        for col in range(n):
            sel = next((i for i in range(prow, len(data)) if data[i][col] != 0), None)
            if sel is None:
                continue
            data[prow], data[sel] = data[sel], data[prow]
            inv = f.inv(data[prow][col])
            data[prow] = [f.mul(inv, x) for x in data[prow]]
            pr = data[prow]
            for i in range(len(data)):
                if i != prow and data[i][col] != 0:
                    c = data[i][col]
                    data[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(data[i], pr)]
            pivots.append(col)
            prow += 1
            if prow == len(data):
                break
        return data, pivots

    def rank(self) -> int:
        if isinstance(self.field, RationalField):
            return integer_rank(self._rows)
        return len(self._echelon()[1])

    def det(self):
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        f = self.field
        data = [list(r) for r in self._rows]
        n = self.nrows
        d = f.one
        for col in range(n):
            sel = next((i for i in range(col, n) if data[i][col] != 0), None)
            if sel is None:
                return f.zero
            if sel != col:
                data[col], data[sel] = data[sel], data[col]
                d = f.neg(d)
            piv = data[col][col]
            d = f.mul(d, piv)
            inv = f.inv(piv)
            for i in range(col + 1, n):
                if data[i][col] != 0:
                    c = f.mul(data[i][col], inv)
                    data[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(data[i], data[col])]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        data, pivots = self._echelon(Matrix.identity(n, self.field))
        if len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw([r[n:] for r in data], self.field)

    # comparison and display

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.field, self._rows)))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix[{self.field}]({body})"


def integer_rank(rows) -> int:
    """Rank over QQ by fraction-free elimination on integer rows."""
    work = []
    for r in rows:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in r]
        if any(ints):
            work.append(ints)
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        sel = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        pr = work[rank]
        a = pr[col]
        for i in range(rank + 1, len(work)):
            b = work[i][col]
            if b:
                new = [a * x - b * y for x, y in zip(work[i], pr)]
                g = 0
                for x in new:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    new = [x // g for x in new]
                work[i] = new
        rank += 1
        work = work[:rank] + [w for w in work[rank:] if any(w)]
    return rank


def as_matrix(x, field: Field = QQ) -> Matrix:
    return x if isinstance(x, Matrix) else Matrix(x, field)
