"""Exact linear algebra over the rationals and prime fields.

Rationals are :class:`fractions.Fraction`; prime-field elements are
:class:`Fp`.  Plain Python ints are accepted everywhere and coerced into
the matrix's field.  There is no floating point in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class FieldMismatchError(TypeError):
    """Raised when elements of two different fields meet."""


class ShapeError(ValueError):
    """Raised on incompatible matrix dimensions."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Fp:
    """An element of the prime field with ``p`` elements."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other) -> Optional[int]:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, bool):
            return int(other)
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"GF({self.p}) vs QQ")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (characteristic 0) or GF(p)."""

    kind: str
    characteristic: int

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == "prime-field":
            if not _is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce ``x`` into this field, refusing elements of other fields."""
        p = self.characteristic
        if isinstance(x, Fp):
            if x.p != p:
                raise FieldMismatchError(f"{x!r} is not an element of {self.name}")
            return x
        if isinstance(x, Fraction):
            if p:
                raise FieldMismatchError(f"{x} is not an element of {self.name}")
            return x
        if isinstance(x, int):
            return Fp(x, p) if p else Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot interpret {x!r} in {self.name}")

    def contains(self, x) -> bool:
        if isinstance(x, Fp):
            return x.p == self.characteristic
        if isinstance(x, Fraction):
            return self.characteristic == 0
        return False

    def parse(self, s: str):
        s = s.strip()
        if self.characteristic:
            if "/" in s:
                num, den = s.split("/")
                return Fp(int(num), self.characteristic) / Fp(int(den), self.characteristic)
            return Fp(int(s), self.characteristic)
        return Fraction(s)

    def format(self, x) -> str:
        x = self(x)
        return str(x)

    def elements(self):
        """All elements of a prime field, in representative order."""
        if not self.characteristic:
            raise ValueError("QQ is infinite")
        return [Fp(i, self.characteristic) for i in range(self.characteristic)]

    @staticmethod
    def from_name(name: str) -> "FieldSpec":
        name = name.strip()
        if name in ("QQ", "Q", "rationals"):
            return QQ
        if name.startswith("GF(") and name.endswith(")"):
            return GF(int(name[3:-1]))
        raise ValueError(f"unknown field {name!r}")


QQ = FieldSpec("rationals", 0)


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime-field", p)


def infer_field(values: Iterable) -> FieldSpec:
    """The field shared by ``values``; plain ints default to QQ."""
    found = None
    for x in values:
        if isinstance(x, Fp):
            f = GF(x.p)
        elif isinstance(x, Fraction):
            f = QQ
        elif isinstance(x, int):
            continue
        else:
            raise FieldMismatchError(f"not a field element: {x!r}")
        if found is None:
            found = f
        elif found != f:
            raise FieldMismatchError(f"mixed entries from {found.name} and {f.name}")
    return found or QQ


class Matrix:
    """Immutable dense matrix with entries in a single exact field."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Optional[Iterable] = None):
        if rows < 0 or cols < 0:
            raise ShapeError("negative dimension")
        if entries is None:
            data = (field.zero,) * (rows * cols)
        else:
            data = tuple(field(x) for x in entries)
        if len(data) != rows * cols:
            raise ShapeError(f"{len(data)} entries for a {rows}x{cols} matrix")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Optional[FieldSpec] = None,
                  cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        flat = [x for r in rows for x in r]
        if field is None:
            field = infer_field(flat)
        return cls(field, len(rows), cols, flat)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: FieldSpec, rows: int) -> "Matrix":
        cols = len(columns)
        if any(len(c) != rows for c in columns):
            raise ShapeError("ragged columns")
        return cls(field, rows, cols, (columns[j][i] for i in range(rows) for j in range(cols)))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, n, n, (one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, field: FieldSpec, vec: Sequence) -> "Matrix":
        return cls(field, len(vec), 1, vec)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self._data[j::self.cols] if self.cols else ()

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def entries(self) -> tuple:
        return self._data

    def with_entry(self, i: int, j: int, value) -> "Matrix":
        data = list(self._data)
        data[i * self.cols + j] = self.field(value)
        return Matrix(self.field, self.rows, self.cols, data)

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix[{self.field.name}]({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} + {other.shape}")
        return Matrix(self.field, self.rows, self.cols,
                      (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} - {other.shape}")
        return Matrix(self.field, self.rows, self.cols,
                      (a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, (-a for a in self._data))

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, self.rows, self.cols, (c * a for a in self._data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeError(f"{self.shape} @ {other.shape}")
        n, m, k = self.rows, other.cols, self.cols
        zero = self.field.zero
        out = [zero] * (n * m)
        a, b = self._data, other._data
        for i in range(n):
            for t in range(k):
                x = a[i * k + t]
                if not x:
                    continue
                base = t * m
                for j in range(m):
                    y = b[base + j]
                    if y:
                        out[i * m + j] += x * y
        return Matrix(self.field, n, m, out)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times a column vector given as a sequence."""
        if len(vec) != self.cols:
            raise ShapeError(f"{self.shape} applied to a length-{len(vec)} vector")
        zero = self.field.zero
        out = [zero] * self.rows
        for j, x in enumerate(vec):
            if not x:
                continue
            for i in range(self.rows):
                y = self._data[i * self.cols + j]
                if y:
                    out[i] += y * x
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      (self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self._data)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise ShapeError("hstack row mismatch")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                self.field, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise ShapeError("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self._data + other._data)

    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return len(rref(self)[1])

    def kernel_basis(self) -> "Matrix":
        return kernel_basis(self)

    def solve(self, rhs: "Matrix") -> Optional["Matrix"]:
        return solve(self, rhs)

    def inverse(self) -> Optional["Matrix"]:
        return inverse(self)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


def _rref_rows(rows: list, cols: int, field: FieldSpec):
    """In-place Gauss-Jordan elimination on a list of row lists."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix):
    """Reduced row echelon form and the list of pivot columns."""
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m)
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols, m.field)
    return Matrix.from_rows(rows, m.field, m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Matrix whose columns form a basis of the null space of ``m``."""
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m)
    red, pivots = rref(m)
    field = m.field
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    columns = []
    for fc in free:
        v = [field.zero] * m.cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r, fc]
        columns.append(v)
    return Matrix.from_columns(columns, field, m.cols)


def solve(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """Some ``x`` with ``m @ x == rhs``, or ``None`` if the system is inconsistent."""
    if m.rows != rhs.rows:
        raise ShapeError(f"{m.shape} vs right-hand side {rhs.shape}")
    m._check_field(rhs)
    aug = m.hstack(rhs) if m.cols or rhs.cols else m
    red, pivots = rref(aug)
    if any(p >= m.cols for p in pivots):
        return None
    field = m.field
    out = [[field.zero] * rhs.cols for _ in range(m.cols)]
    for r, pc in enumerate(pivots):
        for j in range(rhs.cols):
            out[pc][j] = red[r, m.cols + j]
    return Matrix.from_rows(out, field, rhs.cols)


def inverse(m: Matrix) -> Optional[Matrix]:
    if m.rows != m.cols:
        raise ShapeError("inverse of a non-square matrix")
    x = solve(m, Matrix.identity(m.field, m.rows))
    if x is None or m.rank() != m.rows:
        return None
    return x
