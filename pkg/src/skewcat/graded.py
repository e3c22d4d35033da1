"""Graded vector spaces, graded maps and chain complexes.

Grading is homological: differentials have degree -1.  Degrees are
arbitrary integers and every support is finite.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

from .exactlin import FieldSpec, Matrix, ShapeError, rank
from .report import Report


class InvalidComplexError(ValueError):
    """Raised when d o d != 0 or the blocks have inconsistent shapes."""


class GradedDims(Mapping):
    """Finitely supported map degree -> dimension; zero entries are dropped."""

    __slots__ = ("_d",)

    def __init__(self, dims: Optional[Mapping] = None):
        d = {}
        for k, v in dict(dims or {}).items():
            k, v = int(k), int(v)
            if v < 0:
                raise ValueError(f"negative dimension {v} in degree {k}")
            if v:
                d[k] = v
        self._d = dict(sorted(d.items()))

    def __getitem__(self, k):
        return self._d[k]

    def get(self, k, default=0):
        return self._d.get(k, default)

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self._d == other._d
        if isinstance(other, Mapping):
            return self == GradedDims(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._d.items()))

    def __repr__(self):
        return f"GradedDims({self._d})"

    def total(self) -> int:
        return sum(self._d.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** (k % 2) * v for k, v in self._d.items())

    def restrict(self, lo: int, hi: int) -> "GradedDims":
        return GradedDims({k: v for k, v in self._d.items() if lo <= k <= hi})

    def shifted(self, n: int) -> "GradedDims":
        return GradedDims({k + n: v for k, v in self._d.items()})

    def to_json(self) -> dict:
        return {str(k): v for k, v in self._d.items()}


@dataclass(frozen=True, eq=False)
class GradedMap:
    """A linear map of graded spaces raising degree by ``shift``.

    ``blocks[d]`` is the matrix from source degree ``d`` to target degree
    ``d + shift``; missing blocks are zero.
    """

    field: FieldSpec
    source: GradedDims
    target: GradedDims
    shift: int
    blocks: Dict[int, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        for d, m in self.blocks.items():
            want = (self.target.get(d + self.shift), self.source.get(d))
            if m.shape != want:
                raise ShapeError(f"block at degree {d} has shape {m.shape}, expected {want}")
            if m.field != self.field:
                raise ShapeError(f"block at degree {d} is over {m.field.name}")

    def block(self, d: int) -> Matrix:
        m = self.blocks.get(d)
        if m is None:
            return Matrix.zeros(self.field, self.target.get(d + self.shift), self.source.get(d))
        return m

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if (self.field, self.source, self.target, self.shift) != (
                other.field, other.source, other.target, other.shift):
            return False
        return all(self.block(d) == other.block(d) for d in self.source)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.blocks.values())

    def to_json(self) -> dict:
        return {str(d): [[str(x) for x in r] for r in m.to_rows()]
                for d, m in sorted(self.blocks.items()) if m.rows and m.cols}


def identity_map(field: FieldSpec, dims: GradedDims) -> GradedMap:
    return GradedMap(field, dims, dims, 0, {d: Matrix.identity(field, n) for d, n in dims.items()})


def zero_map(field: FieldSpec, source: GradedDims, target: GradedDims, shift: int) -> GradedMap:
    return GradedMap(field, source, target, shift, {})


def compose_graded(f: GradedMap, g: GradedMap) -> GradedMap:
    """The composite ``f o g`` (``g`` applied first)."""
    if f.field != g.field:
        raise ShapeError("graded maps over different fields")
    for d in set(g.target) | set(f.source):
        if g.target.get(d) != f.source.get(d):
            raise ShapeError(f"cannot compose: degree {d} has dims {g.target.get(d)} vs {f.source.get(d)}")
    blocks = {}
    for d in g.source:
        m = f.block(d + g.shift) @ g.block(d)
        if m.rows:
            blocks[d] = m
    return GradedMap(f.field, g.source, f.target, f.shift + g.shift, blocks)


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Finite-dimensional chain complex with differential of degree -1."""

    field: FieldSpec
    dims: GradedDims
    differential: GradedMap

    def __post_init__(self):
        if self.differential.shift != -1:
            raise ShapeError("differential must have degree -1")
        if self.differential.source != self.dims or self.differential.target != self.dims:
            raise ShapeError("differential does not live on the complex")

    @classmethod
    def build(cls, field: FieldSpec, dims, d_blocks: Optional[Mapping] = None) -> "ChainComplex":
        """``d_blocks[n]`` is the matrix of d: C_n -> C_{n-1}."""
        dims = dims if isinstance(dims, GradedDims) else GradedDims(dims)
        blocks = {}
        for n, m in (d_blocks or {}).items():
            if not isinstance(m, Matrix):
                m = Matrix.from_rows(m, field, dims.get(int(n)))
            if m.rows and m.cols:
                blocks[int(n)] = m
            elif m.shape != (dims.get(int(n) - 1), dims.get(int(n))):
                raise ShapeError(f"differential block at degree {n} has shape {m.shape}")
        return cls(field, dims, GradedMap(field, dims, dims, -1, blocks))

    @classmethod
    def zero(cls, field: FieldSpec) -> "ChainComplex":
        return cls.build(field, {})

    def d(self, n: int) -> Matrix:
        return self.differential.block(n)

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims and self.differential == other.differential

    def to_json(self) -> dict:
        return {"field": self.field.name, "dims": self.dims.to_json(),
                "differential": self.differential.to_json()}


def validate_complex(c: ChainComplex) -> Report:
    """Check d o d = 0 and block shapes; violations name the degree."""
    rep = Report("complex")
    for n, m in c.differential.blocks.items():
        want = (c.dims.get(n - 1), c.dims.get(n))
        if m.shape != want:
            rep.add("shape", n, detail=f"d_{n} has shape {m.shape}, expected {want}")
    if not rep.ok:
        return rep
    for n in c.dims:
        if c.dims.get(n - 1) and c.dims.get(n - 2):
            if not (c.d(n - 1) @ c.d(n)).is_zero():
                rep.add("d_squared", n, detail=f"d_{n - 1} o d_{n} != 0")
    return rep


def homology(c: ChainComplex) -> GradedDims:
    """Dimensions H_n = dim ker d_n - rank d_{n+1}."""
    rep = validate_complex(c)
    if not rep.ok:
        raise InvalidComplexError(str(rep))
    out = {}
    ranks = {n: rank(m) for n, m in c.differential.blocks.items()}
    for n, dim in c.dims.items():
        out[n] = dim - ranks.get(n, 0) - ranks.get(n + 1, 0)
    return GradedDims(out)


def euler_characteristic(dims: Iterable) -> int:
    return GradedDims(dims).euler_characteristic()
