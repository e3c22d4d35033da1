"""Orbit homs for the shift action on bounded complexes over a field.

For a strictly invertible functor ``F`` the orbit category has

    hom(X, Y) = (+)_{i in Z} hom(X, F^i Y),

and for ``F = [n]`` on finite complexes over ``k`` only finitely many
summands have nonzero homology in a given degree.

Conventions: ``K[n]_i = K_{i-n}`` with differential ``(-1)^n d``; the
mapping complex has ``D(f) = d o f - (-1)^|f| f o d``.  Shifting a graded
map moves its blocks and applies no sign, so shifts are strictly additive
on maps and composition of orbit components is associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .exactlin import FieldSpec, Matrix
from .graded import (ChainComplex, GradedDims, GradedMap, compose_graded, homology,
                     identity_map, validate_complex)
from .report import ValidationError

BoundedComplex = ChainComplex


def validate_bounded(k: ChainComplex) -> None:
    rep = validate_complex(k)
    if not rep.ok:
        raise ValidationError(rep)


def point(field: FieldSpec, degree: int = 0) -> ChainComplex:
    """The field itself, concentrated in one degree."""
    return ChainComplex.build(field, {degree: 1})


def cone_of_identity(field: FieldSpec, degree: int = 0) -> ChainComplex:
    """``k --1--> k`` in degrees ``degree + 1, degree``; acyclic."""
    return ChainComplex.build(field, {degree: 1, degree + 1: 1}, {degree + 1: [[1]]})


def shift(k: ChainComplex, n: int) -> ChainComplex:
    """``K[n]_i = K_{i-n}``, differential multiplied by ``(-1)^n``."""
    sign = -1 if n % 2 else 1
    blocks = {d + n: m.scale(sign) for d, m in k.differential.blocks.items()}
    return ChainComplex.build(k.field, k.dims.shifted(n), blocks)


def shift_map(f: GradedMap, n: int) -> GradedMap:
    """The same blocks, re-indexed by ``n`` on both sides."""
    return GradedMap(f.field, f.source.shifted(n), f.target.shifted(n), f.shift,
                     {d + n: m for d, m in f.blocks.items()})


def _layout(k: ChainComplex, l: ChainComplex, d: int) -> List[Tuple[int, int, int, int]]:
    """Components of ``Hom_d``: ``(i, offset, rows, cols)`` for ``K_i -> L_{i+d}``."""
    out, off = [], 0
    for i in k.dims:
        rows, cols = l.dims.get(i + d), k.dims[i]
        if rows:
            out.append((i, off, rows, cols))
            off += rows * cols
    return out


def hom_degrees(k: ChainComplex, l: ChainComplex) -> List[int]:
    return sorted({j - i for i in k.dims for j in l.dims})


def flatten(k: ChainComplex, l: ChainComplex, d: int, comps: Dict[int, Matrix]) -> tuple:
    field = k.field
    out = []
    for i, _, rows, cols in _layout(k, l, d):
        m = comps.get(i)
        out.extend(m.entries() if m is not None else (field.zero,) * (rows * cols))
    return tuple(out)


def unflatten(k: ChainComplex, l: ChainComplex, d: int, vec) -> Dict[int, Matrix]:
    return {i: Matrix(k.field, rows, cols, vec[off:off + rows * cols])
            for i, off, rows, cols in _layout(k, l, d)}


def hom_complex(k: ChainComplex, l: ChainComplex) -> ChainComplex:
    """``Hom_d = (+)_i Hom(K_i, L_{i+d})`` with ``D(f) = d_L f - (-1)^d f d_K``."""
    validate_bounded(k)
    validate_bounded(l)
    field = k.field
    degs = hom_degrees(k, l)
    dims = {d: sum(r * c for _, _, r, c in _layout(k, l, d)) for d in degs}
    blocks = {}
    for d in degs:
        if not dims.get(d - 1):
            continue
        sign = -1 if d % 2 else 1
        cols = []
        for i, off, rows, ncols in _layout(k, l, d):
            for r in range(rows):
                for c in range(ncols):
                    f = Matrix(field, rows, ncols).with_entry(r, c, 1)
                    out: Dict[int, Matrix] = {}
                    # d_L o f : K_i -> L_{i+d-1}
                    if l.dims.get(i + d - 1):
                        out[i] = l.d(i + d) @ f
                    # f o d_K : K_{i+1} -> L_{i+d}
                    if k.dims.get(i + 1):
                        term = (f @ k.d(i + 1)).scale(-sign)
                        out[i + 1] = out[i + 1] + term if i + 1 in out else term
                    cols.append(flatten(k, l, d - 1, out))
        blocks[d] = Matrix.from_columns(cols, field, dims[d - 1])
    return ChainComplex.build(field, dims, blocks)


@dataclass(frozen=True)
class OrbitHomQuery:
    source: ChainComplex
    target: ChainComplex
    period: int
    window: Tuple[int, int]


def orbit_hom_dims(q: OrbitHomQuery) -> GradedDims:
    """Per degree ``d`` in the window: ``sum_i dim H_d(Hom(K, L[n i]))``."""
    k, l, n = q.source, q.target, q.period
    lo, hi = q.window
    if n == 0:
        raise ValueError("period must be nonzero")
    validate_bounded(k)
    validate_bounded(l)
    if lo > hi or not k.dims or not l.dims:
        return GradedDims({})
    # Hom(K, L[m])_d != 0 needs m = i + d - j with i in supp K, j in supp L
    m_lo = min(k.dims) + lo - max(l.dims)
    m_hi = max(k.dims) + hi - min(l.dims)
    i_lo, i_hi = sorted((m_lo // n, m_hi // n))
    totals: Dict[int, int] = {}
    for i in range(i_lo - 1, i_hi + 2):
        m = n * i
        if not m_lo <= m <= m_hi:
            continue
        h = homology(hom_complex(k, shift(l, m)))
        for d, v in h.items():
            if lo <= d <= hi:
                totals[d] = totals.get(d, 0) + v
    return GradedDims(totals)


def laurent_dims(n: int, window: Tuple[int, int]) -> GradedDims:
    """Graded dimensions of ``k[t^±1]`` with ``|t| = n``: one at every multiple of ``n``."""
    if n == 0:
        raise ValueError("period must be nonzero")
    lo, hi = window
    return GradedDims({d: 1 for d in range(lo, hi + 1) if d % n == 0})


@dataclass(frozen=True)
class OrbitMorphism:
    """A component ``(i, f)`` with ``f: K -> L[n i]`` a homogeneous graded map."""

    index: int
    map: GradedMap


def orbit_compose(f: OrbitMorphism, g: OrbitMorphism, period: int) -> OrbitMorphism:
    """``(i, f)`` then ``(j, g)`` is ``(i + j, shift^{n i}(g) o f)``."""
    return OrbitMorphism(f.index + g.index, compose_graded(shift_map(g.map, period * f.index), f.map))


def orbit_identity(k: ChainComplex) -> OrbitMorphism:
    return OrbitMorphism(0, identity_map(k.field, k.dims))


def component(k: ChainComplex, l: ChainComplex, period: int, index: int, degree: int,
              comps: Dict[int, Matrix]) -> OrbitMorphism:
    """Wrap blocks ``K_i -> L[n index]_{i+degree}`` as an orbit component."""
    target = shift(l, period * index)
    return OrbitMorphism(index, GradedMap(k.field, k.dims, target.dims, degree, dict(comps)))
