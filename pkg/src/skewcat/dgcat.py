"""Finite dg-categories given by bases and structure constants.

Composition is written diagrammatically: ``a ▷ b`` is "first ``a``, then
``b``" for ``a: X -> Y`` and ``b: Y -> Z``.  Homogeneous morphisms are
coefficient tuples over the basis of ``hom(X, Y)`` in a fixed degree.

The Leibniz rule is ``d(a ▷ b) = d(a) ▷ b + (-1)^|a| a ▷ d(b)``.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from .exactlin import FieldSpec, Matrix, ShapeError
from .graded import ChainComplex, GradedDims, GradedMap, homology, validate_complex
from .report import Report

HomKey = Tuple[str, str]


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vec_scale(c, u):
    return tuple(c * a for a in u)


class DgCategory:
    """A dg-category with finitely many objects and finite-dimensional homs.

    ``basis[(X, Y)][d]``
        labels of the basis of ``hom(X, Y)`` in degree ``d``; labels are
        unique within a hom.
    ``differential[(X, Y)][d]``
        matrix of ``d: hom(X, Y)_d -> hom(X, Y)_{d-1}``.
    ``composition[(X, Y, Z)][(p, q)]``
        matrix with ``dim hom(X, Z)_{p+q}`` rows; column ``i * dim_q + j``
        is ``a_i ▷ b_j``.
    ``units[X]``
        coefficients of the identity of ``X`` in ``hom(X, X)_0``.

    Missing entries are zero.  Only structural shapes are checked here; the
    axioms are checked by :func:`validate_dg_category`.
    """

    def __init__(self, field: FieldSpec, objects: Sequence[str], basis: Mapping,
                 differential: Optional[Mapping] = None, composition: Optional[Mapping] = None,
                 units: Optional[Mapping] = None):
        self.field = field
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object names")
        obj = set(self.objects)
        self.basis: Dict[HomKey, Dict[int, tuple]] = {}
        for (x, y), degs in basis.items():
            if x not in obj or y not in obj:
                raise ValueError(f"hom ({x}, {y}) between unknown objects")
            cleaned = {int(d): tuple(ls) for d, ls in degs.items() if ls}
            if cleaned:
                self.basis[(x, y)] = dict(sorted(cleaned.items()))
        self._index: Dict[HomKey, Dict[str, Tuple[int, int]]] = {}
        for key, degs in self.basis.items():
            idx = {}
            for d, labels in degs.items():
                for i, lab in enumerate(labels):
                    if lab in idx:
                        raise ValueError(f"duplicate basis label {lab!r} in hom{key}")
                    idx[lab] = (d, i)
            self._index[key] = idx

        self.differential: Dict[HomKey, Dict[int, Matrix]] = {}
        for key, blocks in (differential or {}).items():
            kept = {}
            for d, m in blocks.items():
                want = (self.dim(*key, d - 1), self.dim(*key, d))
                if m.shape != want:
                    raise ShapeError(f"differential of hom{key} in degree {d}: {m.shape} != {want}")
                if m.rows and m.cols:
                    kept[d] = m
            if kept:
                self.differential[key] = kept

        self.composition: Dict[Tuple[str, str, str], Dict[Tuple[int, int], Matrix]] = {}
        for (x, y, z), blocks in (composition or {}).items():
            kept = {}
            for (p, q), m in blocks.items():
                want = (self.dim(x, z, p + q), self.dim(x, y, p) * self.dim(y, z, q))
                if m.shape != want:
                    raise ShapeError(f"composition ({x},{y},{z}) degrees ({p},{q}): {m.shape} != {want}")
                if m.rows and m.cols:
                    kept[(p, q)] = m
            if kept:
                self.composition[(x, y, z)] = kept

        self.units: Dict[str, tuple] = {}
        for x in self.objects:
            u = tuple((units or {}).get(x, ()))
            n = self.dim(x, x, 0)
            if not u:
                u = (field.zero,) * n
            if len(u) != n:
                raise ShapeError(f"unit of {x} has length {len(u)}, expected {n}")
            self.units[x] = tuple(field(c) for c in u)
        self._hom_cache: Dict[HomKey, ChainComplex] = {}

    # construction helpers

    @classmethod
    def build(cls, field: FieldSpec, objects: Sequence[str], basis: Mapping,
              compose: Callable, units: Mapping, d: Optional[Callable] = None) -> "DgCategory":
        """Tabulate a category from rules on basis elements.

        ``compose(X, Y, Z, p, i, q, j)`` returns the coefficient vector of
        ``a_i ▷ b_j`` (or ``None`` for zero); ``d(X, Y, p, i)`` the vector
        of the differential of the ``i``-th basis element in degree ``p``.
        """
        shell = cls(field, objects, basis, units={})
        differential = {}
        if d is not None:
            for (x, y), degs in shell.basis.items():
                blocks = {}
                for p, labels in degs.items():
                    rows = shell.dim(x, y, p - 1)
                    cols = [d(x, y, p, i) or (field.zero,) * rows for i in range(len(labels))]
                    blocks[p] = Matrix.from_columns(cols, field, rows)
                differential[(x, y)] = blocks
        composition = {}
        for x, y, z in product(shell.objects, repeat=3):
            blocks = {}
            for p in shell.degrees(x, y):
                for q in shell.degrees(y, z):
                    rows = shell.dim(x, z, p + q)
                    if not rows:
                        continue
                    cols = []
                    for i in range(shell.dim(x, y, p)):
                        for j in range(shell.dim(y, z, q)):
                            v = compose(x, y, z, p, i, q, j)
                            cols.append(tuple(v) if v is not None else (field.zero,) * rows)
                    blocks[(p, q)] = Matrix.from_columns(cols, field, rows)
            if blocks:
                composition[(x, y, z)] = blocks
        return cls(field, objects, basis, differential, composition, units)

    @classmethod
    def from_sparse(cls, field: FieldSpec, objects: Sequence[str], basis: Mapping,
                    composition: Mapping, units: Mapping,
                    differential: Optional[Mapping] = None) -> "DgCategory":
        """Build from label-level records.

        ``composition[(X, Y, Z)][(a, b)] = {c: coef}``;
        ``differential[(X, Y)][a] = {b: coef}``; ``units[X] = {a: coef}``.
        Unlisted products and differentials are zero.
        """
        shell = cls(field, objects, basis, units={})

        def vec(x, y, deg, coefs):
            v = [field.zero] * shell.dim(x, y, deg)
            for lab, c in coefs.items():
                dd, i = shell.locate(x, y, lab)
                if dd != deg:
                    raise ValueError(f"{lab!r} has degree {dd}, expected {deg}")
                v[i] += field(c)
            return tuple(v)

        def comp(x, y, z, p, i, q, j):
            rec = composition.get((x, y, z), {}).get((shell.labels(x, y, p)[i], shell.labels(y, z, q)[j]))
            return vec(x, z, p + q, rec) if rec else None

        def diff(x, y, p, i):
            rec = (differential or {}).get((x, y), {}).get(shell.labels(x, y, p)[i])
            return vec(x, y, p - 1, rec) if rec else None

        unit_vecs = {x: vec(x, x, 0, units.get(x, {})) for x in shell.objects}
        return cls.build(field, objects, basis, comp, unit_vecs, diff)

    def replace(self, **changes) -> "DgCategory":
        args = dict(field=self.field, objects=self.objects, basis=self.basis,
                    differential=self.differential, composition=self.composition, units=self.units)
        args.update(changes)
        return DgCategory(**args)

    # accessors

    def degrees(self, x: str, y: str) -> list:
        return list(self.basis.get((x, y), {}))

    def dim(self, x: str, y: str, d: int) -> int:
        return len(self.basis.get((x, y), {}).get(d, ()))

    def dims(self, x: str, y: str) -> GradedDims:
        return GradedDims({d: len(ls) for d, ls in self.basis.get((x, y), {}).items()})

    def labels(self, x: str, y: str, d: int) -> tuple:
        return self.basis.get((x, y), {}).get(d, ())

    def locate(self, x: str, y: str, label: str) -> Tuple[int, int]:
        try:
            return self._index[(x, y)][label]
        except KeyError:
            raise KeyError(f"no basis element {label!r} in hom({x}, {y})") from None

    def basis_elements(self, x: str, y: str):
        """Yield ``(degree, index, label)`` over the basis of ``hom(x, y)``."""
        for d, labels in self.basis.get((x, y), {}).items():
            for i, lab in enumerate(labels):
                yield d, i, lab

    def zero(self, x: str, y: str, d: int) -> tuple:
        return (self.field.zero,) * self.dim(x, y, d)

    def basis_vector(self, x: str, y: str, d: int, i: int) -> tuple:
        v = [self.field.zero] * self.dim(x, y, d)
        v[i] = self.field.one
        return tuple(v)

    def element(self, x: str, y: str, coefs: Mapping) -> Tuple[int, tuple]:
        """A homogeneous element given as ``{label: coef}``; returns ``(degree, vector)``."""
        degs = {self.locate(x, y, lab)[0] for lab in coefs}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        deg = degs.pop() if degs else 0
        v = list(self.zero(x, y, deg))
        for lab, c in coefs.items():
            v[self.locate(x, y, lab)[1]] += self.field(c)
        return deg, tuple(v)

    def describe(self, x: str, y: str, d: int, vec: Sequence) -> dict:
        return {lab: c for lab, c in zip(self.labels(x, y, d), vec) if c}

    def d_matrix(self, x: str, y: str, d: int) -> Matrix:
        m = self.differential.get((x, y), {}).get(d)
        if m is None:
            return Matrix.zeros(self.field, self.dim(x, y, d - 1), self.dim(x, y, d))
        return m

    def comp_matrix(self, x: str, y: str, z: str, p: int, q: int) -> Matrix:
        m = self.composition.get((x, y, z), {}).get((p, q))
        if m is None:
            return Matrix.zeros(self.field, self.dim(x, z, p + q), self.dim(x, y, p) * self.dim(y, z, q))
        return m

    def d(self, x: str, y: str, p: int, vec: Sequence) -> tuple:
        if not self.dim(x, y, p - 1):
            return ()
        return self.d_matrix(x, y, p).apply(vec)

    def compose(self, x: str, y: str, z: str, p: int, u: Sequence, q: int, v: Sequence) -> tuple:
        """``u ▷ v`` for ``u`` in ``hom(x, y)_p`` and ``v`` in ``hom(y, z)_q``."""
        rows = self.dim(x, z, p + q)
        out = [self.field.zero] * rows
        m = self.composition.get((x, y, z), {}).get((p, q))
        if m is None or not rows:
            return tuple(out)
        nq = len(v)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                col = i * nq + j
                for r in range(rows):
                    s = m[r, col]
                    if s:
                        out[r] += c * s
        return tuple(out)

    def unit(self, x: str) -> tuple:
        return self.units[x]

    def hom(self, x: str, y: str) -> ChainComplex:
        c = self._hom_cache.get((x, y))
        if c is None:
            dims = self.dims(x, y)
            c = ChainComplex(self.field, dims,
                             GradedMap(self.field, dims, dims, -1, dict(self.differential.get((x, y), {}))))
            self._hom_cache[(x, y)] = c
        return c

    def is_algebra(self) -> bool:
        """One object, homs concentrated in degree 0, zero differential."""
        if len(self.objects) != 1:
            return False
        x = self.objects[0]
        return set(self.degrees(x, x)) <= {0} and not self.differential

    def __eq__(self, other):
        if not isinstance(other, DgCategory):
            return NotImplemented
        if (self.field, self.objects, self.basis, self.units) != (
                other.field, other.objects, other.basis, other.units):
            return False
        for key in set(self.differential) | set(other.differential):
            for d in self.degrees(*key):
                if self.d_matrix(*key, d) != other.d_matrix(*key, d):
                    return False
        for x, y, z in set(self.composition) | set(other.composition):
            for p in self.degrees(x, y):
                for q in self.degrees(y, z):
                    if self.comp_matrix(x, y, z, p, q) != other.comp_matrix(x, y, z, p, q):
                        return False
        return True

    def __repr__(self):
        return f"DgCategory({self.field.name}, objects={list(self.objects)})"


class Algebra(DgCategory):
    """An associative unital algebra: one object, degree 0, no differential.

    ``a ▷ b`` is the product ``a · b``.
    """

    def __init__(self, field: FieldSpec, basis: Sequence[str], structure: Matrix,
                 unit: Sequence, obj: str = "*"):
        n = len(basis)
        if structure.shape != (n, n * n):
            raise ShapeError(f"structure matrix {structure.shape} for a {n}-dimensional algebra")
        super().__init__(field, [obj], {(obj, obj): {0: tuple(basis)}}, {},
                         {(obj, obj, obj): {(0, 0): structure}}, {obj: tuple(unit)})

    @classmethod
    def from_table(cls, field: FieldSpec, basis: Sequence[str], table: Mapping,
                   unit: Mapping, obj: str = "*") -> "Algebra":
        """``table[(a, b)] = {c: coef}``; absent products are zero."""
        n = len(basis)
        pos = {lab: i for i, lab in enumerate(basis)}
        cols = []
        for a in basis:
            for b in basis:
                v = [field.zero] * n
                for c, coef in table.get((a, b), {}).items():
                    v[pos[c]] += field(coef)
                cols.append(v)
        u = [field.zero] * n
        for c, coef in unit.items():
            u[pos[c]] += field(coef)
        return cls(field, basis, Matrix.from_columns(cols, field, n), u, obj)

    @classmethod
    def from_category(cls, cat: DgCategory) -> "Algebra":
        if not cat.is_algebra():
            raise ValueError("not an algebra: need one object, degree 0 only, zero differential")
        x = cat.objects[0]
        return cls(cat.field, cat.labels(x, x, 0), cat.comp_matrix(x, x, x, 0, 0), cat.unit(x), x)

    @property
    def obj(self) -> str:
        return self.objects[0]

    @property
    def basis_labels(self) -> tuple:
        return self.labels(self.obj, self.obj, 0)

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    @property
    def structure(self) -> Matrix:
        return self.comp_matrix(self.obj, self.obj, self.obj, 0, 0)

    @property
    def one(self) -> tuple:
        return self.unit(self.obj)

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        x = self.obj
        return self.compose(x, x, x, 0, u, 0, v)

    def product(self, i: int, j: int) -> tuple:
        return self.structure.col(i * self.dimension + j)

    def vector(self, coefs: Mapping) -> tuple:
        return self.element(self.obj, self.obj, coefs)[1]


class DgFunctor:
    """A dg-functor between finite dg-categories.

    ``hom_maps[(X, Y)][d]`` is the matrix ``hom_A(X, Y)_d -> hom_B(FX, FY)_d``;
    missing blocks are zero.
    """

    def __init__(self, source: DgCategory, target: DgCategory, obj_map: Mapping,
                 hom_maps: Mapping):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.hom_maps: Dict[HomKey, Dict[int, Matrix]] = {}
        for (x, y), blocks in hom_maps.items():
            kept = {}
            for d, m in blocks.items():
                fx, fy = self.obj_map[x], self.obj_map[y]
                want = (target.dim(fx, fy, d), source.dim(x, y, d))
                if m.shape != want:
                    raise ShapeError(f"functor block hom({x},{y})_{d}: {m.shape} != {want}")
                if m.rows and m.cols:
                    kept[d] = m
            if kept:
                self.hom_maps[(x, y)] = kept

    def block(self, x: str, y: str, d: int) -> Matrix:
        m = self.hom_maps.get((x, y), {}).get(d)
        if m is None:
            fx, fy = self.obj_map[x], self.obj_map[y]
            return Matrix.zeros(self.source.field, self.target.dim(fx, fy, d), self.source.dim(x, y, d))
        return m

    def __call__(self, x: str) -> str:
        return self.obj_map[x]

    def apply(self, x: str, y: str, d: int, vec: Sequence) -> tuple:
        fx, fy = self.obj_map[x], self.obj_map[y]
        if not self.target.dim(fx, fy, d):
            return ()
        return self.block(x, y, d).apply(vec)

    def graded_map(self, x: str, y: str) -> GradedMap:
        fx, fy = self.obj_map[x], self.obj_map[y]
        return GradedMap(self.source.field, self.source.dims(x, y), self.target.dims(fx, fy), 0,
                         dict(self.hom_maps.get((x, y), {})))

    def __eq__(self, other):
        if not isinstance(other, DgFunctor):
            return NotImplemented
        if self.obj_map != other.obj_map:
            return False
        for x, y in product(self.source.objects, repeat=2):
            for d in self.source.degrees(x, y):
                if self.block(x, y, d) != other.block(x, y, d):
                    return False
        return True

    def __repr__(self):
        return f"DgFunctor({self.obj_map})"


def identity_functor(a: DgCategory) -> DgFunctor:
    return DgFunctor(a, a, {x: x for x in a.objects},
                     {key: {d: Matrix.identity(a.field, len(ls)) for d, ls in degs.items()}
                      for key, degs in a.basis.items()})


def compose_functors(f: DgFunctor, g: DgFunctor) -> DgFunctor:
    """``g o f``: apply ``f`` first."""
    obj_map = {x: g.obj_map[f.obj_map[x]] for x in f.source.objects}
    blocks = {}
    for x, y in product(f.source.objects, repeat=2):
        fx, fy = f.obj_map[x], f.obj_map[y]
        per = {}
        for d in f.source.degrees(x, y):
            per[d] = g.block(fx, fy, d) @ f.block(x, y, d)
        blocks[(x, y)] = per
    return DgFunctor(f.source, g.target, obj_map, blocks)


def validate_dg_category(a: DgCategory) -> Report:
    """Check d^2 = 0, strict units, associativity and the Leibniz rule.

    Every basis pair and triple is visited; each violation carries the
    objects and basis labels involved.
    """
    rep = Report("dgcat")
    objs = a.objects
    for x, y in product(objs, repeat=2):
        sub = validate_complex(a.hom(x, y))
        for v in sub.violations:
            rep.add(v.axiom, x, y, *v.witness, detail=v.detail)

    for x in objs:
        u = a.unit(x)
        if any(a.d(x, x, 0, u)):
            rep.add("unit_cycle", x, detail="d(unit) != 0")
    for x, y in product(objs, repeat=2):
        ux, uy = a.unit(x), a.unit(y)
        for d, i, lab in a.basis_elements(x, y):
            e = a.basis_vector(x, y, d, i)
            if a.compose(x, x, y, 0, ux, d, e) != e:
                rep.add("left_unit", x, y, lab, detail=f"id_{x} ▷ {lab} != {lab}")
            if a.compose(x, y, y, d, e, 0, uy) != e:
                rep.add("right_unit", x, y, lab, detail=f"{lab} ▷ id_{y} != {lab}")

    for x, y, z in product(objs, repeat=3):
        for p, i, la in a.basis_elements(x, y):
            ea = a.basis_vector(x, y, p, i)
            da = a.d(x, y, p, ea)
            sign = -1 if p % 2 else 1
            for q, j, lb in a.basis_elements(y, z):
                eb = a.basis_vector(y, z, q, j)
                lhs = a.d(x, z, p + q, a.compose(x, y, z, p, ea, q, eb))
                rhs = _vec_add(a.compose(x, y, z, p - 1, da, q, eb),
                               _vec_scale(sign, a.compose(x, y, z, p, ea, q - 1, a.d(y, z, q, eb))))
                if lhs != rhs:
                    rep.add("leibniz", x, y, z, la, lb,
                            detail=f"d({la} ▷ {lb}) != d{la} ▷ {lb} + (-1)^{p} {la} ▷ d{lb}")

    for x, y, z in product(objs, repeat=3):
        pairs = {}
        for p, i, la in a.basis_elements(x, y):
            ea = a.basis_vector(x, y, p, i)
            for q, j, lb in a.basis_elements(y, z):
                eb = a.basis_vector(y, z, q, j)
                pairs[(p, i, q, j)] = a.compose(x, y, z, p, ea, q, eb)
        if not pairs:
            continue
        for w in objs:
            for q, j, lb in a.basis_elements(y, z):
                eb = a.basis_vector(y, z, q, j)
                for r, k, lc in a.basis_elements(z, w):
                    ec = a.basis_vector(z, w, r, k)
                    bc = a.compose(y, z, w, q, eb, r, ec)
                    for p, i, la in a.basis_elements(x, y):
                        lhs = a.compose(x, z, w, p + q, pairs[(p, i, q, j)], r, ec)
                        rhs = a.compose(x, y, w, p, a.basis_vector(x, y, p, i), q + r, bc)
                        if lhs != rhs:
                            rep.add("associativity", x, y, z, w, la, lb, lc,
                                    detail=f"({la} ▷ {lb}) ▷ {lc} != {la} ▷ ({lb} ▷ {lc})")
    return rep


def validate_dg_functor(f: DgFunctor, a: Optional[DgCategory] = None,
                        b: Optional[DgCategory] = None) -> Report:
    """Check that ``f`` preserves units, composition and differentials."""
    a = a or f.source
    b = b or f.target
    rep = Report("dgfunctor")
    for x in a.objects:
        if x not in f.obj_map:
            rep.add("object_map", x, detail="object not mapped")
        elif f.obj_map[x] not in b.objects:
            rep.add("object_map", x, f.obj_map[x], detail="image is not an object of the target")
    if not rep.ok:
        return rep
    for x in a.objects:
        if f.apply(x, x, 0, a.unit(x)) != b.unit(f(x)):
            rep.add("unit", x, detail=f"F(id_{x}) != id_{f(x)}")
    for x, y in product(a.objects, repeat=2):
        fx, fy = f(x), f(y)
        for d, i, lab in a.basis_elements(x, y):
            e = a.basis_vector(x, y, d, i)
            if f.apply(x, y, d - 1, a.d(x, y, d, e)) != b.d(fx, fy, d, f.apply(x, y, d, e)):
                rep.add("differential", x, y, lab, detail=f"F(d{lab}) != dF({lab})")
    for x, y, z in product(a.objects, repeat=3):
        fx, fy, fz = f(x), f(y), f(z)
        for p, i, la in a.basis_elements(x, y):
            ea = a.basis_vector(x, y, p, i)
            fa = f.apply(x, y, p, ea)
            for q, j, lb in a.basis_elements(y, z):
                eb = a.basis_vector(y, z, q, j)
                lhs = f.apply(x, z, p + q, a.compose(x, y, z, p, ea, q, eb))
                rhs = b.compose(fx, fy, fz, p, fa, q, f.apply(y, z, q, eb))
                if lhs != rhs:
                    rep.add("composition", x, y, z, la, lb, detail=f"F({la} ▷ {lb}) != F{la} ▷ F{lb}")
    return rep


def hom_homology(a: DgCategory, x: str, y: str) -> GradedDims:
    return homology(a.hom(x, y))
