"""Finite monoids and groups by multiplication table, and strict actions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .dgcat import (DgCategory, DgFunctor, compose_functors, identity_functor,
                    validate_dg_functor)
from .exactlin import Matrix
from .report import Report


class NotAGroupError(ValueError):
    """Raised when an operation needs inverses the monoid does not have."""


class FiniteMonoid:
    """A finite monoid given by its multiplication table on named elements.

    ``table[i][j]`` is the index of ``elements[i] * elements[j]``.
    ``inverses`` is optional; when omitted, inverses are read off the table.
    """

    def __init__(self, elements: Sequence[str], table: Sequence[Sequence[int]], identity: str,
                 inverses: Optional[Mapping[str, str]] = None):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate element names")
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.declared_inverses = dict(inverses) if inverses is not None else None
        self._pos = {g: i for i, g in enumerate(self.elements)}

    @classmethod
    def from_names(cls, elements: Sequence[str], table: Sequence[Sequence[str]], identity: str,
                   inverses: Optional[Mapping[str, str]] = None) -> "FiniteMonoid":
        pos = {g: i for i, g in enumerate(elements)}
        return cls(elements, [[pos[c] for c in row] for row in table], identity, inverses)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FiniteMonoid):
            return NotImplemented
        return (self.elements, self.table, self.identity, self.declared_inverses) == (
            other.elements, other.table, other.identity, other.declared_inverses)

    def __repr__(self):
        return f"FiniteMonoid({list(self.elements)})"

    def index(self, g: str) -> int:
        return self._pos[g]

    def mul(self, g: str, h: str) -> str:
        return self.elements[self.table[self._pos[g]][self._pos[h]]]

    def name_table(self) -> List[List[str]]:
        return [[self.elements[k] for k in row] for row in self.table]

    def _computed_inverse(self, g: str) -> Optional[str]:
        e = self.identity
        for h in self.elements:
            if self.mul(g, h) == e and self.mul(h, g) == e:
                return h
        return None

    def inverse(self, g: str) -> str:
        if self.declared_inverses is not None:
            h = self.declared_inverses.get(g)
        else:
            h = self._computed_inverse(g)
        if h is None:
            raise NotAGroupError(f"{g} has no inverse")
        return h

    @property
    def is_group(self) -> bool:
        try:
            for g in self.elements:
                h = self.inverse(g)
                if self.mul(g, h) != self.identity or self.mul(h, g) != self.identity:
                    return False
        except (NotAGroupError, KeyError):
            return False
        return True

    def require_group(self) -> None:
        if not self.is_group:
            raise NotAGroupError("this operation needs a group, got a monoid without inverses")

    def to_json(self) -> dict:
        out = {"elements": list(self.elements), "table": self.name_table(), "identity": self.identity}
        if self.declared_inverses is not None:
            out["inverses"] = dict(self.declared_inverses)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "FiniteMonoid":
        return cls.from_names(data["elements"], data["table"], data["identity"], data.get("inverses"))


def cyclic_group(n: int, gen: str = "g") -> FiniteMonoid:
    """Z/n with elements ``e, g, g^2, ...``."""
    names = ["e"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inv = {names[i]: names[(-i) % n] for i in range(n)}
    return FiniteMonoid(names, table, "e", inv)


def symmetric_group(n: int) -> FiniteMonoid:
    """S_n on one-line notation; ``(s * t)(i) = s(t(i))``."""
    perms = list(permutations(range(n)))
    names = ["e" if p == tuple(range(n)) else "".join(str(k + 1) for k in p) for p in perms]
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
    return FiniteMonoid(names, table, "e")


def truncated_monoid(k: int, gen: str = "t") -> FiniteMonoid:
    """``{e, t, ..., t^k}`` with ``t^k`` absorbing: the free monoid on ``t`` cut off at ``t^k``."""
    names = ["e"] + [gen if j == 1 else f"{gen}^{j}" for j in range(1, k + 1)]
    table = [[min(i + j, k) for j in range(k + 1)] for i in range(k + 1)]
    return FiniteMonoid(names, table, "e")


def validate_monoid(m: FiniteMonoid) -> Report:
    """Closure, identity, associativity and (declared) inverse laws over the full table."""
    rep = Report("monoid")
    n = len(m.elements)
    if len(m.table) != n or any(len(row) != n for row in m.table):
        rep.add("table_shape", detail=f"table is not {n}x{n}")
        return rep
    for i, j in product(range(n), repeat=2):
        if not 0 <= m.table[i][j] < n:
            rep.add("closure", m.elements[i], m.elements[j])
    if not rep.ok:
        return rep
    if m.identity not in m._pos:
        rep.add("identity", m.identity, detail="identity is not an element")
        return rep
    for g in m.elements:
        if m.mul(m.identity, g) != g or m.mul(g, m.identity) != g:
            rep.add("identity", g, detail=f"e*{g} or {g}*e != {g}")
    for g, h, k in product(m.elements, repeat=3):
        if m.mul(m.mul(g, h), k) != m.mul(g, m.mul(h, k)):
            rep.add("associativity", g, h, k, detail=f"({g}{h}){k} != {g}({h}{k})")
    if m.declared_inverses is not None:
        for g in m.elements:
            h = m.declared_inverses.get(g)
            if h not in m._pos:
                rep.add("inverse", g, detail="missing inverse")
            elif m.mul(g, h) != m.identity or m.mul(h, g) != m.identity:
                rep.add("inverse", g, h, detail=f"{g}*{h} != e")
    return rep


class StrictAction:
    """A monoid acting on a dg-category by dg-functors, strictly."""

    def __init__(self, monoid: FiniteMonoid, category: DgCategory, functors: Mapping[str, DgFunctor]):
        self.monoid = monoid
        self.category = category
        self.functors: Dict[str, DgFunctor] = dict(functors)

    @classmethod
    def from_matrices(cls, monoid: FiniteMonoid, category: DgCategory,
                      object_maps: Mapping[str, Mapping[str, str]],
                      hom_maps: Mapping[str, Mapping]) -> "StrictAction":
        """``hom_maps[g][(X, Y)][d]`` is the matrix of ``hom(X, Y)_d -> hom(gX, gY)_d``."""
        funcs = {}
        for g in monoid.elements:
            omap = object_maps.get(g) or {x: x for x in category.objects}
            funcs[g] = DgFunctor(category, category, omap, hom_maps.get(g, {}))
        return cls(monoid, category, funcs)

    def __call__(self, g: str) -> DgFunctor:
        return self.functors[g]

    def act_object(self, g: str, x: str) -> str:
        return self.functors[g].obj_map[x]

    def act(self, g: str, x: str, y: str, d: int, vec: Sequence) -> tuple:
        """``g.a`` for ``a`` in ``hom(x, y)_d``; lands in ``hom(g.x, g.y)_d``."""
        return self.functors[g].apply(x, y, d, vec)

    def __eq__(self, other):
        if not isinstance(other, StrictAction):
            return NotImplemented
        return (self.monoid == other.monoid and self.category == other.category
                and all(self.functors[g] == other.functors[g] for g in self.monoid.elements))


def trivial_action(monoid: FiniteMonoid, category: DgCategory) -> StrictAction:
    ident = identity_functor(category)
    return StrictAction(monoid, category, {g: ident for g in monoid.elements})


def validate_action(rho: StrictAction) -> Report:
    """Check rho(e) = id and rho(g) o rho(h) = rho(gh) on the nose, and each rho(g) is a dg-functor."""
    rep = Report("action")
    m, a = rho.monoid, rho.category
    missing = [g for g in m.elements if g not in rho.functors]
    for g in missing:
        rep.add("functor_missing", g)
    if missing:
        return rep
    for g in m.elements:
        sub = validate_dg_functor(rho(g), a, a)
        for v in sub.violations:
            rep.add("functor." + v.axiom, g, *v.witness, detail=v.detail)
    if not rep.ok:
        return rep
    if rho(m.identity) != identity_functor(a):
        rep.add("identity", m.identity, detail="rho(e) is not the identity functor")
    for g, h in product(m.elements, repeat=2):
        lhs = compose_functors(rho(h), rho(g))
        gh = m.mul(g, h)
        if lhs.obj_map != rho(gh).obj_map:
            rep.add("multiplicativity", g, h, detail=f"rho({g}) rho({h}) != rho({gh}) on objects")
            continue
        for x, y in product(a.objects, repeat=2):
            for d in a.degrees(x, y):
                if lhs.block(x, y, d) != rho(gh).block(x, y, d):
                    rep.add("multiplicativity", g, h, x, y, d,
                            detail=f"rho({g}) rho({h}) != rho({gh}) on hom({x},{y})_{d}")
    return rep


@dataclass(frozen=True)
class Orbit:
    representative: str
    members: Tuple[str, ...]


def orbits(rho: StrictAction, representatives: Optional[Sequence[str]] = None) -> List[Orbit]:
    """Partition the objects into orbits.

    The default representative of an orbit is its first object in
    declaration order; ``representatives`` overrides it and must pick
    exactly one object per orbit.
    """
    rho.monoid.require_group()
    objs = rho.category.objects
    seen = {}
    blocks = []
    for x in objs:
        if x in seen:
            continue
        members = {rho.act_object(g, x) for g in rho.monoid.elements}
        block = tuple(y for y in objs if y in members)
        for y in block:
            seen[y] = len(blocks)
        blocks.append(block)
    reps = [b[0] for b in blocks]
    if representatives is not None:
        chosen = list(representatives)
        hit = [seen.get(r) for r in chosen]
        if None in hit:
            raise ValueError(f"representatives {chosen} contain unknown objects")
        if len(set(hit)) != len(hit):
            raise ValueError("two representatives lie in the same orbit")
        if len(hit) != len(blocks):
            raise ValueError("some orbit has no representative")
        for r, b in zip(chosen, hit):
            reps[b] = r
    return [Orbit(r, b) for r, b in zip(reps, blocks)]


def is_free_on_objects(rho: StrictAction):
    """``(True, None)`` if ``g.X = X`` forces ``g = e``, else ``(False, (g, X))``."""
    rho.monoid.require_group()
    for g in rho.monoid.elements:
        if g == rho.monoid.identity:
            continue
        for x in rho.category.objects:
            if rho.act_object(g, x) == x:
                return False, (g, x)
    return True, None


def algebra_action(monoid: FiniteMonoid, algebra, matrices: Mapping[str, Matrix]) -> StrictAction:
    """Action on a one-object algebra given by one matrix per element (identity if omitted)."""
    x = algebra.objects[0]
    n = algebra.dim(x, x, 0)
    funcs = {}
    for g in monoid.elements:
        m = matrices.get(g)
        if m is None:
            m = Matrix.identity(algebra.field, n)
        funcs[g] = DgFunctor(algebra, algebra, {x: x}, {(x, x): {0: m}})
    return StrictAction(monoid, algebra, funcs)
