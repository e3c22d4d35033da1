"""Skew group dg-categories and their companions.

For a strict action of ``G`` on ``A``, the skew category ``A*G`` has the
objects of ``A`` and

    hom(X~, Y~) = (+)_{g in G} hom_A(X, g.Y)

with basis labels ``"g|a"``.  Composition is

    (g1, a) ▷ (g2, b) = (g1 g2, a ▷ (g1.b)),

the differential is ``d(g, a) = (g, da)`` and the identity of ``X~`` is
``(e, id_X)``.  None of this needs inverses, so monoids are accepted; the
induced action ``h.(g, a) = (h g h^-1, h.a)`` and everything built on it
need a group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .dgcat import (Algebra, DgCategory, DgFunctor, compose_functors, validate_dg_category,
                    validate_dg_functor)
from .exactlin import Matrix
from .groupact import (StrictAction, is_free_on_objects, orbits, validate_action,
                       validate_monoid)
from .report import Report, ValidationError


class HypothesisError(ValueError):
    """Raised when a theorem check is asked for outside its hypothesis."""


def skew_label(g: str, a: str) -> str:
    return f"{g}|{a}"


def split_label(label: str) -> Tuple[str, str]:
    g, a = label.split("|", 1)
    return g, a


def _check_input(rho: StrictAction, check_category: bool = True) -> None:
    rep = Report("skew input")
    rep.extend(validate_monoid(rho.monoid), "monoid.")
    if check_category:
        rep.extend(validate_dg_category(rho.category), "category.")
    if rep.ok:
        rep.extend(validate_action(rho), "action.")
    if not rep.ok:
        raise ValidationError(rep)


@dataclass
class SkewResult:
    action: StrictAction
    category: DgCategory
    embedding: DgFunctor
    induced_action: Optional[StrictAction]
    tilde: Dict[str, str]
    # offsets[(X, Y, d)][g] = (start, length) of the g-summand inside hom(X~, Y~)_d
    offsets: Dict[Tuple[str, str, int], Dict[str, Tuple[int, int]]]

    def inject(self, x: str, y: str, d: int, g: str, vec: Sequence) -> tuple:
        """The element ``(g, a)`` of ``hom(X~, Y~)_d`` for ``a`` in ``hom_A(X, g.Y)_d``."""
        s = self.category
        out = list(s.zero(self.tilde[x], self.tilde[y], d))
        start, length = self.offsets[(x, y, d)][g]
        if len(vec) != length:
            raise ValueError(f"component for {g} has length {len(vec)}, expected {length}")
        out[start:start + length] = vec
        return tuple(out)

    def component(self, x: str, y: str, d: int, g: str, vec: Sequence) -> tuple:
        start, length = self.offsets[(x, y, d)][g]
        return tuple(vec[start:start + length])


def _offsets(rho: StrictAction, x: str, y: str, d: int) -> Dict[str, Tuple[int, int]]:
    a = rho.category
    out, start = {}, 0
    for g in rho.monoid.elements:
        n = a.dim(x, rho.act_object(g, y), d)
        out[g] = (start, n)
        start += n
    return out


def skew_group_dg_category(rho: StrictAction, check: bool = True) -> SkewResult:
    """Build ``A*G``, the embedding ``F_A`` and (for groups) the induced action."""
    if check:
        _check_input(rho)
    a, m = rho.category, rho.monoid
    field = a.field
    objs = a.objects
    degrees = sorted({d for key in a.basis for d in a.basis[key]})

    basis, offsets = {}, {}
    for x, y in product(objs, repeat=2):
        per = {}
        for d in degrees:
            off = _offsets(rho, x, y, d)
            offsets[(x, y, d)] = off
            labels = [skew_label(g, lab) for g in m.elements
                      for lab in a.labels(x, rho.act_object(g, y), d)]
            if labels:
                per[d] = labels
        if per:
            basis[(x, y)] = per

    def decode(x, y, d, i):
        for g, (start, length) in offsets[(x, y, d)].items():
            if start <= i < start + length:
                return g, i - start
        raise IndexError(i)

    def compose(x, y, z, p, i, q, j):
        g1, ia = decode(x, y, p, i)
        g2, jb = decode(y, z, q, j)
        g1y = rho.act_object(g1, y)
        g2z = rho.act_object(g2, z)
        g12 = m.mul(g1, g2)
        g12z = rho.act_object(g12, z)
        ea = a.basis_vector(x, g1y, p, ia)
        eb = a.basis_vector(y, g2z, q, jb)
        g1b = rho.act(g1, y, g2z, q, eb)
        c = a.compose(x, g1y, g12z, p, ea, q, g1b)
        out = [field.zero] * sum(n for _, n in offsets[(x, z, p + q)].values())
        start, length = offsets[(x, z, p + q)][g12]
        out[start:start + length] = c
        return out

    def diff(x, y, p, i):
        g, ia = decode(x, y, p, i)
        gy = rho.act_object(g, y)
        da = a.d(x, gy, p, a.basis_vector(x, gy, p, ia))
        out = [field.zero] * sum(n for _, n in offsets[(x, y, p - 1)].values()) \
            if (x, y, p - 1) in offsets else []
        if not out:
            return None
        start, length = offsets[(x, y, p - 1)][g]
        out[start:start + length] = da
        return out

    e = m.identity
    units = {}
    for x in objs:
        off0 = offsets.get((x, x, 0)) or _offsets(rho, x, x, 0)
        u = [field.zero] * sum(n for _, n in off0.values())
        start, length = off0[e]
        u[start:start + length] = a.unit(x)
        units[x] = u

    s = DgCategory.build(field, objs, basis, compose, units, diff)
    tilde = {x: x for x in objs}

    emb_blocks = {}
    for x, y in product(objs, repeat=2):
        per = {}
        for d in a.degrees(x, y):
            start, length = offsets[(x, y, d)][e]
            cols = []
            for i in range(length):
                v = [field.zero] * s.dim(x, y, d)
                v[start + i] = field.one
                cols.append(v)
            per[d] = Matrix.from_columns(cols, field, s.dim(x, y, d))
        emb_blocks[(x, y)] = per
    embedding = DgFunctor(a, s, tilde, emb_blocks)

    result = SkewResult(rho, s, embedding, None, tilde, offsets)
    if m.is_group:
        result.induced_action = _induced_action(result)
    return result


def _induced_action(res: SkewResult) -> StrictAction:
    """``h.X~ = (h.X)~`` and ``h.(g, a) = (h g h^-1, h.a)``."""
    rho, s = res.action, res.category
    m, a = rho.monoid, rho.category
    field = a.field
    funcs = {}
    for h in m.elements:
        hinv = m.inverse(h)
        omap = {x: rho.act_object(h, x) for x in s.objects}
        blocks = {}
        for x, y in product(s.objects, repeat=2):
            hx, hy = omap[x], omap[y]
            per = {}
            for d in s.degrees(x, y):
                cols = []
                for g in m.elements:
                    gy = rho.act_object(g, y)
                    conj = m.mul(m.mul(h, g), hinv)
                    for i in range(a.dim(x, gy, d)):
                        ha = rho.act(h, x, gy, d, a.basis_vector(x, gy, d, i))
                        cols.append(res.inject(hx, hy, d, conj, ha))
                per[d] = Matrix.from_columns(cols, field, s.dim(hx, hy, d))
            blocks[(x, y)] = per
        funcs[h] = DgFunctor(s, s, omap, blocks)
    return StrictAction(m, s, funcs)


def skew_group_algebra(rho: StrictAction, check: bool = True) -> Algebra:
    """The skew group algebra ``AG`` with ``(g1, a1)(g2, a2) = (g1 g2, a1 (g1.a2))``.

    Basis order: group elements in declaration order, then the basis of ``A``.
    """
    a = rho.category
    if not a.is_algebra():
        raise ValueError("skew_group_algebra needs an action on a one-object degree-0 algebra")
    if check:
        _check_input(rho)
    alg = a if isinstance(a, Algebra) else Algebra.from_category(a)
    m = rho.monoid
    field = alg.field
    n = alg.dimension
    G = m.elements
    labels = [skew_label(g, lab) for g in G for lab in alg.basis_labels]
    gmat = {g: rho(g).block(alg.obj, alg.obj, 0) for g in G}
    cols = []
    for g1 in G:
        for i in range(n):
            for g2 in G:
                for j in range(n):
                    g1a2 = gmat[g1].col(j)
                    c = alg.mul(alg.basis_vector(alg.obj, alg.obj, 0, i), g1a2)
                    v = [field.zero] * (len(G) * n)
                    k = m.index(m.mul(g1, g2)) * n
                    v[k:k + n] = c
                    cols.append(v)
    unit = [field.zero] * (len(G) * n)
    k = m.index(m.identity) * n
    unit[k:k + n] = alg.one
    return Algebra(field, labels, Matrix.from_columns(cols, field, len(G) * n), unit, alg.obj)


@dataclass
class ReducedResult:
    category: DgCategory
    inclusion: DgFunctor
    representatives: List[str]


def full_subcategory(s: DgCategory, objs: Sequence[str]) -> DgCategory:
    keep = set(objs)
    basis = {k: v for k, v in s.basis.items() if k[0] in keep and k[1] in keep}
    diff = {k: v for k, v in s.differential.items() if k[0] in keep and k[1] in keep}
    comp = {k: v for k, v in s.composition.items() if set(k) <= keep}
    units = {x: s.unit(x) for x in objs}
    return DgCategory(s.field, list(objs), basis, diff, comp, units)


def reduce(s: SkewResult, representatives: Optional[Sequence[str]] = None) -> ReducedResult:
    """The full subcategory of ``A*G`` on one chosen object per orbit, and its inclusion."""
    rho = s.action
    rho.monoid.require_group()
    orbs = orbits(rho, representatives)
    reps = [s.tilde[o.representative] for o in orbs]
    sub = full_subcategory(s.category, reps)
    inc = DgFunctor(sub, s.category, {x: x for x in reps},
                    {key: {d: Matrix.identity(sub.field, len(ls)) for d, ls in degs.items()}
                     for key, degs in sub.basis.items()})
    return ReducedResult(sub, inc, reps)


@dataclass
class FreeifyResult:
    category: DgCategory
    action: StrictAction
    projection: DgFunctor
    representatives: List[str]


def free_object(x: str, g: str) -> str:
    return f"({x},{g})"


def freeify(rho: StrictAction, representatives: Optional[Sequence[str]] = None) -> FreeifyResult:
    """Replace the action by an equivalent one that is free on objects.

    Objects are pairs ``(x, g)`` with ``x`` a representative; ``hom((x,g),(y,h))``
    is ``hom_A(g.x, h.y)`` with the composition of ``A``; ``k.(x, g) = (x, kg)``;
    the projection sends ``(x, g)`` to ``g.x``.
    """
    rho.monoid.require_group()
    a, m = rho.category, rho.monoid
    field = a.field
    reps = [o.representative for o in orbits(rho, representatives)]
    pairs = [(x, g) for x in reps for g in m.elements]
    names = [free_object(x, g) for x, g in pairs]
    under = {free_object(x, g): rho.act_object(g, x) for x, g in pairs}

    basis = {}
    diff = {}
    for u, v in product(names, repeat=2):
        key = (under[u], under[v])
        if key in a.basis:
            basis[(u, v)] = a.basis[key]
        if key in a.differential:
            diff[(u, v)] = a.differential[key]
    comp = {}
    for u, v, w in product(names, repeat=3):
        key = (under[u], under[v], under[w])
        if key in a.composition:
            comp[(u, v, w)] = a.composition[key]
    units = {u: a.unit(under[u]) for u in names}
    a2 = DgCategory(field, names, basis, diff, comp, units)

    pi_blocks = {}
    for u, v in product(names, repeat=2):
        pi_blocks[(u, v)] = {d: Matrix.identity(field, len(ls)) for d, ls in a2.basis.get((u, v), {}).items()}
    pi = DgFunctor(a2, a, under, pi_blocks)

    funcs = {}
    for k in m.elements:
        omap = {free_object(x, g): free_object(x, m.mul(k, g)) for x, g in pairs}
        blocks = {}
        for u, v in product(names, repeat=2):
            blocks[(u, v)] = {d: rho(k).block(under[u], under[v], d) for d in a2.degrees(u, v)}
        funcs[k] = DgFunctor(a2, a2, omap, blocks)
    return FreeifyResult(a2, StrictAction(m, a2, funcs), pi, reps)


def check_freeify(res: FreeifyResult, rho: StrictAction) -> Report:
    """Freeness, validity, strict equivariance and hom-bijectivity of the projection."""
    rep = Report("freeify")
    rep.extend(validate_action(res.action), "action.")
    free, wit = is_free_on_objects(res.action)
    if not free:
        rep.add("free_on_objects", *wit)
    rep.extend(validate_dg_functor(res.projection), "projection.")
    pi, a2, a = res.projection, res.category, rho.category
    for u, v in product(a2.objects, repeat=2):
        if a2.dims(u, v) != a.dims(pi(u), pi(v)):
            rep.add("hom_bijective", u, v, detail="hom dimensions differ")
            continue
        for d in a2.degrees(u, v):
            if not pi.block(u, v, d).is_invertible():
                rep.add("hom_bijective", u, v, d)
    hit = {pi(u) for u in a2.objects}
    for x in a.objects:
        if x not in hit:
            rep.add("essentially_surjective", x)
    for k in rho.monoid.elements:
        lhs = compose_functors(res.action(k), pi)
        rhs = compose_functors(pi, rho(k))
        if lhs != rhs:
            rep.add("equivariance", k, detail="pi o rho'(k) != rho(k) o pi")
    return rep


def check_trivial_induced_action(rho: StrictAction,
                                 representatives: Optional[Sequence[str]] = None,
                                 skew: Optional[SkewResult] = None) -> Report:
    """Conjugate the induced action back onto the reduced skew category and compare with the identity.

    For ``h`` and a morphism ``(g, a): X~ -> Y~`` between representatives the
    induced action is the composite

        X~ --(h^-1, id_X)--> (h.X)~ --(h g h^-1, h.a)--> (h.Y)~ --(h, id_{h.Y})--> Y~

    which must equal ``(g, a)``.
    """
    free, wit = is_free_on_objects(rho)
    if not free:
        g, x = wit
        raise HypothesisError(
            f"the action is not free on the set of objects: {g} fixes {x}")
    s = skew or skew_group_dg_category(rho)
    red = reduce(s, representatives)
    sc, m = s.category, rho.monoid
    rep = Report("trivial induced action")
    reps = red.representatives
    for h in m.elements:
        hinv = m.inverse(h)
        ind = s.induced_action(h)
        for x in reps:
            # the orbit equivalence sends h.X back to its representative X
            if rho.act_object(hinv, rho.act_object(h, x)) != x:
                rep.add("objects", h, x)
        for x, y in product(reps, repeat=2):
            hx, hy = ind(x), ind(y)
            to_hx = s.inject(x, hx, 0, hinv, rho.category.unit(x))
            from_hy = s.inject(hy, y, 0, h, rho.category.unit(hy))
            for d, i, lab in sc.basis_elements(x, y):
                e = sc.basis_vector(x, y, d, i)
                moved = ind.apply(x, y, d, e)
                c = sc.compose(x, hx, hy, 0, to_hx, d, moved)
                c = sc.compose(x, hy, y, d, c, 0, from_hy)
                if c != e:
                    rep.add("identity", h, x, y, lab,
                            detail=f"h={h} sends {lab} to {red.category.describe(x, y, d, c)}")
    return rep


def equivariance_of_embedding(s: SkewResult) -> Report:
    """Check ``F_A(h.X) = h.F_A(X)`` and ``F_A(h.a) = h.F_A(a)`` for all ``h`` and basis ``a``."""
    rho = s.action
    rho.monoid.require_group()
    rep = Report("equivariance of F_A")
    f, a = s.embedding, rho.category
    for h in rho.monoid.elements:
        ind = s.induced_action(h)
        for x in a.objects:
            if f(rho.act_object(h, x)) != ind(f(x)):
                rep.add("objects", h, x)
        for x, y in product(a.objects, repeat=2):
            for d, i, lab in a.basis_elements(x, y):
                e = a.basis_vector(x, y, d, i)
                lhs = f.apply(rho.act_object(h, x), rho.act_object(h, y), d, rho.act(h, x, y, d, e))
                rhs = ind.apply(f(x), f(y), d, f.apply(x, y, d, e))
                if lhs != rhs:
                    rep.add("morphisms", h, x, y, lab, detail=f"F({h}.{lab}) != {h}.F({lab})")
    return rep


def hom_dimension_law(rho: StrictAction, s: Optional[SkewResult] = None) -> Report:
    """``dim hom_{A*G}(X~, Y~)_d = sum_g dim hom_A(X, g.Y)_d`` for all pairs and degrees."""
    s = s or skew_group_dg_category(rho)
    a, sc = rho.category, s.category
    rep = Report("hom dimension law")
    degrees = sorted({d for key in a.basis for d in a.basis[key]} |
                     {d for key in sc.basis for d in sc.basis[key]})
    for x, y in product(a.objects, repeat=2):
        for d in degrees:
            expected = sum(a.dim(x, rho.act_object(g, y), d) for g in rho.monoid.elements)
            got = sc.dim(s.tilde[x], s.tilde[y], d)
            if got != expected:
                rep.add("dimension", x, y, d, detail=f"{got} != {expected}")
    return rep
