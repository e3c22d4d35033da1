"""Right modules, G-equivariant modules and the functors mod(A)^G <-> mod(AG).

Linear maps act on column vectors.  For a right module ``M`` the matrix
``R_b`` sends ``m`` to ``m·b``, so acting by ``b`` then ``c`` is
``R_c @ R_b`` and the module axiom reads ``R_{b·c} = R_c @ R_b``.

An equivariant structure is a family of invertible ``u_g`` with

    u_e = id,    u_g o u_h = u_{hg},    u_g(m·a) = u_g(m)·(g^-1.a).

The functor to ``AG``-modules is ``m·(g, a) = u_g(m·a)``; the inverse
restricts along ``a -> (e, a)`` and sets ``u_g(m) = m·(g, 1)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence

from .dgcat import Algebra
from .exactlin import FieldSpec, Matrix, kernel_basis
from .groupact import StrictAction
from .report import Report
from .skew import skew_group_algebra


class ModuleMismatchError(ValueError):
    """Raised when two modules live over different algebras or actions."""


class RightModule:
    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Matrix]):
        if len(action) != algebra.dimension:
            raise ValueError(f"{len(action)} action matrices for a {algebra.dimension}-dimensional algebra")
        for b, m in zip(algebra.basis_labels, action):
            if m.shape != (dim, dim):
                raise ValueError(f"action of {b} has shape {m.shape}, expected {(dim, dim)}")
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(action)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def act(self, vec: Sequence) -> Matrix:
        """The matrix of ``m -> m·a`` for ``a`` given by coefficients."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for c, m in zip(vec, self.action):
            if c:
                out = out + m.scale(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, RightModule):
            return NotImplemented
        return self.dim == other.dim and self.action == other.action and self.algebra == other.algebra

    def __repr__(self):
        return f"RightModule(dim={self.dim}, algebra_dim={self.algebra.dimension})"


def regular_module(alg: Algebra) -> RightModule:
    """``A`` as a right module over itself."""
    n = alg.dimension
    mats = []
    for b in range(n):
        mats.append(Matrix.from_columns([alg.product(i, b) for i in range(n)], alg.field, n))
    return RightModule(alg, n, mats)


def zero_module(alg: Algebra) -> RightModule:
    return RightModule(alg, 0, [Matrix.zeros(alg.field, 0, 0)] * alg.dimension)


def direct_sum(m: RightModule, n: RightModule) -> RightModule:
    field = m.field
    mats = []
    for a, b in zip(m.action, n.action):
        top = a.hstack(Matrix.zeros(field, m.dim, n.dim))
        bot = Matrix.zeros(field, n.dim, m.dim).hstack(b)
        mats.append(top.vstack(bot))
    return RightModule(m.algebra, m.dim + n.dim, mats)


def validate_module(m: RightModule) -> Report:
    """Unit acts as the identity and ``R_{b·c} = R_c @ R_b`` on all basis pairs."""
    rep = Report("module")
    alg = m.algebra
    if m.act(alg.one) != Matrix.identity(m.field, m.dim):
        support = [lab for lab, c in zip(alg.basis_labels, alg.one) if c]
        rep.add("unit", *support, detail="the unit does not act as the identity")
    labels = alg.basis_labels
    for i, j in product(range(alg.dimension), repeat=2):
        if m.act(alg.product(i, j)) != m.action[j] @ m.action[i]:
            rep.add("associativity", labels[i], labels[j],
                    detail=f"m·({labels[i]}·{labels[j]}) != (m·{labels[i]})·{labels[j]}")
    return rep


class EquivariantModule:
    def __init__(self, action: StrictAction, base: RightModule, u: Mapping[str, Matrix]):
        self.action = action
        self.base = base
        self.u: Dict[str, Matrix] = dict(u)

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def field(self) -> FieldSpec:
        return self.base.field

    def __eq__(self, other):
        if not isinstance(other, EquivariantModule):
            return NotImplemented
        return self.base == other.base and self.u == other.u and self.action == other.action

    def __repr__(self):
        return f"EquivariantModule(dim={self.dim})"


def _algebra_matrix(rho: StrictAction, g: str) -> Matrix:
    alg = rho.category
    x = alg.objects[0]
    return rho(g).block(x, x, 0)


def validate_equivariant(e: EquivariantModule) -> Report:
    rep = Report("equivariant module")
    rho = e.action
    m = rho.monoid
    if not m.is_group:
        rep.add("group", detail="equivariant structures need a group")
        return rep
    if rho.category != e.base.algebra:
        rep.add("action_mismatch", detail="the action is not on the module's algebra")
        return rep
    rep.extend(validate_module(e.base), "base.")
    field, n = e.field, e.dim
    ident = Matrix.identity(field, n)
    for g in m.elements:
        if g not in e.u:
            rep.add("u_missing", g)
        elif e.u[g].shape != (n, n):
            rep.add("u_shape", g)
    if not rep.ok:
        return rep
    if e.u[m.identity] != ident:
        rep.add("u_identity", m.identity, detail="u_e != id")
    for g in m.elements:
        if not e.u[g].is_invertible():
            rep.add("u_invertible", g)
    for g, h in product(m.elements, repeat=2):
        if e.u[g] @ e.u[h] != e.u[m.mul(h, g)]:
            rep.add("anti_cocycle", g, h, detail=f"u_{g} o u_{h} != u_{m.mul(h, g)}")
    alg = e.base.algebra
    for g in m.elements:
        ginv = _algebra_matrix(rho, m.inverse(g))
        for i, lab in enumerate(alg.basis_labels):
            lhs = e.u[g] @ e.base.action[i]
            rhs = e.base.act(ginv.col(i)) @ e.u[g]
            if lhs != rhs:
                rep.add("semilinearity", g, lab, detail=f"u_{g}(m·{lab}) != u_{g}(m)·({g}^-1.{lab})")
    return rep


def _check_same_action(e: EquivariantModule, rho: StrictAction) -> None:
    if e.action is not rho and e.action != rho:
        raise ModuleMismatchError("the equivariant module was built for a different action")


def to_skew_module(e: EquivariantModule, rho: StrictAction,
                   skew_alg: Optional[Algebra] = None) -> RightModule:
    """``m·(g, a) = u_g(m·a)``; the underlying space is unchanged."""
    _check_same_action(e, rho)
    rep = validate_equivariant(e)
    if not rep.ok:
        raise ValueError(str(rep))
    ag = skew_alg or skew_group_algebra(rho, check=False)
    mats = [e.u[g] @ r for g in rho.monoid.elements for r in e.base.action]
    return RightModule(ag, e.dim, mats)


def from_skew_module(n: RightModule, rho: StrictAction) -> EquivariantModule:
    """Restrict along ``a -> (e, a)`` and set ``u_g(m) = m·(g, 1)``."""
    rho.monoid.require_group()
    rep = validate_module(n)
    if not rep.ok:
        raise ValueError(str(rep))
    alg = rho.category
    if not isinstance(alg, Algebra):
        alg = Algebra.from_category(alg)
    ag = n.algebra
    if ag != skew_group_algebra(rho, check=False):
        raise ModuleMismatchError("the module is not over the skew group algebra of this action")
    k = alg.dimension
    elements = rho.monoid.elements
    e_off = rho.monoid.index(rho.monoid.identity) * k
    base = RightModule(alg, n.dim, n.action[e_off:e_off + k])
    u = {}
    for g in elements:
        off = rho.monoid.index(g) * k
        u[g] = n.act((alg.field.zero,) * off + tuple(alg.one)
                     + (alg.field.zero,) * (ag.dimension - off - k))
    return EquivariantModule(rho, base, u)


def intertwiners(pairs: Sequence, m: int, n: int, field: FieldSpec) -> List[Matrix]:
    """Basis of ``{F (n x m) : F @ A = B @ F for all (A, B) in pairs}``."""
    nvars = n * m
    rows = []
    for a, b in pairs:
        for r, c in product(range(n), range(m)):
            row = [field.zero] * nvars
            for s in range(m):
                if a[s, c]:
                    row[r * m + s] += a[s, c]
            for s in range(n):
                if b[r, s]:
                    row[s * m + c] -= b[r, s]
            rows.append(row)
    if not nvars:
        return []
    if not rows:
        basis = Matrix.identity(field, nvars)
    else:
        basis = kernel_basis(Matrix.from_rows(rows, field, nvars))
    return [Matrix(field, n, m, basis.col(j)) for j in range(basis.cols)]


def _constraint_pairs(src, dst) -> list:
    if isinstance(src, EquivariantModule) and isinstance(dst, EquivariantModule):
        if src.action is not dst.action and src.action != dst.action:
            raise ModuleMismatchError("equivariant modules for different actions")
        pairs = list(zip(src.base.action, dst.base.action))
        pairs += [(src.u[g], dst.u[g]) for g in src.action.monoid.elements]
        return pairs
    if isinstance(src, RightModule) and isinstance(dst, RightModule):
        if src.algebra is not dst.algebra and src.algebra != dst.algebra:
            raise ModuleMismatchError("modules over different algebras")
        return list(zip(src.action, dst.action))
    raise ModuleMismatchError("hom between a plain and an equivariant module")


def hom_space(src, dst) -> List[Matrix]:
    """Basis of module maps ``src -> dst`` (commuting with every ``u_g`` in the equivariant case)."""
    pairs = _constraint_pairs(src, dst)
    return intertwiners(pairs, src.dim, dst.dim, src.field)


def hom_dim(src, dst) -> int:
    return len(hom_space(src, dst))


def find_isomorphism(src, dst, tries: int = 200, seed: int = 0) -> Optional[Matrix]:
    """An invertible module map ``src -> dst``, or ``None`` if none was found.

    Over GF(p) with ``p^r`` small the whole hom space is enumerated, so
    ``None`` is a proof of non-isomorphism there.  Otherwise random
    combinations of a hom basis are tried.
    """
    if src.dim != dst.dim:
        return None
    field = src.field
    if src.dim == 0:
        return Matrix.zeros(field, 0, 0)
    basis = hom_space(src, dst)
    if not basis:
        return None
    candidates = list(basis)
    total = basis[0]
    for b in basis[1:]:
        total = total + b
    candidates.append(total)
    for c in candidates:
        if c.is_invertible():
            return c
    p = field.characteristic
    if p and p ** len(basis) <= 4096:
        for coefs in product(range(p), repeat=len(basis)):
            c = Matrix.zeros(field, dst.dim, src.dim)
            for k, b in zip(coefs, basis):
                if k:
                    c = c + b.scale(k)
            if c.is_invertible():
                return c
        return None
    rng = random.Random(seed)
    for _ in range(tries):
        c = Matrix.zeros(field, dst.dim, src.dim)
        for b in basis:
            k = rng.randrange(p) if p else rng.randint(-1000, 1000)
            c = c + b.scale(k)
        if c.is_invertible():
            return c
    return None


@dataclass
class RoundTripReport(Report):
    intertwiner: Optional[Matrix] = None


def roundtrip_check(obj, rho: StrictAction) -> RoundTripReport:
    """Send ``obj`` around the equivalence and back; an explicit isomorphism must exist."""
    rep = RoundTripReport("roundtrip")
    if isinstance(obj, EquivariantModule):
        sub = validate_equivariant(obj)
        if not sub.ok:
            rep.extend(sub, "input.")
            return rep
        n = to_skew_module(obj, rho)
        rep.extend(validate_module(n), "to_skew.")
        back = from_skew_module(n, rho)
        rep.extend(validate_equivariant(back), "from_skew.")
    elif isinstance(obj, RightModule):
        sub = validate_module(obj)
        if not sub.ok:
            rep.extend(sub, "input.")
            return rep
        e = from_skew_module(obj, rho)
        rep.extend(validate_equivariant(e), "from_skew.")
        back = to_skew_module(e, rho, obj.algebra)
        rep.extend(validate_module(back), "to_skew.")
    else:
        raise TypeError(f"cannot round-trip {obj!r}")
    if not rep.ok:
        return rep
    iso = find_isomorphism(obj, back)
    if iso is None:
        rep.add("isomorphism", detail="no invertible intertwiner found")
    else:
        rep.intertwiner = iso
    return rep


def twist(e: EquivariantModule, character: Mapping[str, object]) -> EquivariantModule:
    """Multiply ``u_g`` by a scalar character ``chi(g)``; needs ``chi(g)chi(h) = chi(hg)``."""
    return EquivariantModule(e.action, e.base, {g: m.scale(character[g]) for g, m in e.u.items()})


def equivariant_direct_sum(e: EquivariantModule, f: EquivariantModule) -> EquivariantModule:
    base = direct_sum(e.base, f.base)
    field = e.field
    u = {}
    for g in e.u:
        top = e.u[g].hstack(Matrix.zeros(field, e.dim, f.dim))
        bot = Matrix.zeros(field, f.dim, e.dim).hstack(f.u[g])
        u[g] = top.vstack(bot)
    return EquivariantModule(e.action, base, u)


def regular_equivariant(rho: StrictAction) -> EquivariantModule:
    """``A`` over itself with ``u_g = rho(g^-1)``."""
    alg = rho.category
    if not isinstance(alg, Algebra):
        alg = Algebra.from_category(alg)
    m = rho.monoid
    return EquivariantModule(rho, regular_module(alg),
                             {g: _algebra_matrix(rho, m.inverse(g)) for g in m.elements})


def trivial_equivariant(rho: StrictAction, base: RightModule) -> EquivariantModule:
    """``u_g = id``; valid when the action fixes the algebra pointwise."""
    ident = Matrix.identity(base.field, base.dim)
    return EquivariantModule(rho, base, {g: ident for g in rho.monoid.elements})
