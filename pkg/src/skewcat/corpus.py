"""Worked examples: small algebras, dg-categories, actions and modules.

Each builder takes the base field.  The module corpus pairs four actions
(``k``, ``k+k`` with the swap, ``k[x]/x^2`` with ``x -> -x``, ``kZ/3``
with inversion; the group is always ``Z/2``) with a handful of
equivariant modules.
"""

from __future__ import annotations

from typing import Dict, List

from .dgcat import Algebra, DgCategory
from .equivmod import (EquivariantModule, equivariant_direct_sum, from_skew_module,
                       regular_equivariant, regular_module, twist, zero_module)
from .exactlin import GF, QQ, FieldSpec, Matrix
from .groupact import (FiniteMonoid, StrictAction, algebra_action, cyclic_group,
                       symmetric_group, trivial_action, truncated_monoid)
from .skew import skew_group_algebra

FIELDS = (QQ, GF(2), GF(3))

Z2 = cyclic_group(2, "s")
Z3 = cyclic_group(3, "g")
S3 = symmetric_group(3)


# algebras

def ground_field(field: FieldSpec) -> Algebra:
    return Algebra.from_table(field, ["1"], {("1", "1"): {"1": 1}}, {"1": 1})


def split_pair(field: FieldSpec) -> Algebra:
    """``k + k`` with orthogonal idempotents ``p = (1, 0)`` and ``q = (0, 1)``."""
    return Algebra.from_table(field, ["p", "q"],
                              {("p", "p"): {"p": 1}, ("q", "q"): {"q": 1}},
                              {"p": 1, "q": 1})


def dual_numbers(field: FieldSpec) -> Algebra:
    """``k[x]/x^2``."""
    return Algebra.from_table(field, ["1", "x"],
                              {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}},
                              {"1": 1})


def group_algebra(field: FieldSpec, group: FiniteMonoid) -> Algebra:
    table = {(g, h): {group.mul(g, h): 1} for g in group for h in group}
    return Algebra.from_table(field, list(group.elements), table, {group.identity: 1})


def epsilon_algebra(field: FieldSpec) -> DgCategory:
    """One object, basis ``1`` (degree 0) and ``eps`` (degree 1), ``eps^2 = 0``, ``d eps = 1``."""
    x = "*"
    return DgCategory.from_sparse(
        field, [x], {(x, x): {0: ["1"], 1: ["eps"]}},
        {(x, x, x): {("1", "1"): {"1": 1}, ("1", "eps"): {"eps": 1}, ("eps", "1"): {"eps": 1}}},
        {x: {"1": 1}},
        {(x, x): {"eps": {"1": 1}}})


# multi-object categories

def swap_pair_category(field: FieldSpec) -> DgCategory:
    """Objects ``X, Y`` with ``f: X -> Y`` and ``f': Y -> X`` in degree 1, all composites zero."""
    basis = {("X", "X"): {0: ["idX"]}, ("Y", "Y"): {0: ["idY"]},
             ("X", "Y"): {1: ["f"]}, ("Y", "X"): {1: ["f'"]}}
    comp = _identity_rules(["X", "Y"], basis)
    return DgCategory.from_sparse(field, ["X", "Y"], basis, comp, {"X": {"idX": 1}, "Y": {"idY": 1}})


def dg_pair_category(field: FieldSpec) -> DgCategory:
    """Objects ``X, Y``; ``hom(X, Y)`` spanned by ``f`` (degree 0) and ``h`` (degree 1)
    with ``dh = f``, symmetrically ``f', h'`` in ``hom(Y, X)``; composites of non-identities vanish."""
    basis = {("X", "X"): {0: ["idX"]}, ("Y", "Y"): {0: ["idY"]},
             ("X", "Y"): {0: ["f"], 1: ["h"]}, ("Y", "X"): {0: ["f'"], 1: ["h'"]}}
    comp = _identity_rules(["X", "Y"], basis)
    diff = {("X", "Y"): {"h": {"f": 1}}, ("Y", "X"): {"h'": {"f'": 1}}}
    return DgCategory.from_sparse(field, ["X", "Y"], basis, comp,
                                  {"X": {"idX": 1}, "Y": {"idY": 1}}, diff)


def cyclic_quiver_category(field: FieldSpec) -> DgCategory:
    """Objects ``X, Y, Z`` with arrows ``aX: X -> Y``, ``aY: Y -> Z``, ``aZ: Z -> X`` in degree 0,
    radical square zero."""
    objs = ["X", "Y", "Z"]
    basis = {(o, o): {0: [f"id{o}"]} for o in objs}
    basis.update({("X", "Y"): {0: ["aX"]}, ("Y", "Z"): {0: ["aY"]}, ("Z", "X"): {0: ["aZ"]}})
    comp = _identity_rules(objs, basis)
    return DgCategory.from_sparse(field, objs, basis, comp, {o: {f"id{o}": 1} for o in objs})


def _identity_rules(objs, basis) -> dict:
    comp: dict = {}
    for (x, y), degs in basis.items():
        for labels in degs.values():
            for lab in labels:
                comp.setdefault((x, x, y), {})[(f"id{x}", lab)] = {lab: 1}
                comp.setdefault((x, y, y), {})[(lab, f"id{y}")] = {lab: 1}
    return comp


# actions

def _perm_matrix(field: FieldSpec, perm: List[int]) -> Matrix:
    """Column ``j`` is the basis vector ``perm[j]``."""
    n = len(perm)
    return Matrix.from_columns([[1 if i == perm[j] else 0 for i in range(n)] for j in range(n)], field, n)


def trivial_on_field(field: FieldSpec, group: FiniteMonoid = Z2) -> StrictAction:
    return trivial_action(group, ground_field(field))


def swap_action(field: FieldSpec) -> StrictAction:
    """``Z/2`` permuting the factors of ``k + k``."""
    return algebra_action(Z2, split_pair(field), {"s": _perm_matrix(field, [1, 0])})


def sign_action(field: FieldSpec) -> StrictAction:
    """``Z/2`` acting on ``k[x]/x^2`` by ``x -> -x``."""
    return algebra_action(Z2, dual_numbers(field), {"s": Matrix.from_rows([[1, 0], [0, -1]], field)})


def inversion_action(field: FieldSpec) -> StrictAction:
    """``Z/2`` acting on ``kZ/3`` by ``g -> g^-1``."""
    alg = group_algebra(field, Z3)
    perm = [Z3.index(Z3.inverse(g)) for g in Z3.elements]
    return algebra_action(Z2, alg, {"s": _perm_matrix(field, perm)})


def projection_monoid_action(field: FieldSpec) -> StrictAction:
    """The idempotent monoid ``{e, t}`` acting on ``k + k`` by ``t(a, b) = (a, a)``."""
    m = FiniteMonoid.from_names(["e", "t"], [["e", "t"], ["t", "t"]], "e")
    t = Matrix.from_rows([[1, 0], [1, 0]], field)
    return algebra_action(m, split_pair(field), {"t": t})


def truncated_monoid_action(field: FieldSpec) -> StrictAction:
    return trivial_action(truncated_monoid(2), ground_field(field))


def swap_objects_action(field: FieldSpec) -> StrictAction:
    """``Z/2`` swapping ``X <-> Y`` and ``f <-> f'`` in :func:`swap_pair_category`."""
    cat = swap_pair_category(field)
    one = Matrix.identity(field, 1)
    swap = {("X", "X"): {0: one}, ("Y", "Y"): {0: one}, ("X", "Y"): {1: one}, ("Y", "X"): {1: one}}
    ident = {k: dict(v) for k, v in swap.items()}
    return StrictAction.from_matrices(Z2, cat, {"s": {"X": "Y", "Y": "X"}}, {"e": ident, "s": swap})


def dg_swap_action(field: FieldSpec) -> StrictAction:
    cat = dg_pair_category(field)
    one = Matrix.identity(field, 1)
    blocks = {("X", "X"): {0: one}, ("Y", "Y"): {0: one},
              ("X", "Y"): {0: one, 1: one}, ("Y", "X"): {0: one, 1: one}}
    return StrictAction.from_matrices(Z2, cat, {"s": {"X": "Y", "Y": "X"}}, {"e": blocks, "s": blocks})


def cycle_action(field: FieldSpec) -> StrictAction:
    """``Z/3`` rotating ``X -> Y -> Z -> X`` in :func:`cyclic_quiver_category`."""
    cat = cyclic_quiver_category(field)
    one = Matrix.identity(field, 1)
    blocks = {key: {0: one} for key in cat.basis}
    rot = {"X": "Y", "Y": "Z", "Z": "X"}
    maps = {"e": {o: o for o in cat.objects}, "g": rot,
            "g^2": {o: rot[rot[o]] for o in cat.objects}}
    return StrictAction.from_matrices(Z3, cat, maps, {g: blocks for g in Z3.elements})


def trivial_on_epsilon(field: FieldSpec) -> StrictAction:
    return trivial_action(Z2, epsilon_algebra(field))


def corpus_actions(field: FieldSpec) -> Dict[str, StrictAction]:
    """Every action used by the hom-identity and theorem checks."""
    return {
        "trivial_Z2_on_k": trivial_on_field(field, Z2),
        "trivial_Z3_on_k": trivial_on_field(field, Z3),
        "trivial_S3_on_k": trivial_on_field(field, S3),
        "swap_on_k2": swap_action(field),
        "sign_on_dual_numbers": sign_action(field),
        "inversion_on_kZ3": inversion_action(field),
        "trivial_Z2_on_epsilon": trivial_on_epsilon(field),
        "swap_objects": swap_objects_action(field),
        "dg_swap_objects": dg_swap_action(field),
        "cycle_objects": cycle_action(field),
        "projection_monoid_on_k2": projection_monoid_action(field),
        "truncated_monoid_on_k": truncated_monoid_action(field),
    }


def module_corpus_actions(field: FieldSpec) -> Dict[str, StrictAction]:
    return {
        "k": trivial_on_field(field, Z2),
        "k2_swap": swap_action(field),
        "dual_numbers_sign": sign_action(field),
        "kZ3_inversion": inversion_action(field),
    }


def sign_character(field: FieldSpec) -> dict:
    return {"e": field.one, "s": -field.one}


def module_corpus(rho: StrictAction) -> Dict[str, EquivariantModule]:
    """Equivariant modules for a ``Z/2`` action on an algebra."""
    field = rho.category.field
    reg = regular_equivariant(rho)
    ag = skew_group_algebra(rho, check=False)
    induced = from_skew_module(regular_module(ag), rho)
    return {
        "regular": reg,
        "regular_twisted": twist(reg, sign_character(field)),
        "induced": induced,
        "regular_plus_induced": equivariant_direct_sum(reg, induced),
        "zero": EquivariantModule(rho, zero_module(reg.base.algebra),
                                  {g: Matrix.zeros(field, 0, 0) for g in rho.monoid.elements}),
    }


def fixture_documents() -> Dict[str, object]:
    """Bundled fixtures by file stem; every one validates."""
    from .orbit import cone_of_identity, point

    docs: Dict[str, object] = {}
    for field in (QQ, GF(2)):
        tag = "" if field == QQ else "_gf2"
        for name, rho in corpus_actions(field).items():
            docs[f"action_{name}{tag}"] = rho
    docs["dgcat_dual_numbers"] = dual_numbers(QQ)
    docs["dgcat_split_pair"] = split_pair(QQ)
    docs["dgcat_epsilon"] = epsilon_algebra(QQ)
    docs["dgcat_swap_pair"] = swap_pair_category(QQ)
    docs["dgcat_dg_pair"] = dg_pair_category(QQ)
    docs["dgcat_cyclic_quiver"] = cyclic_quiver_category(QQ)
    docs["dgcat_kZ3"] = group_algebra(QQ, Z3)
    for name, rho in module_corpus_actions(QQ).items():
        for mname, e in module_corpus(rho).items():
            docs[f"equivariant_{name}_{mname}"] = e
    reg = module_corpus(swap_action(QQ))["regular"]
    docs["module_k2_regular"] = reg.base
    docs["module_skew_k2_regular"] = regular_module(skew_group_algebra(swap_action(QQ)))
    docs["complex_point"] = point(QQ)
    docs["complex_point_gf2"] = point(GF(2))
    docs["complex_cone"] = cone_of_identity(QQ)
    return docs


def write_fixtures(directory) -> List[str]:
    from pathlib import Path

    from .serialize import save

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for stem, obj in fixture_documents().items():
        save(obj, out / f"{stem}.json")
        written.append(stem)
    return written


if __name__ == "__main__":
    import sys
    from pathlib import Path

    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "fixtures"
    print(f"wrote {len(write_fixtures(target))} fixtures to {target}")
