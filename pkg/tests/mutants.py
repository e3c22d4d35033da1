"""Single-constant mutations of fixture documents.

A mutation adds one to exactly one structure constant, including constants
that are zero and therefore absent from the sparse JSON.  Positions always
respect degrees, so every mutant still decodes.
"""

from __future__ import annotations

import copy
from itertools import product

from oracles import CategoryDoc, Scalars


def _bump(s: Scalars, value) -> str:
    return str(s.norm(s.parse(value) + 1))


def _category_positions(doc):
    cat = CategoryDoc(doc)
    for x, y, z in product(cat.objects, repeat=3):
        for a, b in product(cat.homs(x, y), cat.homs(y, z)):
            p = cat.deg[(x, y, a)] + cat.deg[(y, z, b)]
            for c in cat.homs(x, z):
                if cat.deg[(x, z, c)] == p:
                    yield "composition", (x, y, z, a, b, c)
    for x, y in product(cat.objects, repeat=2):
        for a, b in product(cat.homs(x, y), repeat=2):
            if cat.deg[(x, y, b)] == cat.deg[(x, y, a)] - 1:
                yield "differential", (x, y, a, b)


def _mutate_category(doc, where, pos):
    out = copy.deepcopy(doc)
    s = Scalars(doc["field"])
    if where == "composition":
        x, y, z, a, b, c = pos
        key = "|".join((x, y, z))
        recs = out["composition"]
        for r in recs:
            if r["objects"] == key and r["inputs"] == [a, b] and r["output"] == c:
                r["coef"] = _bump(s, r["coef"])
                break
        else:
            recs.append({"objects": key, "inputs": [a, b], "output": c, "coef": _bump(s, 0)})
    else:
        x, y, a, b = pos
        key = f"{x}|{y}"
        recs = out["differential"]
        for r in recs:
            if r["hom"] == key and r["input"] == a and r["output"] == b:
                r["coef"] = _bump(s, r["coef"])
                break
        else:
            recs.append({"hom": key, "input": a, "output": b, "coef": _bump(s, 0)})
    return out


def category_mutants(doc):
    for where, pos in _category_positions(doc):
        yield f"{where}:{'/'.join(pos)}", _mutate_category(doc, where, pos)


def _matrix_mutants(rows, s):
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            new = [list(r) for r in rows]
            new[i][j] = _bump(s, v)
            yield (i, j), new


def action_mutants(doc):
    s = Scalars(doc["category"]["field"])
    for g, f in doc["functors"].items():
        for key, per in f["homs"].items():
            for d, rows in per.items():
                for (i, j), new in _matrix_mutants(rows, s):
                    out = copy.deepcopy(doc)
                    out["functors"][g]["homs"][key][d] = new
                    yield f"action:{g}/{key}/{d}/{i},{j}", out


def module_mutants(doc):
    s = Scalars(doc["algebra"]["field"])
    for lab, rows in doc["action"].items():
        for (i, j), new in _matrix_mutants(rows, s):
            out = copy.deepcopy(doc)
            out["action"][lab] = new
            yield f"module:{lab}/{i},{j}", out


def equivariant_mutants(doc):
    s = Scalars(doc["module"]["algebra"]["field"])
    for g, rows in doc["u"].items():
        for (i, j), new in _matrix_mutants(rows, s):
            out = copy.deepcopy(doc)
            out["u"][g] = new
            yield f"u:{g}/{i},{j}", out
    for name, mod in module_mutants(doc["module"]):
        out = copy.deepcopy(doc)
        out["module"] = mod
        yield name, out


def mutants(doc):
    kind = doc["kind"]
    if kind == "dgcat":
        yield from category_mutants(doc)
    elif kind == "action":
        yield from action_mutants(doc)
    elif kind == "module":
        yield from module_mutants(doc)
    elif kind == "equivariant":
        yield from equivariant_mutants(doc)
    else:
        raise ValueError(kind)


# fixtures mutated by the suite: composition, differential, action and module tables
MUTATION_FIXTURES = (
    "dgcat_dual_numbers", "dgcat_split_pair", "dgcat_kZ3", "dgcat_epsilon",
    "dgcat_dg_pair", "dgcat_swap_pair", "dgcat_cyclic_quiver",
    "action_swap_on_k2", "action_sign_on_dual_numbers", "action_inversion_on_kZ3",
    "action_swap_objects", "action_dg_swap_objects", "action_trivial_Z2_on_epsilon",
    "module_k2_regular", "equivariant_dual_numbers_sign_regular", "equivariant_k_regular_twisted",
    "equivariant_kZ3_inversion_regular", "equivariant_k2_swap_regular", "action_cycle_objects",
)
