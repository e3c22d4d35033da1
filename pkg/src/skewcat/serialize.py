"""JSON encoding of categories, actions, modules and complexes.

Every document carries ``"schema": 1`` and a ``"kind"`` among
``dgcat``, ``action``, ``module``, ``equivariant``, ``complex``.  Scalars
are strings (``"a/b"`` or ``"a"`` over QQ, the representative in
``[0, p)`` over GF(p)).  Object names may not contain ``"|"``; hom keys
are ``"X|Y"``.
"""

from __future__ import annotations

import json
from itertools import product
from pathlib import Path
from typing import Any, Mapping

from .dgcat import Algebra, DgCategory, DgFunctor
from .equivmod import EquivariantModule, RightModule
from .exactlin import FieldSpec, Matrix
from .graded import ChainComplex
from .groupact import FiniteMonoid, StrictAction

SCHEMA = 1
KINDS = ("dgcat", "action", "module", "equivariant", "complex")


class SchemaError(ValueError):
    """Raised for documents that do not follow the schema."""


def _s(x) -> str:
    return str(x)


def _matrix_json(m: Matrix) -> list:
    return [[_s(x) for x in row] for row in m.to_rows()]


def _matrix(rows, field: FieldSpec, shape) -> Matrix:
    r, c = shape
    rows = rows or []
    if len(rows) != r or any(len(row) != c for row in rows):
        raise SchemaError(f"matrix has the wrong shape, expected {r}x{c}")
    return Matrix(field, r, c, [field.parse(str(x)) for row in rows for x in row])


def _key(*names) -> str:
    return "|".join(names)


def _unkey(key: str, n: int) -> tuple:
    parts = key.split("|")
    if len(parts) != n:
        raise SchemaError(f"bad key {key!r}")
    return tuple(parts)


# dg-categories

def dgcat_to_json(a: DgCategory) -> dict:
    homs = {}
    for x, y in product(a.objects, repeat=2):
        if (x, y) in a.basis:
            homs[_key(x, y)] = {str(d): list(ls) for d, ls in a.basis[(x, y)].items()}
    diff = []
    for x, y in product(a.objects, repeat=2):
        for d, i, lab in a.basis_elements(x, y):
            if not a.dim(x, y, d - 1):
                continue
            col = a.d_matrix(x, y, d).col(i)
            for out, c in zip(a.labels(x, y, d - 1), col):
                if c:
                    diff.append({"hom": _key(x, y), "input": lab, "output": out, "coef": _s(c)})
    comp = []
    for x, y, z in product(a.objects, repeat=3):
        for p, i, la in a.basis_elements(x, y):
            for q, j, lb in a.basis_elements(y, z):
                if not a.dim(x, z, p + q):
                    continue
                col = a.comp_matrix(x, y, z, p, q).col(i * a.dim(y, z, q) + j)
                for out, c in zip(a.labels(x, z, p + q), col):
                    if c:
                        comp.append({"objects": _key(x, y, z), "inputs": [la, lb],
                                     "output": out, "coef": _s(c)})
    return {
        "schema": SCHEMA, "kind": "dgcat", "field": a.field.name,
        "objects": list(a.objects), "homs": homs, "differential": diff,
        "composition": comp, "units": {x: [_s(c) for c in a.unit(x)] for x in a.objects},
    }


def dgcat_from_json(data: Mapping) -> DgCategory:
    try:
        field = FieldSpec.from_name(data["field"])
        objects = list(data["objects"])
        basis = {_unkey(k, 2): {int(d): list(ls) for d, ls in v.items()}
                 for k, v in data.get("homs", {}).items()}
        diff: dict = {}
        for rec in data.get("differential", []):
            x, y = _unkey(rec["hom"], 2)
            diff.setdefault((x, y), {}).setdefault(rec["input"], {})[rec["output"]] = \
                field.parse(rec["coef"])
        comp: dict = {}
        for rec in data.get("composition", []):
            x, y, z = _unkey(rec["objects"], 3)
            a, b = rec["inputs"]
            comp.setdefault((x, y, z), {}).setdefault((a, b), {})[rec["output"]] = \
                field.parse(rec["coef"])
        shell = DgCategory(field, objects, basis)
        units = {}
        for x in objects:
            vec = [field.parse(c) for c in data.get("units", {}).get(x, [])]
            labels = shell.labels(x, x, 0)
            if len(vec) != len(labels):
                raise SchemaError(f"unit of {x} has {len(vec)} coefficients, expected {len(labels)}")
            units[x] = dict(zip(labels, vec))
        cat = DgCategory.from_sparse(field, objects, basis, comp, units, diff)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed dgcat document: {exc}") from exc
    if cat.is_algebra():
        return Algebra.from_category(cat)
    return cat


# monoids and actions

def functor_to_json(f: DgFunctor) -> dict:
    homs = {}
    for x, y in product(f.source.objects, repeat=2):
        per = {str(d): _matrix_json(f.block(x, y, d)) for d in f.source.degrees(x, y)}
        if per:
            homs[_key(x, y)] = per
    return {"objects": dict(f.obj_map), "homs": homs}


def functor_from_json(data: Mapping, source: DgCategory, target: DgCategory) -> DgFunctor:
    omap = dict(data["objects"])
    blocks = {}
    for k, per in data.get("homs", {}).items():
        x, y = _unkey(k, 2)
        fx, fy = omap[x], omap[y]
        blocks[(x, y)] = {int(d): _matrix(rows, source.field,
                                          (target.dim(fx, fy, int(d)), source.dim(x, y, int(d))))
                          for d, rows in per.items()}
    return DgFunctor(source, target, omap, blocks)


def action_to_json(rho: StrictAction) -> dict:
    cat = dgcat_to_json(rho.category)
    cat.pop("schema")
    return {
        "schema": SCHEMA, "kind": "action", "monoid": rho.monoid.to_json(), "category": cat,
        "functors": {g: functor_to_json(rho(g)) for g in rho.monoid.elements},
    }


def action_from_json(data: Mapping) -> StrictAction:
    try:
        monoid = FiniteMonoid.from_json(data["monoid"])
        cat = dgcat_from_json(data["category"])
        funcs = {g: functor_from_json(f, cat, cat) for g, f in data["functors"].items()}
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed action document: {exc}") from exc
    return StrictAction(monoid, cat, funcs)


# modules

def module_to_json(m: RightModule) -> dict:
    alg = dgcat_to_json(m.algebra)
    alg.pop("schema")
    return {
        "schema": SCHEMA, "kind": "module", "algebra": alg, "dim": m.dim,
        "action": {lab: _matrix_json(r) for lab, r in zip(m.algebra.basis_labels, m.action)},
    }


def module_from_json(data: Mapping) -> RightModule:
    try:
        alg = dgcat_from_json(data["algebra"])
        if not isinstance(alg, Algebra):
            raise SchemaError("module algebra must be a one-object degree-0 algebra")
        n = int(data["dim"])
        mats = [_matrix(data["action"][lab], alg.field, (n, n)) for lab in alg.basis_labels]
        return RightModule(alg, n, mats)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed module document: {exc}") from exc


def equivariant_to_json(e: EquivariantModule) -> dict:
    act = action_to_json(e.action)
    act.pop("schema")
    mod = module_to_json(e.base)
    mod.pop("schema")
    return {"schema": SCHEMA, "kind": "equivariant", "action": act, "module": mod,
            "u": {g: _matrix_json(m) for g, m in e.u.items()}}


def equivariant_from_json(data: Mapping) -> EquivariantModule:
    try:
        rho = action_from_json(data["action"])
        base = module_from_json(data["module"])
        base.algebra = rho.category if rho.category == base.algebra else base.algebra
        u = {g: _matrix(rows, base.field, (base.dim, base.dim)) for g, rows in data["u"].items()}
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed equivariant document: {exc}") from exc
    return EquivariantModule(rho, base, u)


# complexes

def complex_to_json(c: ChainComplex) -> dict:
    return {"schema": SCHEMA, "kind": "complex", **c.to_json()}


def complex_from_json(data: Mapping) -> ChainComplex:
    try:
        field = FieldSpec.from_name(data["field"])
        dims = {int(k): int(v) for k, v in data.get("dims", {}).items()}
        blocks = {int(k): _matrix(rows, field, (dims.get(int(k) - 1, 0), dims.get(int(k), 0)))
                  for k, rows in data.get("differential", {}).items()}
        return ChainComplex.build(field, dims, blocks)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed complex document: {exc}") from exc


_ENCODERS = [
    (EquivariantModule, equivariant_to_json),
    (RightModule, module_to_json),
    (StrictAction, action_to_json),
    (DgCategory, dgcat_to_json),
    (ChainComplex, complex_to_json),
]

_DECODERS = {
    "dgcat": dgcat_from_json,
    "action": action_from_json,
    "module": module_from_json,
    "equivariant": equivariant_from_json,
    "complex": complex_from_json,
}


def to_json(obj) -> dict:
    for cls, enc in _ENCODERS:
        if isinstance(obj, cls):
            return enc(obj)
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_json(data: Any):
    if not isinstance(data, Mapping):
        raise SchemaError("top-level JSON value must be an object")
    if data.get("schema") != SCHEMA:
        raise SchemaError(f"unsupported schema {data.get('schema')!r}")
    kind = data.get("kind")
    if kind not in _DECODERS:
        raise SchemaError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return _DECODERS[kind](data)


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=1, ensure_ascii=False) + "\n"


def load(path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_json(data)


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
