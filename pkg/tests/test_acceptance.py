"""Acceptance criteria, one test each, at their stated runtime bounds.

Run directly (``python tests/test_acceptance.py``) for a plain pass/fail
listing, or through pytest, which prints the same listing in its summary.
"""

from __future__ import annotations

import json
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from mutants import MUTATION_FIXTURES, mutants  # noqa: E402
from skewcat import serialize  # noqa: E402
from skewcat.cli import fixtures_dir, validate_object  # noqa: E402
from skewcat.corpus import (FIELDS, S3, Z2, Z3, corpus_actions, ground_field, module_corpus,  # noqa: E402
                            module_corpus_actions, swap_action)
from skewcat.equivmod import hom_dim, roundtrip_check, to_skew_module  # noqa: E402
from skewcat.exactlin import GF, QQ, Matrix, kernel_basis, rank  # noqa: E402
from skewcat.graded import ChainComplex, homology, validate_complex  # noqa: E402
from skewcat.groupact import is_free_on_objects, trivial_action  # noqa: E402
from skewcat.orbit import OrbitHomQuery, laurent_dims, orbit_hom_dims, point  # noqa: E402
from skewcat.skew import (check_freeify, check_trivial_induced_action, equivariance_of_embedding,  # noqa: E402
                          freeify, skew_group_algebra, skew_group_dg_category)

RESULTS: dict = {}


def timed(number: int, bound: float | None, body) -> None:
    start = time.perf_counter()
    try:
        detail = body()
    except AssertionError as exc:
        RESULTS[number] = (False, time.perf_counter() - start, str(exc).splitlines()[0] if str(exc) else "")
        raise
    elapsed = time.perf_counter() - start
    ok = bound is None or elapsed < bound
    RESULTS[number] = (ok, elapsed, detail if ok else f"{detail}; took {elapsed:.2f}s, bound {bound}s")
    assert ok, f"criterion {number} took {elapsed:.2f}s (bound {bound}s)"


def product_labels(alg, a, b):
    return alg.describe(alg.obj, alg.obj, 0, alg.mul(alg.vector({a: 1}), alg.vector({b: 1})))


# 1

def criterion_group_algebra():
    checked = 0
    for field in (QQ, GF(2)):
        for group in (Z2, Z3, S3):
            ag = skew_group_algebra(trivial_action(group, ground_field(field)))
            table = oracles.group_algebra_table(group.elements, group.mul)
            assert ag.basis_labels == tuple(f"{g}|1" for g in group.elements)
            for (g, h), out in table.items():
                want = {f"{k}|1": field.one for k in out}
                assert product_labels(ag, f"{g}|1", f"{h}|1") == want, (field, g, h)
                checked += 1
    return f"{checked} products over QQ and GF(2) match the group tables"


def test_criterion_1_group_algebra():
    timed(1, 1.0, criterion_group_algebra)


# 2

def criterion_matrix_algebra():
    for field in (QQ, GF(3), GF(5)):
        ag = skew_group_algebra(swap_action(field))
        assert ag.dimension == 4
        e = {(1, 1): "e|p", (2, 2): "e|q", (1, 2): "s|p", (2, 1): "s|q"}
        relations = 0
        for (i, j), a in e.items():
            for (k, l), b in e.items():
                want = {e[(i, l)]: field.one} if j == k else {}
                assert product_labels(ag, a, b) == want, (field, a, b)
                relations += 1
        assert relations == 16
        assert tuple(x + y for x, y in zip(ag.vector({"e|p": 1}), ag.vector({"e|q": 1}))) == ag.one
    return "16 matrix-unit relations and E11 + E22 = 1 over QQ, GF(3), GF(5)"


def test_criterion_2_matrix_algebra():
    timed(2, 1.0, criterion_matrix_algebra)


# 3

def criterion_hom_identity():
    checked = 0
    for field in FIELDS:
        for name, rho in corpus_actions(field).items():
            base = oracles.CategoryDoc(serialize.to_json(rho.category))
            skew = oracles.CategoryDoc(serialize.to_json(skew_group_dg_category(rho, check=False).category))
            degrees = set(base.deg.values()) | set(skew.deg.values())
            for x in base.objects:
                for y in base.objects:
                    for d in degrees:
                        got = sum(1 for lab in skew.homs(x, y) if skew.deg[(x, y, lab)] == d)
                        want = 0
                        for g in rho.monoid.elements:
                            gy = rho.act_object(g, y)
                            want += sum(1 for lab in base.homs(x, gy) if base.deg[(x, gy, lab)] == d)
                        assert got == want, (field.name, name, x, y, d, got, want)
                        checked += 1
    return f"{checked} (action, pair, degree) dimension identities"


def test_criterion_3_hom_identity():
    timed(3, 5.0, criterion_hom_identity)


# 4

def criterion_theorem_checks():
    counts = {"freeify": 0, "trivial_induced": 0, "equivariance": 0}
    for field in FIELDS:
        for name, rho in corpus_actions(field).items():
            if not rho.monoid.is_group:
                continue
            res = freeify(rho)
            rep = check_freeify(res, rho)
            assert rep.ok, f"{name}: {rep}"
            counts["freeify"] += 1
            free_actions = [res.action]
            if is_free_on_objects(rho)[0]:
                free_actions.append(rho)
            for act in free_actions:
                rep = check_trivial_induced_action(act)
                assert rep.ok, f"{name}: {rep}"
                counts["trivial_induced"] += 1
            rep = equivariance_of_embedding(skew_group_dg_category(rho))
            assert rep.ok, f"{name}: {rep}"
            counts["equivariance"] += 1
    return ", ".join(f"{k} {v}" for k, v in counts.items()) + " checks, zero violations"


def test_criterion_4_theorem_checks():
    timed(4, None, criterion_theorem_checks)


# 5

def criterion_module_equivalence():
    roundtrips = pairs = 0
    for field in FIELDS:
        acts = module_corpus_actions(field)
        assert len(acts) == 4
        for name, rho in acts.items():
            mods = module_corpus(rho)
            assert len(mods) >= 3
            images = {}
            for key, e in mods.items():
                rep = roundtrip_check(e, rho)
                assert rep.ok and rep.intertwiner is not None, f"{field.name} {name} {key}: {rep}"
                images[key] = to_skew_module(e, rho)
                roundtrips += 1
            for a in mods:
                for b in mods:
                    assert hom_dim(mods[a], mods[b]) == hom_dim(images[a], images[b]), (field.name, name, a, b)
                    pairs += 1
    return f"{roundtrips} round trips with explicit intertwiners, {pairs} hom-dimension pairs preserved"


def test_criterion_5_module_equivalence():
    timed(5, 30.0, criterion_module_equivalence)


# 6

def criterion_periodicity():
    for field in (QQ, GF(2)):
        k = point(field)
        for n in (1, 2, 3):
            window = (-3 * n, 3 * n)
            got = orbit_hom_dims(OrbitHomQuery(k, k, n, window))
            want = {d: 1 for d in range(window[0], window[1] + 1) if d % n == 0}
            assert dict(got) == want, (field.name, n, dict(got))
            assert got == laurent_dims(n, window)
    return "n = 1, 2, 3 over QQ and GF(2) match the Laurent pattern"


def test_criterion_6_periodicity():
    timed(6, 1.0, criterion_periodicity)


# 7

def criterion_mutation_suite():
    fixtures = sorted(p.stem for p in fixtures_dir().glob("*.json"))
    for stem in fixtures:
        obj = serialize.load(fixtures_dir() / f"{stem}.json")
        assert validate_object(obj).ok, f"fixture {stem} rejected"
    total = killed = equivalent = 0
    for stem in MUTATION_FIXTURES:
        doc = json.loads((fixtures_dir() / f"{stem}.json").read_text())
        for name, mut in mutants(doc):
            total += 1
            rep = validate_object(serialize.from_json(mut))
            if oracles.doc_ok(mut):
                # still a valid structure: rejecting it would be unsound
                equivalent += 1
                assert rep.ok, f"{stem} {name}: valid mutant rejected: {rep}"
                continue
            assert not rep.ok, f"{stem} {name}: invalid mutant accepted"
            assert all(v.witness for v in rep.violations), f"{stem} {name}: violation without witness"
            killed += 1
    assert killed >= 200, f"only {killed} non-equivalent mutants"
    return (f"{len(fixtures)} fixtures pass; {killed}/{total - equivalent} invalid mutants rejected with "
            f"witnesses (100%); {equivalent} mutants are valid structures and were accepted")


def test_criterion_7_mutation_suite():
    timed(7, 60.0, criterion_mutation_suite)


# 8

def criterion_random_properties():
    rng = random.Random(20261018)
    names = ["QQ", "GF(2)", "GF(3)", "GF(5)"]
    for _ in range(1000):
        name = rng.choice(names)
        s = oracles.Scalars(name)
        field = QQ if name == "QQ" else GF(s.p)
        r, c = rng.randint(0, 5), rng.randint(0, 5)
        m = Matrix(field, r, c, [rng.randint(-3, 3) for _ in range(r * c)])
        assert rank(m) + kernel_basis(m).cols == c
    for prop in ("euler", "d_squared"):
        for _ in range(1000):
            p = rng.choice([None, 2, 3, 5])
            field = QQ if p is None else GF(p)
            scal = oracles.Scalars(field.name)
            dims, blocks, expected = oracles.random_complex(rng, p)
            c = ChainComplex.build(field, dims, {d: Matrix.from_rows(b, field, dims[d]) for d, b in blocks.items()})
            if prop == "euler":
                h = homology(c)
                assert dict(h) == expected
                assert h.euler_characteristic() == c.dims.euler_characteristic()
            else:
                assert validate_complex(c).ok
                for d in blocks:
                    if d - 1 in blocks and blocks[d] and blocks[d - 1] and blocks[d][0]:
                        prod = oracles.matmul(blocks[d - 1], blocks[d], scal)
                        assert all(v == 0 for row in prod for v in row)
    return "rank-nullity, Euler characteristic and d^2 = 0 on 1000 random instances each"


def test_criterion_8_random_properties():
    timed(8, None, criterion_random_properties)


CRITERIA = {
    1: ("group algebra from the trivial action", test_criterion_1_group_algebra),
    2: ("swap skew algebra is 2x2 matrices", test_criterion_2_matrix_algebra),
    3: ("hom dimension identity over the corpus", test_criterion_3_hom_identity),
    4: ("freeify, trivial induced action, equivariance of F_A", test_criterion_4_theorem_checks),
    5: ("equivariant modules versus skew-algebra modules", test_criterion_5_module_equivalence),
    6: ("orbit of the point is graded Laurent", test_criterion_6_periodicity),
    7: ("validators are sound and sensitive (mutation suite)", test_criterion_7_mutation_suite),
    8: ("random rank-nullity, Euler characteristic, d^2 = 0", test_criterion_8_random_properties),
}


def summary_lines():
    lines = []
    for number, (title, _) in CRITERIA.items():
        if number not in RESULTS:
            continue
        ok, elapsed, detail = RESULTS[number]
        lines.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f}s) {detail}")
    return lines


if __name__ == "__main__":
    failed = 0
    for number, (title, fn) in CRITERIA.items():
        try:
            fn()
        except AssertionError:
            failed += 1
        except Exception as exc:  # report and keep going
            RESULTS[number] = (False, 0.0, f"{type(exc).__name__}: {exc}")
            failed += 1
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)
