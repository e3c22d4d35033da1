import pytest

import oracles
from skewcat import serialize
from skewcat.corpus import (FIELDS, S3, Z2, Z3, corpus_actions, cycle_action, dg_swap_action,
                            ground_field, projection_monoid_action, sign_action, swap_action,
                            swap_objects_action, trivial_on_field, truncated_monoid_action)
from skewcat.dgcat import Algebra, hom_homology, validate_dg_category, validate_dg_functor
from skewcat.exactlin import GF, QQ, Matrix
from skewcat.groupact import NotAGroupError, is_free_on_objects, trivial_action, validate_action
from skewcat.report import ValidationError
from skewcat.skew import (HypothesisError, check_freeify, check_trivial_induced_action,
                          equivariance_of_embedding, freeify, hom_dimension_law, reduce,
                          skew_group_algebra, skew_group_dg_category)
from skewcat.graded import GradedDims

ALL = sorted(corpus_actions(QQ))


def basis_product(alg, a, b):
    return alg.describe(alg.obj, alg.obj, 0, alg.mul(alg.vector({a: 1}), alg.vector({b: 1})))


def test_trivial_z2_on_k_is_group_algebra():
    ag = skew_group_algebra(trivial_on_field(QQ, Z2))
    assert ag.basis_labels == ("e|1", "s|1")
    assert basis_product(ag, "s|1", "s|1") == {"e|1": 1}
    assert ag.one == ag.vector({"e|1": 1})


@pytest.mark.parametrize("group", [Z2, Z3, S3], ids=["Z2", "Z3", "S3"])
def test_group_algebra_matches_table(group, field):
    ag = skew_group_algebra(trivial_action(group, ground_field(field)))
    table = oracles.group_algebra_table(group.elements, group.mul)
    for g in group:
        for h in group:
            want = {f"{k}|1": 1 for k in table[(g, h)]}
            assert basis_product(ag, f"{g}|1", f"{h}|1") == want


def test_swap_product_formula():
    ag = skew_group_algebra(swap_action(QQ))
    assert basis_product(ag, "s|p", "s|q") == {"e|p": 1}


def matrix_units(ag):
    return {(1, 1): ag.vector({"e|p": 1}), (2, 2): ag.vector({"e|q": 1}),
            (1, 2): ag.vector({"s|p": 1}), (2, 1): ag.vector({"s|q": 1})}


@pytest.mark.parametrize("field", [QQ, GF(3), GF(5)], ids=lambda f: f.name)
def test_swap_skew_algebra_is_two_by_two_matrices(field):
    ag = skew_group_algebra(swap_action(field))
    assert ag.dimension == 4
    e = matrix_units(ag)
    zero = tuple(field.zero for _ in range(4))
    for (i, j), (k, l) in ((a, b) for a in e for b in e):
        want = e[(i, l)] if j == k else zero
        assert ag.mul(e[(i, j)], e[(k, l)]) == want
    total = tuple(x + y for x, y in zip(e[(1, 1)], e[(2, 2)]))
    assert total == ag.one


def test_matrix_units_also_work_in_characteristic_two():
    ag = skew_group_algebra(swap_action(GF(2)))
    e = matrix_units(ag)
    assert ag.mul(e[(1, 2)], e[(2, 1)]) == e[(1, 1)]
    assert ag.mul(e[(2, 1)], e[(1, 2)]) == e[(2, 2)]


def test_sign_skew_algebra_associative_and_matches_formula():
    rho = sign_action(QQ)
    ag = skew_group_algebra(rho)
    assert ag.dimension == 4
    assert validate_dg_category(ag).ok
    alg = rho.category
    labels = list(alg.basis_labels)
    alg_table = {(a, b): basis_product(alg, a, b) for a in labels for b in labels}
    act = {g: {a: alg.describe("*", "*", 0, rho.act(g, "*", "*", 0, alg.vector({a: 1}))) for a in labels}
           for g in Z2}
    want = oracles.skew_table(Z2.elements, Z2.mul, alg_table, labels, act)
    for (u, v), out in want.items():
        assert basis_product(ag, u, v) == {k: c for k, c in out.items()}


@pytest.mark.parametrize("name", ALL)
def test_skew_category_valid_and_hom_law(name, field):
    rho = corpus_actions(field)[name]
    s = skew_group_dg_category(rho)
    assert validate_dg_category(s.category).ok
    assert hom_dimension_law(rho, s).ok
    assert validate_dg_functor(s.embedding).ok
    if rho.monoid.is_group:
        assert validate_action(s.induced_action).ok
        assert equivariance_of_embedding(s).ok
        # same law for homology, since every rho(g) is a chain isomorphism
        a = rho.category
        for x in a.objects:
            for y in a.objects:
                total = {}
                for g in rho.monoid:
                    for d, v in hom_homology(a, x, rho.act_object(g, y)).items():
                        total[d] = total.get(d, 0) + v
                assert hom_homology(s.category, x, y) == GradedDims(total)


@pytest.mark.parametrize("name", ["trivial_Z2_on_k", "swap_on_k2", "sign_on_dual_numbers",
                                  "inversion_on_kZ3", "projection_monoid_on_k2"])
def test_skew_algebra_is_one_object_skew_category(name, field):
    rho = corpus_actions(field)[name]
    ag = skew_group_algebra(rho)
    assert Algebra.from_category(skew_group_dg_category(rho).category) == ag


def test_swap_embedding_is_equivariant_on_p():
    s = skew_group_dg_category(swap_action(QQ))
    a = s.action.category
    p, q = a.vector({"p": 1}), a.vector({"q": 1})
    moved = s.induced_action("s").apply("*", "*", 0, s.embedding.apply("*", "*", 0, p))
    assert moved == s.embedding.apply("*", "*", 0, q)
    assert s.category.describe("*", "*", 0, moved) == {"e|q": 1}


def test_invalid_action_refused():
    a = ground_field(QQ)
    rho = trivial_action(Z2, a)
    rho.functors["s"] = rho.functors["s"].__class__(a, a, {"*": "*"}, {("*", "*"): {0: Matrix.from_rows([[2]], QQ)}})
    with pytest.raises(ValidationError):
        skew_group_dg_category(rho)


def test_monoid_actions_degrade():
    for rho in (truncated_monoid_action(QQ), projection_monoid_action(QQ)):
        s = skew_group_dg_category(rho)
        assert validate_dg_category(s.category).ok
        assert s.induced_action is None
        with pytest.raises(NotAGroupError):
            reduce(s)
        with pytest.raises(NotAGroupError):
            freeify(rho)
        with pytest.raises(NotAGroupError):
            check_trivial_induced_action(rho)


def test_reduce_free_swap_has_one_object():
    red = reduce(skew_group_dg_category(swap_objects_action(QQ)))
    assert red.category.objects == ("X",)
    assert validate_dg_category(red.category).ok
    assert validate_dg_functor(red.inclusion).ok


def test_reduce_trivial_action_is_everything():
    rho = trivial_action(Z2, corpus_actions(QQ)["cycle_objects"].category)
    s = skew_group_dg_category(rho)
    red = reduce(s)
    assert red.category == s.category


def test_reduce_cycle_hom_counts_all_translates():
    rho = cycle_action(QQ)
    red = reduce(skew_group_dg_category(rho))
    assert red.category.objects == ("X",)
    a = rho.category
    want = sum(a.dims("X", rho.act_object(g, "X")).total() for g in Z3)
    assert red.category.dims("X", "X").total() == want == 2


def test_freeify_trivial_action_on_one_object():
    rho = trivial_on_field(QQ)
    res = freeify(rho)
    assert res.category.objects == ("(*,e)", "(*,s)")
    assert res.action.act_object("s", "(*,e)") == "(*,s)"
    assert {res.projection(x) for x in res.category.objects} == {"*"}
    assert check_freeify(res, rho).ok


def test_freeify_already_free_keeps_object_count():
    rho = swap_objects_action(QQ)
    res = freeify(rho)
    assert len(res.category.objects) == len(rho.category.objects)
    assert is_free_on_objects(res.action)[0]
    assert res.category.dims("(X,e)", "(X,s)") == rho.category.dims("X", "Y")


@pytest.mark.parametrize("name", ALL)
def test_freeify_then_trivial_induced(name, field):
    rho = corpus_actions(field)[name]
    if not rho.monoid.is_group:
        return
    res = freeify(rho)
    assert check_freeify(res, rho).ok
    assert check_trivial_induced_action(res.action).ok


def test_trivial_induced_action_on_swap():
    assert check_trivial_induced_action(swap_objects_action(QQ)).ok
    assert check_trivial_induced_action(dg_swap_action(GF(2))).ok


def test_trivial_induced_refuses_non_free():
    with pytest.raises(HypothesisError, match="not free"):
        check_trivial_induced_action(trivial_on_field(QQ))


def test_skew_roundtrips_through_json():
    s = skew_group_dg_category(dg_swap_action(QQ)).category
    assert serialize.from_json(serialize.to_json(s)) == s
