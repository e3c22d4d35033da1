"""Validators against single-constant mutants, judged by the independent oracle."""

import json

import pytest

import oracles
from mutants import MUTATION_FIXTURES, mutants
from skewcat import serialize
from skewcat.cli import fixtures_dir, validate_object


def load_doc(stem):
    return json.loads((fixtures_dir() / f"{stem}.json").read_text())


def verdicts(stem):
    for name, doc in mutants(load_doc(stem)):
        rep = validate_object(serialize.from_json(doc))
        yield name, rep, oracles.doc_ok(doc)


@pytest.mark.parametrize("stem", MUTATION_FIXTURES)
def test_fixture_passes(stem):
    doc = load_doc(stem)
    assert oracles.doc_ok(doc)
    assert validate_object(serialize.from_json(doc)).ok


@pytest.mark.parametrize("stem", MUTATION_FIXTURES)
def test_validator_agrees_with_oracle(stem):
    for name, rep, valid in verdicts(stem):
        assert rep.ok == valid, f"{stem} {name}: validator {rep.ok}, oracle {valid}"
        if not rep.ok:
            assert all(v.witness for v in rep.violations), f"{stem} {name}: violation without witness"


def test_known_equivalent_mutants():
    # x·x = x turns k[x]/x^2 into k x k, still a unital associative algebra
    found = {name for name, rep, valid in verdicts("dgcat_dual_numbers") if valid}
    assert "composition:*/*/*/x/x/x" in found
    # scaling d(eps) = 1 to d(eps) = 2 keeps every axiom over QQ
    found = {name for name, rep, valid in verdicts("dgcat_epsilon") if valid}
    assert found == {"differential:*/*/eps/1"}
