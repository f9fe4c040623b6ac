"""Propositional equivalence over temporal subformulas as opaque variables."""

import random

from hypothesis import given, settings
from hypothesis.strategies import integers

from ltl2aut import formula as F
from ltl2aut.parser import parse
from ltl2aut.propeq import canonical, clause_formula, dnf_clauses, prop_equivalent
from ltl2aut.sweep import random_formula


def test_dnf_clause_sets_distribute():
    ga, a, b = parse("G a"), F.atom("a"), F.atom("b")
    assert dnf_clauses(parse("G a & (a | b)")) == {
        frozenset({ga, a}), frozenset({ga, b})}


def test_absorption_removes_subsumed_clauses():
    a = F.atom("a")
    assert dnf_clauses(parse("a & b | a")) == {frozenset({a})}
    assert dnf_clauses(parse("a | a & b | a & b & c")) == {frozenset({a})}


def test_constant_clause_sets():
    assert dnf_clauses(F.tt) == {frozenset()}
    assert dnf_clauses(F.ff) == frozenset()


def test_prop_equivalent_basics():
    assert prop_equivalent(parse("a | a"), F.atom("a"))
    assert prop_equivalent(parse("(a | b) & a"), F.atom("a"))
    assert prop_equivalent(parse("a & b"), parse("b & a"))
    assert not prop_equivalent(parse("F a"), F.atom("a"))
    # a and !a are distinct variables here, so a & !a is not ff.
    assert not prop_equivalent(parse("a & !a"), F.ff)
    assert not prop_equivalent(parse("a | !a"), F.tt)


def test_temporal_subformulas_are_opaque():
    """Distinct temporal nodes are unrelated variables for this equivalence."""
    assert not prop_equivalent(parse("G a"), F.atom("a"))
    assert prop_equivalent(parse("G a & G a"), parse("G a"))
    # Equivalence does not look inside temporal operators.
    assert not prop_equivalent(parse("G (a & b)"), parse("G (b & a)"))


def test_canonical_is_a_class_representative():
    assert canonical(parse("a & b | a")) is canonical(F.atom("a"))
    assert canonical(parse("a | b")) is canonical(parse("b | a"))
    rep = canonical(parse("(a | b) & c"))
    assert canonical(rep) is rep
    assert canonical(F.ff) is F.ff
    assert canonical(F.tt) is F.tt


def test_clause_formula_round_trip():
    clause = frozenset({F.atom("a"), parse("G b")})
    rebuilt = clause_formula(clause)
    assert dnf_clauses(rebuilt) == {clause}
    assert clause_formula(frozenset()) is F.tt


@settings(max_examples=150, deadline=None)
@given(integers(0, 10 ** 9))
def test_canonical_decides_prop_equivalence(seed):
    """Two formulas are equivalent iff their representatives are identical."""
    rng = random.Random(seed)
    left = random_formula(rng, ("a", "b"), 8)
    right = random_formula(rng, ("a", "b"), 8)
    assert prop_equivalent(left, canonical(left))
    assert prop_equivalent(left, right) == (canonical(left) is canonical(right))
