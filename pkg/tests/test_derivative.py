"""The one-letter derivative and its closure under all letters."""

import random

import pytest

from helpers import lasso, word
from ltl2aut import formula as F
from ltl2aut.derivative import (canonical_step, clause_step, derivative,
                                derivative_word, reachable_classes,
                                reachable_clauses)
from ltl2aut.errors import StateLimitError
from ltl2aut.parser import parse
from ltl2aut.propeq import canonical, dnf_clauses
from ltl2aut.semantics import satisfies
from ltl2aut.sweep import random_formula, random_lasso
from ltl2aut.words import Alphabet, letter


def test_letter_table_for_a_disjunction():
    """a | (b U c) steps to tt, b U c, ff, tt on {a}, {b}, {}, {c}."""
    phi = parse("a | (b U c)")
    assert derivative(phi, letter("a")) is F.tt
    assert derivative(phi, letter("b")) is parse("b U c")
    assert derivative(phi, letter()) is F.ff
    assert derivative(phi, letter("c")) is F.tt


def test_unfolding_per_operator():
    a = letter("a")
    b = letter("b")
    ab = letter("a", "b")
    empty = letter()
    assert derivative(parse("X (a U b)"), empty) is parse("a U b")
    assert derivative(parse("F a"), empty) is parse("F a")
    assert derivative(parse("F a"), a) is F.tt
    assert derivative(parse("G a"), a) is parse("G a")
    assert derivative(parse("G a"), empty) is F.ff
    assert derivative(parse("a U b"), a) is parse("a U b")
    assert derivative(parse("a U b"), b) is F.tt
    assert derivative(parse("a U b"), empty) is F.ff
    assert derivative(parse("a W b"), a) is parse("a W b")
    assert derivative(parse("a W b"), b) is F.tt
    assert derivative(parse("a W b"), empty) is F.ff
    assert derivative(parse("a M b"), ab) is F.tt
    assert derivative(parse("a M b"), b) is parse("a M b")
    assert derivative(parse("a M b"), a) is F.ff
    assert derivative(parse("a R b"), b) is parse("a R b")
    assert derivative(parse("a R b"), ab) is F.tt
    assert derivative(parse("a R b"), empty) is F.ff


def test_derivative_of_literals():
    assert derivative(F.atom("a"), letter("a")) is F.tt
    assert derivative(F.atom("a"), letter("b")) is F.ff
    assert derivative(F.neg_atom("a"), letter("b")) is F.tt
    assert derivative(F.neg_atom("a"), letter("a")) is F.ff
    assert derivative(F.tt, letter()) is F.tt
    assert derivative(F.ff, letter("a")) is F.ff


def test_derivative_word_folds_left():
    assert derivative_word(parse("a U b"), word("a.b")) is F.tt
    assert derivative_word(parse("a U b"), word("a.a")) is parse("a U b")
    assert derivative_word(parse("X X a"), word("-.-")) is F.atom("a")
    assert derivative_word(parse("a"), ()) is F.atom("a")


def test_fundamental_property_against_the_oracle():
    """Prepending w to any continuation shifts satisfaction into the derivative."""
    rng = random.Random(20260823)
    alphabet = Alphabet(("a", "b"))
    for _ in range(200):
        phi = random_formula(rng, ("a", "b"), 9)
        tail = random_lasso(rng, alphabet, max_prefix=3, max_period=3)
        head = tuple(rng.choice(alphabet.letters)
                     for _ in range(rng.randrange(4)))
        assert (satisfies(tail.prepended(head), phi)
                == satisfies(tail, derivative_word(phi, head)))


def test_canonical_step_matches_derivative():
    rng = random.Random(7)
    alphabet = Alphabet(("a", "b"))
    for _ in range(100):
        phi = random_formula(rng, ("a", "b"), 8)
        l = rng.choice(alphabet.letters)
        assert canonical_step(canonical(phi), l) is canonical(derivative(phi, l))


def test_clause_step_tracks_dnf_of_derivative():
    aub = parse("a U b")
    assert clause_step(frozenset({aub}), letter("b")) == {frozenset()}
    assert clause_step(frozenset({aub}), letter("a")) == {frozenset({aub})}
    assert clause_step(frozenset({aub}), letter()) == frozenset()
    phi = parse("F a")
    assert clause_step(frozenset({phi}), letter("a")) == dnf_clauses(F.tt)


def test_reachable_classes_small_examples():
    assert set(reachable_classes(parse("G a")).classes) == {parse("G a"), F.ff}
    assert set(reachable_classes(F.atom("a")).classes) == {
        F.atom("a"), F.tt, F.ff}
    rc = reachable_classes(parse("a U b"))
    assert set(rc.classes) == {parse("a U b"), F.tt, F.ff}
    assert rc.classes[rc.initial] is parse("a U b")


def test_reachable_classes_step_is_closed():
    rc = reachable_classes(parse("G (a | X b)"))
    for rep in rc.classes:
        for l in rc.alphabet.letters:
            assert rc.step(rep, l) in rc.classes


def test_reachable_classes_respects_the_cap():
    with pytest.raises(StateLimitError):
        reachable_classes(parse("a U (b U (a W b))"), max_classes=2)


def test_reachable_clauses_covers_initial_disjuncts():
    rr = reachable_clauses(parse("a | b"))
    initial = {rr.clauses[i] for i in rr.initial}
    assert initial == {frozenset({F.atom("a")}), frozenset({F.atom("b")})}


def test_positive_boolean_combination_of_proper_subformulas():
    """Derivatives only rearrange the original temporal building blocks."""
    rng = random.Random(11)
    alphabet = Alphabet(("a", "b"))
    for _ in range(120):
        phi = random_formula(rng, ("a", "b"), 9)
        head = tuple(rng.choice(alphabet.letters)
                     for _ in range(rng.randrange(1, 4)))
        result = derivative_word(phi, head)
        allowed = F.proper_subformulas(phi) | {F.tt, F.ff}
        assert F.max_proper_subformulas(result) <= allowed
