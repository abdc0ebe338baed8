import random
from fractions import Fraction

import pytest

from countfn.brooks import BrooksFunction, canonicalize_brooks
from countfn.canon_group import canonicalize_group
from countfn.canon_monoid import canonicalize_monoid
from countfn.errors import InverseInMonoid, LetterOutOfRank, ParseError, PhiEpsilon, UnreducedWord
from countfn.parsing import parse_expression
from countfn.words import EMPTY, parse_word

from conftest import G2, M2, random_brooks, random_function


def test_terms():
    f = parse_expression("3*p[ab] - 1/2*p[b]", "monoid", 2)
    assert dict(f.terms) == {parse_word("ab", M2): 3, parse_word("b", M2): Fraction(-1, 2)}
    assert dict(parse_expression("p[]", "group", 2).terms) == {EMPTY: 1}
    assert parse_expression("0", "group", 2).is_zero()
    assert parse_expression("-p[a] + p[a]", "group", 2).is_zero()
    assert parse_expression("  2 * p[ab] ", "monoid", 2) == parse_expression("2*p[ab]", "monoid", 2)


def test_brooks_terms():
    F = parse_expression("phi[A] + 2*phi[ab]", "brooks", 2)
    assert isinstance(F, BrooksFunction)
    assert F == BrooksFunction(G2, [((1,), -1), ((1, 2), 2)])


@pytest.mark.parametrize(
    "text, mode, exc",
    [
        ("p[aA]", "group", UnreducedWord),
        ("p[C]", "group", LetterOutOfRank),
        ("p[c]", "monoid", LetterOutOfRank),
        ("p[A]", "monoid", InverseInMonoid),
        ("phi[]", "brooks", PhiEpsilon),
        ("p[a]", "brooks", ParseError),
        ("phi[a]", "group", ParseError),
        ("p[a] +", "group", ParseError),
        ("p[a", "group", ParseError),
        ("3 p[a]", "group", ParseError),
        ("1/0*p[a]", "group", ParseError),
        ("", "group", ParseError),
        ("p[a] p[b]", "group", ParseError),
    ],
)
def test_errors(text, mode, exc):
    with pytest.raises(exc) as info:
        parse_expression(text, mode, 2)
    assert isinstance(info.value, ValueError)
    if text:
        assert info.value.position is not None


def test_error_positions():
    with pytest.raises(UnreducedWord) as info:
        parse_expression("p[b] + p[aA]", "group", 2)
    assert info.value.position == 9  # start of the cancelling pair
    assert info.value.caret().splitlines()[1].index("^") == 2 + 9


def test_round_trip_canonical_forms():
    rng = random.Random(8)
    for _ in range(100):
        alphabet = rng.choice([M2, G2])
        mode = "group" if alphabet.is_group else "monoid"
        f = random_function(rng, alphabet, depth=4)
        canon = canonicalize_group if alphabet.is_group else canonicalize_monoid
        for g in (f, canon(f)[0].base):
            back = parse_expression(str(g), mode, 2)
            assert dict(back.terms) == dict(g.terms)
        F = random_brooks(rng, G2)
        for G in (F, canonicalize_brooks(F)[0].base):
            assert parse_expression(str(G), "brooks", 2) == G
