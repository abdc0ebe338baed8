import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from countfn.counting import (
    CountingFunction,
    elementary,
    left_relation,
    right_relation,
    symmetrized_extension,
    symmetry_relation,
)
from countfn.words import EMPTY, delta1, deltafin, inverse, occurrences, parse_word

from conftest import G2, G3, M2, random_function, random_word


def p(text, alphabet=G2, c=1):
    return elementary(alphabet, parse_word(text, alphabet), c)


def cf(alphabet, **kw):
    return CountingFunction(alphabet, [(parse_word(k.replace("_", ""), alphabet), v) for k, v in kw.items()])


def test_evaluate_examples():
    assert p("", M2).evaluate(parse_word("abab", M2)) == 4
    f = p("ab", M2, 3) - p("b", M2)
    assert f(parse_word("abab", M2)) == 4


def test_arithmetic():
    f = p("ab", M2, Fraction(1, 3)) + p("b", M2, -2)
    assert (f + (-1) * f).is_zero()
    assert (0 * f).is_zero()
    assert f - f == CountingFunction.zero(M2)
    assert (f * 3).coefficient(parse_word("ab", M2)) == 1


def test_depth():
    assert p("ab").depth() == 2
    assert p("").depth() == 1
    assert CountingFunction.zero(G2).depth() == 0


def test_epsilon_equality():
    assert p("", M2) == p("a", M2) + p("b", M2)
    assert p("", G2) == p("a") + p("A") + p("b") + p("B")
    assert p("", M2) != p("a", M2)


def test_relation_shapes():
    assert left_relation(M2, parse_word("b", M2)) == p("b", M2) - p("ab", M2) - p("bb", M2)
    assert right_relation(M2, parse_word("b", M2)) == p("b", M2) - p("ba", M2) - p("bb", M2)
    assert left_relation(G2, parse_word("a", G2)) == p("a") - p("aa") - p("ba") - p("Ba")
    assert symmetry_relation(G2, parse_word("a", G2)) == p("a") + p("A")
    assert symmetry_relation(G2, parse_word("ab", G2)) == p("ab") + p("BA")
    u = parse_word("aB", G2)
    assert symmetrized_extension(G2, u) == left_relation(G2, u) - right_relation(G2, inverse(u))
    for n in range(1, 4):
        u = tuple([1] * n)
        assert len(left_relation(M2, u)) == 1 + 2
        assert len(left_relation(G2, u)) == 1 + 3
        assert len(left_relation(G3, u)) == 1 + 5


def test_relation_deltas_exhaustive(group_words_6, monoid_words_6):
    for alphabet, words in ((M2, monoid_words_6), (G2, group_words_6)):
        patterns = [u for u in words if 1 <= len(u) <= 3]
        for u in patterns:
            lw, rw = left_relation(alphabet, u), right_relation(alphabet, u)
            for v in words:
                assert lw(v) == delta1(u, v)
                assert rw(v) == deltafin(u, v)


def test_epsilon_relations_vanish(group_words_6):
    # p_ε(v) = |v| = Σ_s p_s(v), so l_ε and r_ε are the zero function
    for alphabet in (M2, G2):
        assert left_relation(alphabet, EMPTY) == CountingFunction.zero(alphabet)
        assert right_relation(alphabet, EMPTY) == CountingFunction.zero(alphabet)
    r = right_relation(G2, EMPTY)
    assert all(r(v) == 0 for v in group_words_6)


def test_se_values(group_words_6):
    for u in group_words_6:
        if not 1 <= len(u) <= 2:
            continue
        se = symmetrized_extension(G2, u)
        for v in group_words_6:
            assert se(v) == delta1(u, v) - deltafin(inverse(u), v)


def test_l_minus_r_bounded(group_words_6):
    a = parse_word("a", G2)
    f = left_relation(G2, a) - right_relation(G2, a)
    assert max(abs(f(v)) for v in group_words_6) <= 1


def test_string_form():
    f = cf(M2, ab=3, b=Fraction(-1, 2)) + p("", M2)
    assert str(f) == "p[] - 1/2*p[b] + 3*p[ab]"
    assert str(CountingFunction.zero(M2)) == "0"


@settings(max_examples=150)
@given(st.integers(0, 2**31))
def test_shortest_support_word_gives_its_coefficient(seed):
    # the independence argument: f(w) = x_w at a shortest support word
    rng = random.Random(seed)
    alphabet = rng.choice([M2, G2])
    f = random_function(rng, alphabet, depth=4, epsilon=False)
    if f.is_zero():
        return
    w0 = f.support()[0]
    same_len = [u for u in f.support() if len(u) == len(w0)]
    for u in same_len:
        assert f(u) == f.coefficient(u)


@settings(max_examples=150)
@given(st.integers(0, 2**31))
def test_evaluate_matches_occurrence_sum(seed):
    rng = random.Random(seed)
    alphabet = rng.choice([M2, G2, G3])
    f = random_function(rng, alphabet)
    v = random_word(rng, alphabet, rng.randint(0, 15))
    assert f(v) == sum(c * occurrences(u, v) for u, c in f.terms.items())
    pv = f.prefix_values(v)
    assert pv[-1] == f(v)
    assert all(pv[j] == f(v[:j]) for j in range(len(v) + 1))


def test_rejects_bad_words():
    with pytest.raises(ValueError):
        CountingFunction(G2, [((1, -1), 1)])
    with pytest.raises(ValueError):
        CountingFunction(M2, [((-1,), 1)])
    with pytest.raises(ValueError):
        p("a") + p("a", M2)
