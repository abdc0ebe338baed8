import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from countfn.brooks import brooks_to_counting, canonicalize_brooks
from countfn.canon_group import canonicalize_group
from countfn.canon_monoid import canonicalize_monoid, in_basis_monoid
from countfn.counting import CountingFunction, elementary, left_relation
from countfn.errors import BoundedFunction
from countfn.oracle import (
    WordTable,
    clean,
    count_words,
    enumerate_words,
    family_values,
    level_sup,
    stable_slope,
    sup_norm_estimate,
    witness,
)
from countfn.words import EMPTY, is_reduced, parse_word, word_key

from conftest import G2, G3, M2, M3, random_brooks, random_function


def w(text, alphabet=G2):
    return parse_word(text, alphabet)


def test_enumeration_counts():
    assert [u.text for u in enumerate_words(M2, 2)] == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert sum(1 for u in enumerate_words(G2, 2) if len(u) == 2) == 12
    assert list(enumerate_words(G2, 0)) == [EMPTY]
    for alphabet in (M2, G2, M3, G3):
        words = list(enumerate_words(alphabet, 4))
        assert words == sorted(words, key=word_key)
        assert len(set(words)) == len(words)
        assert all(alphabet.contains(u) for u in words)
        for L in range(5):
            assert sum(1 for u in words if len(u) == L) == count_words(alphabet, L)


def test_word_table_matches_enumeration():
    for alphabet in (M2, G2, G3):
        table = WordTable(alphabet, 5)
        flat = [table.word_at(L, i) for L in range(6) for i in range(table.words[L].shape[0])]
        assert flat == list(enumerate_words(alphabet, 5))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31))
def test_table_values_match_direct_evaluation(seed):
    rng = random.Random(seed)
    alphabet = rng.choice([M2, G2, G3])
    f = random_function(rng, alphabet, depth=4)
    table = WordTable(alphabet, 5)
    levels, scale = table.values(f)
    for L in range(6):
        for i in range(0, table.words[L].shape[0], 7):
            u = table.word_at(L, i)
            assert Fraction(int(levels[L][i]), scale) == f(u)


def test_sup_norm_examples():
    lb = left_relation(M2, w("b", M2))
    assert sup_norm_estimate(lb, 10)[0] == 1
    assert sup_norm_estimate(CountingFunction.zero(G2), 6)[0] == 0
    sup, at = sup_norm_estimate(elementary(M2, w("a", M2)), 5)
    assert sup == 5 and at == w("aaaaa", M2)
    assert level_sup(elementary(M2, w("a", M2)), 3) == [0, 1, 2, 3]


def test_sup_norm_large_coefficients_use_objects():
    f = CountingFunction(G2, [(w("a"), Fraction(2**61, 3)), (w("b"), Fraction(-(2**61), 7))])
    sup, at = sup_norm_estimate(f, 6)
    assert sup == max(abs(f(u)) for u in enumerate_words(G2, 6))


def test_clean():
    assert clean(w("bab"))
    assert not clean(w("ab"))
    assert clean(w("b"))
    assert not clean(EMPTY)


def test_witness_examples():
    fam = witness(elementary(M2, w("b", M2)))
    assert fam.period.text == "ba" and fam.slope == 1
    fam = witness(elementary(M2, EMPTY))
    assert fam.period.text == "a" and fam.slope == 1
    fam = witness(elementary(G2, w("A")))
    assert fam.period.text == "A" and fam.slope == 1
    with pytest.raises(BoundedFunction):
        witness(left_relation(G2, w("ab")))


def test_monoid_slope_identity():
    for u in enumerate_words(M2, 3):
        if in_basis_monoid(u):
            for c in (Fraction(1), Fraction(-5, 3)):
                fam = witness(elementary(M2, u, c))
                assert fam.slope == c


def check_family(f, fam, alphabet):
    K = fam.tested_range
    vals = family_values(f, alphabet, fam.prefix, fam.period, 2 * K)
    diffs = {vals[k + 1] - vals[k] for k in range(1, 2 * K)}
    assert diffs == {fam.slope} and fam.slope != 0
    assert alphabet.contains(fam.word(alphabet, 3))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31))
def test_witness_soundness(seed):
    rng = random.Random(seed)
    alphabet = rng.choice([M2, G2, G3])
    f = random_function(rng, alphabet, depth=3)
    canon = canonicalize_group if alphabet.is_group else canonicalize_monoid
    base = canon(f)[0].base
    if base.is_zero():
        with pytest.raises(BoundedFunction):
            witness(f)
        return
    fam = witness(f, steps=20)
    check_family(base, fam, alphabet)
    # f differs from its base by a bounded function, so its slope agrees
    assert stable_slope(f, alphabet, fam.prefix, fam.period, 60) in (fam.slope, None)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31))
def test_brooks_witness(seed):
    rng = random.Random(seed)
    F = random_brooks(rng, G2, depth=3)
    try:
        fam = witness(F, steps=20)
    except BoundedFunction:
        return
    vals = family_values(brooks_to_counting(F), G2, fam.prefix, fam.period, 80)
    # F = base + (bounded part), and the base grows by exactly the slope
    bound = 2 * canonicalize_brooks(F)[1].bound()
    assert abs(vals[80] - vals[40] - 40 * fam.slope) <= 2 * bound


def test_family_word():
    fam = witness(elementary(G2, w("bb")))
    u = fam.word(G2, 4)
    assert is_reduced(u) and len(u) == 4 * len(fam.period)
