import random
from fractions import Fraction

import pytest
from hypothesis import settings

from countfn.brooks import BrooksFunction
from countfn.counting import CountingFunction
from countfn.oracle import words_by_length
from countfn.words import Alphabet, Mode

settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

M2 = Alphabet(2, Mode.MONOID)
G2 = Alphabet(2, Mode.GROUP)
M3 = Alphabet(3, Mode.MONOID)
G3 = Alphabet(3, Mode.GROUP)


def rand_coef(rng):
    c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return c or Fraction(1)


def random_word(rng, alphabet, length):
    w = []
    while len(w) < length:
        x = rng.choice(alphabet.letters)
        if alphabet.is_group and w and w[-1] == -x:
            continue
        w.append(x)
    return tuple(w)


def random_function(rng, alphabet, depth=4, max_terms=5, epsilon=True):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        lo = 0 if epsilon else 1
        terms.append((random_word(rng, alphabet, rng.randint(lo, depth)), rand_coef(rng)))
    return CountingFunction(alphabet, terms)


def random_brooks(rng, alphabet, depth=4, max_terms=5):
    terms = [(random_word(rng, alphabet, rng.randint(1, depth)), rand_coef(rng)) for _ in range(rng.randint(1, max_terms))]
    return BrooksFunction(alphabet, terms)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(scope="session")
def group_words_6():
    return [w for ws in words_by_length(G2, 6).values() for w in ws]


@pytest.fixture(scope="session")
def monoid_words_6():
    return [w for ws in words_by_length(M2, 6).values() for w in ws]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
