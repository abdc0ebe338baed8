"""Brute-force checks: word enumeration, empirical sup-norms and witness families.

Nothing here relies on the canonicalizers being right, except :func:`witness`,
which searches for a growing family of the canonical base and then checks the
growth numerically.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .brooks import BrooksFunction, brooks_to_counting, canonicalize_brooks
from .canon_group import canonicalize_group
from .canon_monoid import canonicalize_monoid
from .counting import CountingFunction
from .errors import BoundedFunction, NoWitnessFound
from .words import EMPTY, Alphabet, Word

A1, A2 = 1, 2

DEFAULT_STEPS = 50
_DENSE_LIMIT = 1 << 20


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words (reduced words in group mode) of length <= max_len, length-lex."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    letters = alphabet.letters
    level = [EMPTY]
    yield EMPTY
    for _ in range(max_len):
        nxt = []
        for w in level:
            for s in letters:
                if alphabet.is_group and w and w[-1] == -s:
                    continue
                nxt.append(Word((*w, s)))
        yield from nxt
        level = nxt


def count_words(alphabet: Alphabet, length: int) -> int:
    n = alphabet.rank
    if length == 0:
        return 1
    if alphabet.is_group:
        return 2 * n * (2 * n - 1) ** (length - 1)
    return n**length


class WordTable:
    """Every word of length <= max_len as rows of letter-code arrays.

    Level L holds the words of length L in length-lex order, each with the
    index of its parent (the word minus its last letter) on level L-1.  A
    counting function is evaluated on all of them at once by accumulating,
    along the parent links, the coefficients of the suffixes ending at each
    new letter.
    """

    def __init__(self, alphabet: Alphabet, max_len: int):
        self.alphabet = alphabet
        self.max_len = max_len
        self.letters = alphabet.letters
        self.base = len(self.letters)
        self.code_of = {s: i for i, s in enumerate(self.letters)}
        inv = np.array([self.code_of.get(-s, -1) for s in self.letters], dtype=np.int64)

        self.words: list[np.ndarray] = [np.zeros((1, 0), dtype=np.int8)]
        self.parents: list[np.ndarray] = [np.zeros(0, dtype=np.int64)]
        self.last: list[np.ndarray] = [np.zeros(1, dtype=np.int64)]
        for L in range(1, max_len + 1):
            n_prev = self.words[-1].shape[0]
            parent = np.repeat(np.arange(n_prev), self.base)
            letter = np.tile(np.arange(self.base), n_prev)
            if alphabet.is_group and L >= 2:
                keep = letter != inv[self.last[-1][parent]]
                parent, letter = parent[keep], letter[keep]
            words = np.empty((len(parent), L), dtype=np.int8)
            words[:, :-1] = self.words[-1][parent]
            words[:, -1] = letter
            self.words.append(words)
            self.parents.append(parent)
            self.last.append(letter)
        # _suffix[L][m]: code of the last m letters of each word on level L
        self._suffix: list[dict[int, np.ndarray]] = [{} for _ in range(max_len + 1)]

    def __len__(self) -> int:
        return sum(w.shape[0] for w in self.words)

    def suffix_codes(self, L: int, m: int) -> np.ndarray:
        cache = self._suffix[L]
        if m not in cache:
            last = self.last[L]
            if m == 1:
                cache[m] = last.astype(np.int64)
            else:
                cache[m] = self.suffix_codes(L - 1, m - 1)[self.parents[L]] * self.base + last
        return cache[m]

    def code(self, w: Sequence[int]) -> int:
        c = 0
        for s in w:
            c = c * self.base + self.code_of[s]
        return c

    def word_at(self, L: int, i: int) -> Word:
        return Word(self.letters[c] for c in self.words[L][i])

    def values(self, f: CountingFunction) -> tuple[list[np.ndarray], int]:
        """(per-level integer arrays, scale): f(word) = array[i] / scale."""
        if f.alphabet != self.alphabet:
            raise ValueError("alphabet mismatch")
        terms = f.terms
        scale = math.lcm(*(c.denominator for c in terms.values())) if terms else 1
        ints = {w: int(c * scale) for w, c in terms.items()}
        eps = ints.pop(EMPTY, 0)
        bound = (sum(abs(c) for c in ints.values()) + abs(eps)) * max(self.max_len, 1)
        dtype = np.int64 if bound < 2**62 else object

        by_len: dict[int, dict[int, int]] = {}
        for w, c in ints.items():
            by_len.setdefault(len(w), {})[self.code(w)] = c
        lookups = {}
        for m, table in by_len.items():
            if self.base**m <= _DENSE_LIMIT:
                dense = np.zeros(self.base**m, dtype=dtype)
                for code, c in table.items():
                    dense[code] = c
                lookups[m] = ("dense", dense)
            else:
                keys = np.array(sorted(table), dtype=np.int64)
                vals = np.array([table[k] for k in keys.tolist()], dtype=dtype)
                lookups[m] = ("sparse", (keys, vals))

        out = [np.zeros(1, dtype=dtype)]
        for L in range(1, self.max_len + 1):
            inc = np.full(self.words[L].shape[0], eps, dtype=dtype)
            for m, (kind, data) in lookups.items():
                if m > L:
                    continue
                codes = self.suffix_codes(L, m)
                if kind == "dense":
                    inc += data[codes]
                else:
                    keys, vals = data
                    pos = np.clip(np.searchsorted(keys, codes), 0, len(keys) - 1)
                    hit = keys[pos] == codes
                    inc += np.where(hit, vals[pos], 0)
            out.append(out[-1][self.parents[L]] + inc)
        return out, scale


@functools.lru_cache(maxsize=8)
def word_table(alphabet: Alphabet, max_len: int) -> WordTable:
    return WordTable(alphabet, max_len)


def _as_counting(f) -> CountingFunction:
    return brooks_to_counting(f) if isinstance(f, BrooksFunction) else f


def level_sup(f, max_len: int) -> list[Fraction]:
    """max |f(w)| over words of each exact length 0..max_len."""
    f = _as_counting(f)
    levels, scale = word_table(f.alphabet, max_len).values(f)
    return [Fraction(int(np.abs(v).max()), scale) for v in levels]


def sup_norm_estimate(f, max_len: int) -> tuple[Fraction, Word]:
    """Exact max of |f| over all words of length <= max_len and the first word attaining it.

    This is a lower bound for the true sup-norm.
    """
    f = _as_counting(f)
    table = word_table(f.alphabet, max_len)
    levels, scale = table.values(f)
    best, where = 0, (0, 0)
    for L, vals in enumerate(levels):
        a = np.abs(vals)
        i = int(np.argmax(a))
        if a[i] > best:
            best, where = int(a[i]), (L, i)
    return Fraction(best, scale), table.word_at(*where)


def clean(w: Sequence[int]) -> bool:
    """Nonempty, and neither the first nor the last letter is a_1 or a_1^-1."""
    return bool(w) and abs(w[0]) != A1 and abs(w[-1]) != A1


@dataclass(frozen=True)
class WitnessFamily:
    """Words prefix·period^k on which a function grows by ``slope`` per step."""

    prefix: Word
    period: Word
    description: str
    slope: Fraction
    tested_range: int

    def word(self, alphabet: Alphabet, k: int) -> Word:
        return alphabet.concat(self.prefix, alphabet.power(self.period, k))

    def to_json(self) -> dict:
        return {
            "prefix": self.prefix.text,
            "period": self.period.text,
            "slope": str(self.slope),
            "description": self.description,
            "tested_range": self.tested_range,
        }


def family_values(f, alphabet: Alphabet, prefix: Word, period: Word, k_max: int) -> list[Fraction]:
    """[f(prefix·period^k) for k = 0..k_max] from a single left-to-right pass."""
    f = _as_counting(f)
    word = alphabet.concat(prefix, alphabet.power(period, k_max))
    if len(word) != len(prefix) + k_max * len(period):
        raise ValueError("prefix and period cancel against each other")
    pv = f.prefix_values(word)
    return [pv[len(prefix) + k * len(period)] for k in range(k_max + 1)]


def stable_slope(f, alphabet: Alphabet, prefix: Word, period: Word, k_max: int) -> Fraction | None:
    """The common forward difference over k = 1..k_max, or None if it varies."""
    vals = family_values(f, alphabet, prefix, period, k_max)
    diffs = {vals[k + 1] - vals[k] for k in range(1, k_max)}
    if len(diffs) != 1:
        return None
    return diffs.pop()


def _monoid_catalog(base: CountingFunction):
    L = max(base.depth(), 1)
    a_run = (A1,) * L
    yield "a1^k", Word((A1,))
    for w in base.support():
        if w:
            yield "(w a1^L)^k", Word((*w, *a_run))


def _cleanings(w: Word) -> list[Word]:
    starts, ends = w[0] == -A1, w[-1] == A1
    if starts and ends:
        cand = Word((A2, *w, -A2))
    elif starts:
        cand = Word((A2, *w))
    elif ends:
        cand = Word((*w, -A2))
    else:
        return []
    return [cand] if clean(cand) else []


def _group_catalog(base: CountingFunction):
    L = max(base.depth(), 1)
    pos, neg = (A1,) * L, (-A1,) * L
    yield "a1^k", Word((A1,))
    yield "a1^-k", Word((-A1,))
    support = [w for w in base.support() if w]
    cands = [w for w in support if clean(w)]
    for w in support:
        cands.extend(_cleanings(w))
    seen = set()
    for w in cands:
        if w in seen:
            continue
        seen.add(w)
        yield "(w a1^L)^k", Word((*w, *pos))
        yield "(a1^-L w)^k", Word((*neg, *w))
        yield "(w a1^L a2 a1^-L)^k", Word((*w, *pos, A2, *neg))
        yield "(w a1^L w a1^-L)^k", Word((*w, *pos, *w, *neg))


def _brooks_catalog(base: CountingFunction):
    yield from _group_catalog(base)
    L = max(base.depth(), 1)
    pos, neg = (A1,) * L, (-A1,) * L
    yield "(a2 a1^L a2 a1^-L)^k", Word((A2, *pos, A2, *neg))
    yield "(a2 a1^L a2^-1 a1^-L)^k", Word((A2, *pos, -A2, *neg))


def canonical_base(f) -> CountingFunction | BrooksFunction:
    if isinstance(f, BrooksFunction):
        return canonicalize_brooks(f)[0].base
    if f.alphabet.is_group:
        return canonicalize_group(f)[0].base
    return canonicalize_monoid(f)[0].base


def witness(f, steps: int = DEFAULT_STEPS) -> WitnessFamily:
    """A family u·v^k on which the canonical base of f grows linearly.

    Candidates are tried in a fixed order; the first whose forward differences
    over k = 1..steps are constant and nonzero (and stay so up to 2*steps)
    is returned.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    base = canonical_base(f)
    if base.is_zero():
        raise BoundedFunction("the function is bounded (canonical form is zero); no witness exists")
    alphabet = base.alphabet
    if isinstance(base, BrooksFunction):
        target = brooks_to_counting(base)
        catalog = _brooks_catalog(target)
    elif alphabet.is_group:
        target = base
        catalog = _group_catalog(base)
    else:
        target = base
        catalog = _monoid_catalog(base)
    for tag, period in catalog:
        alphabet.power(period, 2)  # enforces the cyclic-reduction precondition
        quick = stable_slope(target, alphabet, EMPTY, period, min(steps, 4))
        if not quick:
            continue
        slope = stable_slope(target, alphabet, EMPTY, period, steps)
        if slope and stable_slope(target, alphabet, EMPTY, period, 2 * steps) == slope:
            return WitnessFamily(EMPTY, period, tag, slope, steps)
    raise NoWitnessFound(f"no catalog family grows for {base}")


def words_by_length(alphabet: Alphabet, max_len: int) -> dict[int, list[Word]]:
    """Enumeration grouped by length; handy for exhaustive tests."""
    out: dict[int, list[Word]] = {}
    for w in enumerate_words(alphabet, max_len):
        out.setdefault(len(w), []).append(w)
    return out


def all_sequences(alphabet: Alphabet, length: int) -> Iterator[tuple[int, ...]]:
    """Every letter sequence of the given length, reduced or not."""
    return itertools.product(alphabet.letters, repeat=length)
