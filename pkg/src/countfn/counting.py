"""Counting functions: finite rational combinations of subword counts p_w.

Coefficients are :class:`fractions.Fraction`; zero coefficients are never
stored.  p_ε (the length function) is a legal term.  Because
p_ε = Σ_{|s|=1} p_s, two term maps can describe the same function; equality
compares the ε-free coordinates, in which the representation is unique.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .words import EMPTY, Alphabet, Word, inverse, word_key

__all__ = [
    "CountingFunction",
    "elementary",
    "left_relation",
    "right_relation",
    "symmetry_relation",
    "symmetrized_extension",
    "format_terms",
]

Coefficient = int | Fraction


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _add_into(terms: dict, w, c: Fraction) -> None:
    total = terms.get(w, 0) + c
    if total:
        terms[w] = total
    else:
        terms.pop(w, None)


def _coef_text(c: Fraction, first: bool) -> tuple[str, str]:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    body = "" if mag == 1 else f"{mag}*"
    if first:
        return ("-" if c < 0 else ""), body
    return f" {sign} ", body


def format_terms(items: Iterable[tuple[Word, Fraction]], atom: str) -> str:
    """Render ``c*atom[word]`` terms joined by +/-; the empty combination is ``0``."""
    parts = []
    for i, (w, c) in enumerate(items):
        sign, body = _coef_text(c, i == 0)
        parts.append(f"{sign}{body}{atom}[{w.text}]")
    return "".join(parts) or "0"


class CountingFunction:
    __slots__ = ("alphabet", "_terms", "_depth")

    def __init__(self, alphabet: Alphabet, terms: Mapping | Iterable[tuple[Sequence[int], Coefficient]] = ()):
        self.alphabet = alphabet
        acc: dict[Word, Fraction] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in pairs:
            w = alphabet.check(w)
            _add_into(acc, w, _frac(c))
        self._terms = acc
        self._depth = None

    @classmethod
    def _wrap(cls, alphabet: Alphabet, terms: dict) -> "CountingFunction":
        # terms must already hold Word keys of this alphabet and nonzero Fractions
        self = cls.__new__(cls)
        self.alphabet = alphabet
        self._terms = terms
        self._depth = None
        return self

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "CountingFunction":
        return cls._wrap(alphabet, {})

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Word, Fraction]]:
        """Terms in length-lex order of their words."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coefficient(self, w: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _same(self, other: "CountingFunction") -> None:
        if not isinstance(other, CountingFunction):
            raise TypeError(f"expected CountingFunction, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __add__(self, other: "CountingFunction") -> "CountingFunction":
        self._same(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _add_into(acc, w, c)
        return CountingFunction._wrap(self.alphabet, acc)

    def __neg__(self) -> "CountingFunction":
        return CountingFunction._wrap(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "CountingFunction") -> "CountingFunction":
        return self + (-other)

    def __mul__(self, c) -> "CountingFunction":
        c = _frac(c)
        if not c:
            return CountingFunction.zero(self.alphabet)
        return CountingFunction._wrap(self.alphabet, {w: c * x for w, x in self._terms.items()})

    __rmul__ = __mul__

    def epsilon_free(self) -> "CountingFunction":
        """The same function with p_ε replaced by the sum of all p_s, |s| = 1."""
        x = self._terms.get(EMPTY)
        if x is None:
            return self
        acc = dict(self._terms)
        del acc[EMPTY]
        for s in self.alphabet.letters:
            _add_into(acc, Word((s,)), x)
        return CountingFunction._wrap(self.alphabet, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountingFunction):
            return NotImplemented
        if other.alphabet != self.alphabet:
            return False
        return self.epsilon_free()._terms == other.epsilon_free()._terms

    __hash__ = None

    def depth(self) -> int:
        """Longest word in the (unique) ε-free representation; 0 for the zero function."""
        if self._depth is None:
            ef = self.epsilon_free()
            self._depth = max((len(w) for w in ef._terms), default=0)
        return self._depth

    def prefix_values(self, w: Sequence[int]) -> list[Fraction]:
        """[f(w[:0]), f(w[:1]), ..., f(w)] in one left-to-right pass."""
        terms = self._terms
        eps = terms.get(EMPTY, 0)
        top = max((len(u) for u in terms), default=0)
        w = tuple(w)
        out = [Fraction(0)]
        total = Fraction(0)
        for j in range(1, len(w) + 1):
            inc = eps
            for m in range(1, min(top, j) + 1):
                c = terms.get(w[j - m : j])
                if c is not None:
                    inc += c
            total += inc
            out.append(total)
        return out

    def evaluate(self, w: Sequence[int]) -> Fraction:
        return self.prefix_values(w)[-1]

    __call__ = evaluate

    def __str__(self) -> str:
        return format_terms(self.items(), "p")

    def __repr__(self) -> str:
        return f"CountingFunction({self.alphabet}, {str(self)!r})"

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.items())


def elementary(alphabet: Alphabet, w: Sequence[int], coefficient: Coefficient = 1) -> CountingFunction:
    """c * p_w."""
    return CountingFunction(alphabet, [(w, coefficient)])


def _extensions(alphabet: Alphabet, w: Word, left: bool) -> list[Word]:
    if alphabet.is_group and w:
        banned = -w[0] if left else -w[-1]
        letters = [s for s in alphabet.letters if s != banned]
    else:
        letters = list(alphabet.letters)
    if left:
        return [Word((s, *w)) for s in letters]
    return [Word((*w, s)) for s in letters]


def left_relation(alphabet: Alphabet, w: Sequence[int]) -> CountingFunction:
    """l_w = p_w - Σ p_{sw} over the letters s that keep sw reduced."""
    w = alphabet.check(w)
    terms = {w: Fraction(1)}
    for u in _extensions(alphabet, w, left=True):
        terms[u] = Fraction(-1)
    return CountingFunction._wrap(alphabet, terms)


def right_relation(alphabet: Alphabet, w: Sequence[int]) -> CountingFunction:
    """r_w = p_w - Σ p_{ws}."""
    w = alphabet.check(w)
    terms = {w: Fraction(1)}
    for u in _extensions(alphabet, w, left=False):
        terms[u] = Fraction(-1)
    return CountingFunction._wrap(alphabet, terms)


def _require_group_word(alphabet: Alphabet, w: Sequence[int], name: str) -> Word:
    if not alphabet.is_group:
        raise ValueError(f"{name} is only defined on free groups")
    w = alphabet.check(w)
    if not w:
        raise ValueError(f"{name} needs a nonempty word")
    return w


def symmetry_relation(alphabet: Alphabet, w: Sequence[int]) -> CountingFunction:
    """s_w = p_w + p_{w^-1}."""
    w = _require_group_word(alphabet, w, "symmetry_relation")
    return CountingFunction._wrap(alphabet, {w: Fraction(1), inverse(w): Fraction(1)})


def symmetrized_extension(alphabet: Alphabet, w: Sequence[int]) -> CountingFunction:
    """se_w = l_w - r_{w^-1}."""
    w = _require_group_word(alphabet, w, "symmetrized_extension")
    return left_relation(alphabet, w) - right_relation(alphabet, inverse(w))
