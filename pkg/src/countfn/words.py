"""Words over a finite alphabet: free-monoid words and reduced free-group words.

A letter is a nonzero int: ``i`` stands for the generator a_i and ``-i`` for
its inverse.  A :class:`Word` is an immutable tuple of letters.  Words do not
carry their alphabet around; the :class:`Alphabet` is the context that knows
the rank and whether inverses are allowed, and it owns the operations whose
result depends on the mode (reduction, concatenation, powers).

Text form: ``a``..``z`` are a_1..a_26, upper case is the inverse, and ``1`` or
the empty string is the empty word.  Ranks above 26 use the numeric escape
``<1.2.-1>`` (dot separated signed indices).
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InverseInMonoid, LetterOutOfRank, NonCyclicallyReduced, ParseError, UnreducedWord

__all__ = [
    "Mode",
    "Alphabet",
    "Word",
    "EMPTY",
    "letter_key",
    "word_key",
    "length",
    "inverse",
    "occurrences",
    "delta1",
    "deltafin",
    "is_reduced",
    "parse_word",
]


class Mode(enum.Enum):
    MONOID = "monoid"
    GROUP = "group"


def letter_key(x: int) -> tuple[int, bool]:
    # a < A < b < B < ...
    return (abs(x), x < 0)


def letter_text(x: int) -> str:
    ch = string.ascii_lowercase[abs(x) - 1]
    return ch if x > 0 else ch.upper()


class Word(tuple):
    """An immutable sequence of signed letters.

    Slicing gives back a plain tuple, which hashes and compares equal to the
    corresponding Word, so slices can be used directly as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    @property
    def first(self) -> int:
        return self[0]

    @property
    def last(self) -> int:
        return self[-1]

    @property
    def text(self) -> str:
        """Text form, with the empty word rendered as ``""``."""
        if not self:
            return ""
        if max(abs(x) for x in self) > 26:
            return "<" + ".".join(str(x) for x in self) + ">"
        return "".join(letter_text(x) for x in self)

    def __str__(self) -> str:
        return self.text or "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY = Word()


def word_key(w: Sequence[int]) -> tuple:
    """Length-lex sort key with a_i < a_i^{-1} < a_{i+1}."""
    return (len(w), tuple(letter_key(x) for x in w))


def length(w: Word) -> int:
    return len(w)


def is_reduced(seq: Sequence[int]) -> bool:
    return all(seq[i] != -seq[i + 1] for i in range(len(seq) - 1))


def _free_reduce(seq: Iterable[int]) -> Word:
    stack: list[int] = []
    for x in seq:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(stack)


def inverse(w: Sequence[int]) -> Word:
    return Word(-x for x in reversed(w))


def occurrences(v: Sequence[int], w: Sequence[int]) -> int:
    """p_v(w): the number of (possibly overlapping) occurrences of v in w."""
    m = len(v)
    if m == 0:
        return len(w)
    v = tuple(v)
    return sum(1 for i in range(len(w) - m + 1) if tuple(w[i : i + m]) == v)


def delta1(v: Sequence[int], w: Sequence[int]) -> int:
    """1 if v is a prefix of w, else 0."""
    return int(len(v) <= len(w) and tuple(w[: len(v)]) == tuple(v))


def deltafin(v: Sequence[int], w: Sequence[int]) -> int:
    """1 if v is a suffix of w, else 0."""
    return int(len(v) <= len(w) and tuple(w[len(w) - len(v) :]) == tuple(v))


@dataclass(frozen=True)
class Alphabet:
    """The generators a_1..a_n, with or without inverses."""

    rank: int
    mode: Mode = Mode.GROUP

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 2:
            raise ValueError(f"rank must be an integer >= 2, got {self.rank!r}")
        if not isinstance(self.mode, Mode):
            object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def is_group(self) -> bool:
        return self.mode is Mode.GROUP

    @property
    def letters(self) -> tuple[int, ...]:
        """All letters in the fixed order a, A, b, B, ... (group) or a, b, ... (monoid)."""
        if self.is_group:
            return tuple(x for i in range(1, self.rank + 1) for x in (i, -i))
        return tuple(range(1, self.rank + 1))

    def __str__(self) -> str:
        return f"{self.mode.value}(rank={self.rank})"

    def contains(self, w: Sequence[int]) -> bool:
        for x in w:
            if x == 0 or abs(x) > self.rank or (x < 0 and not self.is_group):
                return False
        return not self.is_group or is_reduced(w)

    def check(self, w: Sequence[int]) -> Word:
        """Return ``w`` as a Word, raising ValueError if it is not a word of this alphabet."""
        if not self.contains(w):
            raise ValueError(f"{Word(w)!s} is not a {'reduced ' if self.is_group else ''}word of {self}")
        return w if isinstance(w, Word) else Word(w)

    def reduce(self, seq: Iterable[int]) -> Word:
        """Free reduction in group mode; the identity in monoid mode."""
        if self.is_group:
            return _free_reduce(seq)
        return Word(seq)

    def concat(self, u: Sequence[int], v: Sequence[int]) -> Word:
        if self.is_group:
            return _free_reduce((*u, *v))
        return Word((*u, *v))

    def power(self, w: Sequence[int], k: int) -> Word:
        if k < 0:
            raise ValueError("power exponent must be non-negative")
        if self.is_group and k >= 2 and w and w[0] == -w[-1]:
            raise NonCyclicallyReduced(f"{Word(w)!s}: first letter is the inverse of the last")
        return Word(tuple(w) * k)

    def word(self, text: str) -> Word:
        return parse_word(text, self)


def parse_word(text: str, alphabet: Alphabet, offset: int = 0, source: str | None = None) -> Word:
    """Parse the text form of a word.

    ``offset``/``source`` let callers embedding a word inside a larger
    expression get error positions relative to the whole expression.
    """
    source = text if source is None else source
    stripped = text.strip()
    if stripped in ("", "1"):
        return EMPTY
    lead = offset + text.index(stripped[0])
    letters: list[int] = []
    positions: list[int] = []
    if stripped.startswith("<"):
        if not stripped.endswith(">"):
            raise ParseError("unterminated numeric word escape", source, lead)
        body = stripped[1:-1]
        pos = lead + 1
        for part in body.split("."):
            try:
                x = int(part)
            except ValueError:
                raise ParseError(f"bad letter index {part!r}", source, pos) from None
            if x == 0:
                raise ParseError("letter index 0", source, pos)
            letters.append(x)
            positions.append(pos)
            pos += len(part) + 1
    else:
        for i, ch in enumerate(stripped):
            if ch not in string.ascii_letters:
                raise ParseError(f"unexpected character {ch!r} in word", source, lead + i)
            idx = string.ascii_lowercase.index(ch.lower()) + 1
            letters.append(idx if ch.islower() else -idx)
            positions.append(lead + i)
    for x, pos in zip(letters, positions):
        if abs(x) > alphabet.rank:
            raise LetterOutOfRank(f"letter {letter_text(x) if abs(x) <= 26 else x} exceeds rank {alphabet.rank}", source, pos)
        if x < 0 and not alphabet.is_group:
            raise InverseInMonoid("inverse letters are not allowed in monoid mode", source, pos)
    if alphabet.is_group:
        for i in range(len(letters) - 1):
            if letters[i] == -letters[i + 1]:
                raise UnreducedWord("word is not reduced", source, positions[i])
    return Word(letters)
