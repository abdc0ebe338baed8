"""Text grammar for counting and Brooks expressions.

    expr  := '0' | [sign] term (sign term)*
    term  := [coef '*'] atom
    coef  := integer | integer '/' integer
    atom  := 'p[' word ']' | 'phi[' word ']'

Words use the letter syntax of :mod:`countfn.words`.  ``p[]`` is p_ε.
"""

from __future__ import annotations

from fractions import Fraction

from .brooks import BrooksFunction
from .counting import CountingFunction
from .errors import ParseError, PhiEpsilon
from .words import Alphabet, Mode, parse_word

MODES = ("monoid", "group", "brooks")


def alphabet_for(mode: str, rank: int) -> Alphabet:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    return Alphabet(rank, Mode.MONOID if mode == "monoid" else Mode.GROUP)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def error(self, message: str, pos: int | None = None, cls=ParseError) -> ParseError:
        return cls(message, self.text, self.pos if pos is None else pos)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def expect(self, token: str) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)


def _coefficient(sc: _Scanner) -> Fraction:
    if not sc.peek().isdigit():
        return Fraction(1)
    num = sc.integer()
    den = 1
    if sc.peek() == "/":
        sc.pos += 1
        where = sc.pos
        den = sc.integer()
        if den == 0:
            raise sc.error("zero denominator", where)
    sc.expect("*")
    return Fraction(num, den)


def _atom(sc: _Scanner, alphabet: Alphabet, want: str):
    sc.skip()
    start = sc.pos
    if sc.text.startswith("phi[", sc.pos):
        name = "phi"
    elif sc.text.startswith("p[", sc.pos):
        name = "p"
    else:
        raise sc.error("expected p[...] or phi[...]")
    if name != want:
        hint = "use --mode brooks for phi[...] terms" if name == "phi" else "brooks mode only accepts phi[...] terms"
        raise sc.error(f"{name}[...] not allowed here; {hint}", start)
    sc.pos += len(name) + 1
    close = sc.text.find("]", sc.pos)
    if close < 0:
        raise sc.error("missing ']'", start)
    word = parse_word(sc.text[sc.pos : close], alphabet, offset=sc.pos, source=sc.text)
    if name == "phi" and not word:
        raise sc.error("phi of the empty word is identically zero and not allowed", start, PhiEpsilon)
    sc.pos = close + 1
    return word


def parse_expression(text: str, mode: str, rank: int) -> CountingFunction | BrooksFunction:
    """Parse an expression into an exact counting (or, in brooks mode, Brooks) function."""
    alphabet = alphabet_for(mode, rank)
    want = "phi" if mode == "brooks" else "p"
    cls = BrooksFunction if mode == "brooks" else CountingFunction
    sc = _Scanner(text)
    if sc.at_end():
        raise sc.error("empty expression")
    if sc.text.strip() == "0":
        return cls.zero(alphabet)

    terms = []
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    while True:
        coef = _coefficient(sc)
        word = _atom(sc, alphabet, want)
        terms.append((word, sign * coef))
        if sc.at_end():
            break
        op = sc.peek()
        if op not in "+-":
            raise sc.error(f"unexpected {op!r}")
        sign = -1 if op == "-" else 1
        sc.pos += 1
        if sc.at_end():
            raise sc.error("dangling operator", sc.pos - 1)
    return cls(alphabet, terms)
