"""Brooks quasimorphisms phi_w = p_w - p_{w^-1} and their canonical forms.

A :class:`BrooksFunction` stores one key per class {w, w^-1}: the length-lex
smaller member (its *representative*), with phi_{w^-1} = -phi_w folded into
the coefficient.  Distinct keys are linearly independent, so term maps are
unique and equality is plain dictionary equality.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .canon_group import A1, A2, canonicalize_group, in_basis_group
from .certificates import BasisKind, CanonicalForm, Certificate, RelationKind
from .counting import CountingFunction, _frac, format_terms
from .words import EMPTY, Alphabet, Word, inverse, word_key

__all__ = [
    "BrooksFunction",
    "representative",
    "basis_key",
    "in_basis_brooks",
    "sigma1",
    "brooks_to_counting",
    "lift",
    "canonicalize_brooks",
    "canonicalize_sigma",
    "equivalent_brooks",
    "is_bounded_brooks",
]


def representative(w: Sequence[int]) -> Word:
    if not w:
        raise ValueError("the empty word has no Brooks quasimorphism")
    w = Word(w)
    return min(w, inverse(w), key=word_key)


def _in_wbr_prime(w: Word) -> bool:
    return bool(w) and (in_basis_group(w) or tuple(w) in ((A1,), (A2,)))


def basis_key(w: Sequence[int]) -> Word | None:
    """The member of {w, w^-1} used as basis key, or None if the class is not a basis class."""
    w = Word(w)
    if not w:
        return None
    wi = inverse(w)
    fwd, back = _in_wbr_prime(w), _in_wbr_prime(wi)
    if fwd and back:
        return representative(w)
    if fwd:
        return w
    if back:
        return wi
    return None


def in_basis_brooks(w: Sequence[int]) -> bool:
    return bool(w) and basis_key(w) == tuple(w)


def _fold(acc: dict, w: Word, c: Fraction) -> None:
    rep = representative(w)
    if rep != w:
        c = -c
    total = acc.get(rep, 0) + c
    if total:
        acc[rep] = total
    else:
        acc.pop(rep, None)


class BrooksFunction:
    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping | Iterable[tuple[Sequence[int], object]] = ()):
        if not alphabet.is_group:
            raise ValueError("Brooks quasimorphisms live on free groups")
        self.alphabet = alphabet
        acc: dict[Word, Fraction] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in pairs:
            w = alphabet.check(w)
            if not w:
                raise ValueError("phi of the empty word is not allowed")
            _fold(acc, w, _frac(c))
        self._terms = acc

    @classmethod
    def _wrap(cls, alphabet: Alphabet, terms: dict) -> "BrooksFunction":
        self = cls.__new__(cls)
        self.alphabet = alphabet
        self._terms = terms
        return self

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "BrooksFunction":
        return cls._wrap(alphabet, {})

    @classmethod
    def phi(cls, alphabet: Alphabet, w: Sequence[int], coefficient=1) -> "BrooksFunction":
        return cls(alphabet, [(w, coefficient)])

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def coordinates(self) -> list[tuple[Word, Fraction]]:
        """Terms re-keyed by basis key where the class has one (sign adjusted)."""
        out = []
        for w, c in self.items():
            key = basis_key(w)
            if key is not None and key != w:
                out.append((key, -c))
            else:
                out.append((w, c))
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _same(self, other) -> None:
        if not isinstance(other, BrooksFunction):
            raise TypeError(f"expected BrooksFunction, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise ValueError("alphabet mismatch")

    def __add__(self, other: "BrooksFunction") -> "BrooksFunction":
        self._same(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            total = acc.get(w, 0) + c
            if total:
                acc[w] = total
            else:
                acc.pop(w, None)
        return BrooksFunction._wrap(self.alphabet, acc)

    def __neg__(self) -> "BrooksFunction":
        return BrooksFunction._wrap(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "BrooksFunction") -> "BrooksFunction":
        return self + (-other)

    def __mul__(self, c) -> "BrooksFunction":
        c = _frac(c)
        if not c:
            return BrooksFunction.zero(self.alphabet)
        return BrooksFunction._wrap(self.alphabet, {w: c * x for w, x in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BrooksFunction):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    __hash__ = None

    def evaluate(self, v: Sequence[int]) -> Fraction:
        return brooks_to_counting(self).evaluate(v)

    __call__ = evaluate

    def __str__(self) -> str:
        return format_terms(self.items(), "phi")

    def __repr__(self) -> str:
        return f"BrooksFunction({self.alphabet}, {str(self)!r})"


def sigma1(f: CountingFunction) -> BrooksFunction:
    """p_w -> phi_w, extended linearly; p_ε maps to 0."""
    if not f.alphabet.is_group:
        raise ValueError("sigma1 needs a group alphabet")
    acc: dict[Word, Fraction] = {}
    for w, c in f.terms.items():
        if w:
            _fold(acc, w, c)
    return BrooksFunction._wrap(f.alphabet, acc)


def brooks_to_counting(F: BrooksFunction) -> CountingFunction:
    """Expand each phi_w as p_w - p_{w^-1}."""
    acc: dict[Word, Fraction] = {}
    for w, c in F._terms.items():
        acc[w] = c
        acc[inverse(w)] = -c
    return CountingFunction._wrap(F.alphabet, acc)


def lift(F: BrooksFunction) -> CountingFunction:
    """A counting function g with sigma1(g) = F, namely half of the expansion."""
    return brooks_to_counting(F) * Fraction(1, 2)


def canonicalize_brooks(F: BrooksFunction) -> tuple[CanonicalForm, Certificate]:
    """Rewrite F onto the Brooks basis.

    Returns (form, cert) with ``F == form.base + sigma1(cert.expand(alphabet))``
    exactly; all certificate items are symmetrized extensions.  Basis classes
    pass through untouched.
    """
    alphabet = F.alphabet
    kept: dict[Word, Fraction] = {}
    rest: dict[Word, Fraction] = {}
    for w, c in F._terms.items():
        (kept if basis_key(w) is not None else rest)[w] = c
    cert = Certificate()
    trace: tuple[int, ...] = ()
    base = BrooksFunction._wrap(alphabet, kept)
    if rest:
        # h = b + Σ y l_v + Σ z r_u, and sigma1 sends l_v to sigma1(se_v)/2,
        # r_u to -sigma1(se_{u^-1})/2
        form, gcert = canonicalize_group(CountingFunction._wrap(alphabet, rest))
        base = base + sigma1(form.base)
        trace = form.trace
        for c, kind, v in gcert:
            if not v:
                # l_ε = r_ε = 0 as functions, so they contribute nothing
                continue
            if kind is RelationKind.L:
                cert.add(c / 2, RelationKind.SYM_EXT, v)
            else:
                cert.add(-c / 2, RelationKind.SYM_EXT, inverse(v))
    return CanonicalForm(base, BasisKind.BROOKS, trace), cert


def canonicalize_sigma(f: CountingFunction) -> tuple[CanonicalForm, Certificate]:
    """Canonical Brooks class of sigma(f) with a certificate over {s_w, se_w}.

    ``f == lift(form.base) + cert.expand(alphabet)`` exactly, so f lies in
    the kernel of sigma iff the base is zero.
    """
    alphabet = f.alphabet
    form, bcert = canonicalize_brooks(sigma1(f))
    cert = Certificate()
    for w, c in f.terms.items():
        if w == EMPTY:
            # p_ε = Σ_i s_{a_i}
            for i in range(1, alphabet.rank + 1):
                cert.add(c, RelationKind.SYM, Word((i,)))
        else:
            cert.add(c / 2, RelationKind.SYM, representative(w))
    for c, kind, v in bcert:
        cert.add(c, kind, v)
    return form, cert


def is_bounded_brooks(F: BrooksFunction) -> bool:
    return canonicalize_brooks(F)[0].is_zero()


def equivalent_brooks(F: BrooksFunction, G: BrooksFunction) -> bool:
    return is_bounded_brooks(F - G)
