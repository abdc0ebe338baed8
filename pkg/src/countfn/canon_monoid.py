"""Canonical forms of counting functions on the free monoid.

Basis words W: the empty word and every word that neither starts nor ends
with a_1.  Any other p_w is rewritten by a left (or right) extension relation
into words whose boundary a_1-count is strictly smaller, so the rewriting
terminates and the relations used form a certificate for f - canon(f).
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .certificates import BasisKind, CanonicalForm, Certificate, RelationKind
from .counting import CountingFunction
from .words import Word, word_key

A1 = 1


def _require_monoid(f: CountingFunction) -> None:
    if f.alphabet.is_group:
        raise ValueError("monoid canonicalization needs a monoid alphabet")


def _split(w: Word) -> tuple[int, int]:
    """(k, m) with w = a_1^k v a_1^m; a_1^d is split as k=1, m=d-1."""
    k = 0
    while k < len(w) and w[k] == A1:
        k += 1
    if k == len(w):
        return (1, len(w) - 1) if w else (0, 0)
    m = 0
    while w[-1 - m] == A1:
        m += 1
    return k, m


def monoid_norm(w: Word) -> int:
    """Number of a_1 letters in the leading and trailing a_1 runs."""
    return sum(_split(w))


def in_basis_monoid(w: Word) -> bool:
    return not w or (w[0] != A1 and w[-1] != A1)


def canonicalize_monoid(f: CountingFunction) -> tuple[CanonicalForm, Certificate]:
    """Rewrite f onto the basis W.

    Returns the canonical form and a certificate with
    ``f == base + certificate.expand(alphabet)`` exactly.
    """
    _require_monoid(f)
    alphabet = f.alphabet
    if f == CountingFunction.zero(alphabet):
        return CanonicalForm(CountingFunction.zero(alphabet), BasisKind.MONOID), Certificate()
    others = [s for s in alphabet.letters if s != A1]
    terms = dict(f.terms)
    cert = Certificate()
    trace: list[int] = []

    heap: list = []
    queued: set[Word] = set()

    def push(w: Word) -> None:
        if w not in queued and not in_basis_monoid(w):
            queued.add(w)
            heapq.heappush(heap, (-monoid_norm(w), word_key(w), w))

    def add(w: Word, c: Fraction) -> None:
        total = terms.get(w, 0) + c
        if total:
            terms[w] = total
        else:
            terms.pop(w, None)

    for w in terms:
        push(w)

    while heap:
        neg_norm, _, w = heapq.heappop(heap)
        x = terms.pop(w, None)
        if x is None:
            continue
        norm = -neg_norm
        trace.append(norm)
        k, _ = _split(w)
        if k > 0:
            # p_{a1 v} = p_v - Σ_{s≠a1} p_{s v} - l_v
            v = Word(w[1:])
            produced = [v] + [Word((s, *v)) for s in others]
            cert.add(-x, RelationKind.L, v)
        else:
            # p_{v a1} = p_v - Σ_{s≠a1} p_{v s} - r_v
            v = Word(w[:-1])
            produced = [v] + [Word((*v, s)) for s in others]
            cert.add(-x, RelationKind.R, v)
        add(produced[0], x)
        for u in produced[1:]:
            add(u, -x)
        for u in produced:
            if not in_basis_monoid(u) and monoid_norm(u) >= norm:
                raise RuntimeError(f"rewrite of {w} did not decrease the norm ({u})")
            push(u)

    base = CountingFunction._wrap(alphabet, terms)
    return CanonicalForm(base, BasisKind.MONOID, tuple(trace)), cert


def is_bounded_monoid(f: CountingFunction) -> bool:
    return canonicalize_monoid(f)[0].is_zero()


def equivalent_monoid(f: CountingFunction, g: CountingFunction) -> bool:
    return is_bounded_monoid(f - g)
