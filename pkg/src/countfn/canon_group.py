"""Canonical forms of counting functions on the free group.

Basis words W̄: words with w_1 != a_1, w_1w_2 != a_2a_1^-1, w_fin != a_1^-1 and
w_{fin-1}w_fin != a_1a_2^-1, together with a_1^-1 and without a_2.

Everything else is rewritten by extension relations.  The rewrite measure is
the defect: leading a_1 / a_2a_1^-1 patterns plus trailing a_1a_2^-1 / a_1^-1
patterns.  Each rewrite replaces a word by words of strictly smaller defect
(or by basis words), and the single defect-0 outlier a_2 is removed with a
fixed bounded combination (see :func:`a2_elimination`).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .certificates import BasisKind, CanonicalForm, Certificate, RelationKind
from .counting import CountingFunction
from .words import Alphabet, Word, word_key

A1, A2 = 1, 2
A1_INV, A2_INV = -1, -2


@dataclass(frozen=True)
class DefectProfile:
    k: int
    m: int
    k_prime: int
    m_prime: int

    @property
    def p_norm(self) -> int:
        return self.k + self.m

    @property
    def p_prime_norm(self) -> int:
        return self.k_prime + self.m_prime

    @property
    def defect(self) -> int:
        return self.p_norm + self.p_prime_norm


def defect(w: Word) -> DefectProfile:
    """Greedy prefix/suffix pattern scan.

    Taking the a_1 run maximal is optimal: stopping it early leaves a_1 as the
    next letter, which cannot start a_2a_1^-1, so m would be 0.  The suffix is
    symmetric.  The two scans are independent and may share letters.
    """
    n = len(w)
    k = 0
    while k < n and w[k] == A1:
        k += 1
    i, m = k, 0
    while i + 1 < n and w[i] == A2 and w[i + 1] == A1_INV:
        m += 1
        i += 2
    j, kp = n - 1, 0
    while j >= 0 and w[j] == A1_INV:
        kp += 1
        j -= 1
    mp = 0
    while j >= 1 and w[j - 1] == A1 and w[j] == A2_INV:
        mp += 1
        j -= 2
    return DefectProfile(k, m, kp, mp)


_CONDITIONS = (
    ("w_1 = a_1", lambda w: len(w) >= 1 and w[0] == A1),
    ("w_1 w_2 = a_2 a_1^-1", lambda w: len(w) >= 2 and w[0] == A2 and w[1] == A1_INV),
    ("w_fin = a_1^-1", lambda w: len(w) >= 1 and w[-1] == A1_INV),
    ("w_fin-1 w_fin = a_1 a_2^-1", lambda w: len(w) >= 2 and w[-2] == A1 and w[-1] == A2_INV),
)


def basis_failures_group(w: Word) -> list[str]:
    """Names of the basis conditions w violates (empty iff w is in W̄)."""
    if tuple(w) == (A1_INV,):
        return []
    if tuple(w) == (A2,):
        return ["w = a_2 (excluded)"]
    return [name for name, bad in _CONDITIONS if bad(w)]


def in_basis_group(w: Word) -> bool:
    if tuple(w) == (A1_INV,):
        return True
    if tuple(w) == (A2,):
        return False
    return not any(bad(w) for _, bad in _CONDITIONS)


def in_uncorrected_basis_group(w: Word) -> bool:
    """The earlier basis description (a_2 kept, a_1^-1 missing); linearly dependent."""
    return not any(bad(w) for _, bad in _CONDITIONS)


def a2_elimination(alphabet: Alphabet) -> tuple[CountingFunction, Certificate]:
    """The bounded function

        f = Σ_{s ∉ {a1, a1^-1}} p_s - Σ_{s1 ≠ a1, s2 ∉ {a1^-1, s1^-1}} p_{s1 s2}

    with its decomposition f = Σ_{s ∉ {a1, a1^-1}} l_s + l_{a1} - r_{a1}.
    Every term of f except p_{a2} is a basis word.
    """
    if not alphabet.is_group:
        raise ValueError("a2_elimination needs a group alphabet")
    letters = alphabet.letters
    terms: dict[Word, Fraction] = {}
    cert = Certificate()
    for s in letters:
        if s not in (A1, A1_INV):
            terms[Word((s,))] = Fraction(1)
            cert.add(1, RelationKind.L, Word((s,)))
    for s1 in letters:
        if s1 == A1:
            continue
        for s2 in letters:
            if s2 not in (A1_INV, -s1):
                terms[Word((s1, s2))] = Fraction(-1)
    cert.add(1, RelationKind.L, Word((A1,)))
    cert.add(-1, RelationKind.R, Word((A1,)))
    return CountingFunction._wrap(alphabet, terms), cert


def rewrite_step(alphabet: Alphabet, w: Word) -> tuple[dict[Word, Fraction], RelationKind, Word]:
    """One extension rewrite of a non-basis word other than a_2.

    Returns (replacement, kind, v) meaning p_w = replacement - rel_v, where
    rel is l (kind L) or r (kind R).  Left rules are tried first.
    """
    prof = defect(w)
    if prof.k > 0 or (prof.k_prime == 0 and prof.m > 0):
        # w = a1 v (k > 0) or w = a2 a1^-1 v': peel the first letter
        v = Word(w[1:])
        banned = {w[0]} | ({-v[0]} if v else set())
        repl = {v: Fraction(1)}
        for s in alphabet.letters:
            if s not in banned:
                repl[Word((s, *v))] = Fraction(-1)
        return repl, RelationKind.L, v
    if prof.k_prime > 0 or prof.m_prime > 0:
        v = Word(w[:-1])
        banned = {w[-1]} | ({-v[-1]} if v else set())
        repl = {v: Fraction(1)}
        for s in alphabet.letters:
            if s not in banned:
                repl[Word((*v, s))] = Fraction(-1)
        return repl, RelationKind.R, v
    raise ValueError(f"{w} has defect 0; nothing to rewrite")


def canonicalize_group(f: CountingFunction) -> tuple[CanonicalForm, Certificate]:
    """Rewrite f onto the basis W̄.

    Returns the canonical form and a certificate with
    ``f == base + certificate.expand(alphabet)`` exactly.
    """
    alphabet = f.alphabet
    if not alphabet.is_group:
        raise ValueError("group canonicalization needs a group alphabet")
    if f == CountingFunction.zero(alphabet):
        return CanonicalForm(CountingFunction.zero(alphabet), BasisKind.GROUP), Certificate()
    terms = dict(f.terms)
    cert = Certificate()
    trace: list[int] = []
    heap: list = []
    queued: set[Word] = set()
    a2 = Word((A2,))
    elim = None

    def push(w: Word) -> None:
        if w not in queued and not in_basis_group(w):
            queued.add(w)
            heapq.heappush(heap, (-defect(w).defect, word_key(w), w))

    def add(w: Word, c: Fraction) -> None:
        total = terms.get(w, 0) + c
        if total:
            terms[w] = total
        else:
            terms.pop(w, None)

    for w in terms:
        push(w)

    while heap:
        neg, _, w = heapq.heappop(heap)
        x = terms.pop(w, None)
        if x is None:
            continue
        d = -neg
        trace.append(d)
        if w == a2:
            # p_{a2} = (p_{a2} - f) + f with f bounded
            if elim is None:
                elim = a2_elimination(alphabet)
            ef, ecert = elim
            for u, c in ef.terms.items():
                if u != a2:
                    add(u, -x * c)
            for c, kind, v in ecert:
                cert.add(x * c, kind, v)
            continue
        repl, kind, v = rewrite_step(alphabet, w)
        cert.add(-x, kind, v)
        for u, c in repl.items():
            add(u, x * c)
            if not in_basis_group(u) and defect(u).defect >= d:
                raise RuntimeError(f"rewrite of {w} did not decrease the defect ({u})")
            push(u)

    base = CountingFunction._wrap(alphabet, terms)
    return CanonicalForm(base, BasisKind.GROUP, tuple(trace)), cert


def is_bounded_group(f: CountingFunction) -> bool:
    return canonicalize_group(f)[0].is_zero()


def equivalent_group(f: CountingFunction, g: CountingFunction) -> bool:
    return is_bounded_group(f - g)
