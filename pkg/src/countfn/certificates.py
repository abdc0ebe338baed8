"""Canonical forms and kernel certificates shared by the canonicalizers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple

from .counting import (
    CountingFunction,
    left_relation,
    right_relation,
    symmetrized_extension,
    symmetry_relation,
)
from .words import Alphabet, Word, word_key


class BasisKind(enum.Enum):
    MONOID = "B"
    GROUP = "Bbar"
    BROOKS = "B_Br"


class RelationKind(enum.Enum):
    L = "L"
    R = "R"
    SYM = "Sym"
    SYM_EXT = "SymExt"


_BUILDERS = {
    RelationKind.L: left_relation,
    RelationKind.R: right_relation,
    RelationKind.SYM: symmetry_relation,
    RelationKind.SYM_EXT: symmetrized_extension,
}

# sup-norm of a single relation; s_w is unbounded as a counting function
_SUP = {RelationKind.L: 1, RelationKind.R: 1, RelationKind.SYM_EXT: 2, RelationKind.SYM: None}


class CertificateItem(NamedTuple):
    coef: Fraction
    kind: RelationKind
    word: Word


class Certificate:
    """A linear combination of kernel relations, kept as (coef, kind, word) items.

    Items with the same (kind, word) are merged as they are recorded and
    items whose coefficient cancels to zero are dropped.
    """

    def __init__(self, items=()):
        self._acc: dict[tuple[RelationKind, Word], Fraction] = {}
        for c, kind, w in items:
            self.add(c, kind, w)

    def add(self, coef, kind: RelationKind, word) -> None:
        key = (RelationKind(kind), Word(word))
        total = self._acc.get(key, 0) + Fraction(coef)
        if total:
            self._acc[key] = total
        else:
            self._acc.pop(key, None)

    @property
    def items(self) -> list[CertificateItem]:
        return [CertificateItem(c, k, w) for (k, w), c in self._acc.items()]

    def sorted_items(self) -> list[CertificateItem]:
        order = list(RelationKind)
        return sorted(self.items, key=lambda it: (order.index(it.kind), word_key(it.word)))

    def __iter__(self) -> Iterator[CertificateItem]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self._acc)

    def __bool__(self) -> bool:
        return bool(self._acc)

    def kinds(self) -> set[RelationKind]:
        return {k for k, _ in self._acc}

    def expand(self, alphabet: Alphabet) -> CountingFunction:
        """Σ coef * relation as a counting function."""
        acc: dict = {}
        for (kind, w), c in self._acc.items():
            for u, x in _BUILDERS[kind](alphabet, w).terms.items():
                total = acc.get(u, 0) + c * x
                if total:
                    acc[u] = total
                else:
                    acc.pop(u, None)
        return CountingFunction._wrap(alphabet, acc)

    def bound(self) -> Fraction | None:
        """Upper bound on the sup-norm of the expansion, None if it is unbounded."""
        total = Fraction(0)
        for (kind, _), c in self._acc.items():
            sup = _SUP[kind]
            if sup is None:
                return None
            total += abs(c) * sup
        return total

    def to_json(self) -> list[dict]:
        return [{"coef": str(c), "kind": k.value, "word": w.text} for c, k, w in self.sorted_items()]

    def __str__(self) -> str:
        parts = []
        for c, k, w in self.sorted_items():
            name = {"L": "l", "R": "r", "Sym": "s", "SymExt": "se"}[k.value]
            parts.append(f"{c}*{name}[{w.text}]")
        return " + ".join(parts) if parts else "(empty)"

    def __repr__(self) -> str:
        return f"Certificate({str(self)})"


# the names used by the canonicalizer modules
KernelCertificate = Certificate
BrooksKernelCertificate = Certificate


@dataclass(frozen=True)
class CanonicalForm:
    """A function whose support lies in one of the basis sets.

    ``trace`` lists the rewrite metric (norm or defect) of each word the
    canonicalizer rewrote, in processing order.
    """

    base: object
    kind: BasisKind
    trace: tuple[int, ...] = field(default=(), compare=False)

    def is_zero(self) -> bool:
        return self.base.is_zero()
