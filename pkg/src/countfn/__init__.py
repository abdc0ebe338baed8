"""Exact counting functions on free monoids and free groups.

Canonical forms with kernel certificates, bounded-equivalence decisions,
Brooks quasimorphisms and unboundedness witnesses.
"""

from .brooks import (
    BrooksFunction,
    brooks_to_counting,
    canonicalize_brooks,
    canonicalize_sigma,
    equivalent_brooks,
    in_basis_brooks,
    is_bounded_brooks,
    sigma1,
)
from .canon_group import (
    DefectProfile,
    a2_elimination,
    canonicalize_group,
    defect,
    equivalent_group,
    in_basis_group,
    is_bounded_group,
)
from .canon_monoid import canonicalize_monoid, equivalent_monoid, in_basis_monoid, is_bounded_monoid
from .certificates import BasisKind, CanonicalForm, Certificate, CertificateItem, RelationKind
from .counting import (
    CountingFunction,
    elementary,
    left_relation,
    right_relation,
    symmetrized_extension,
    symmetry_relation,
)
from .errors import (
    BoundedFunction,
    CountfnError,
    InverseInMonoid,
    LetterOutOfRank,
    NonCyclicallyReduced,
    NoWitnessFound,
    ParseError,
    PhiEpsilon,
    UnreducedWord,
)
from .oracle import WitnessFamily, enumerate_words, sup_norm_estimate, witness
from .parsing import parse_expression
from .words import EMPTY, Alphabet, Mode, Word, delta1, deltafin, inverse, occurrences, parse_word

__version__ = "0.1.0"

__all__ = [
    "BrooksFunction",
    "brooks_to_counting",
    "canonicalize_brooks",
    "canonicalize_sigma",
    "equivalent_brooks",
    "in_basis_brooks",
    "is_bounded_brooks",
    "sigma1",
    "DefectProfile",
    "a2_elimination",
    "canonicalize_group",
    "defect",
    "equivalent_group",
    "in_basis_group",
    "is_bounded_group",
    "canonicalize_monoid",
    "equivalent_monoid",
    "in_basis_monoid",
    "is_bounded_monoid",
    "BasisKind",
    "CanonicalForm",
    "Certificate",
    "CertificateItem",
    "RelationKind",
    "CountingFunction",
    "elementary",
    "left_relation",
    "right_relation",
    "symmetrized_extension",
    "symmetry_relation",
    "BoundedFunction",
    "CountfnError",
    "InverseInMonoid",
    "LetterOutOfRank",
    "NonCyclicallyReduced",
    "NoWitnessFound",
    "ParseError",
    "PhiEpsilon",
    "UnreducedWord",
    "WitnessFamily",
    "enumerate_words",
    "sup_norm_estimate",
    "witness",
    "parse_expression",
    "EMPTY",
    "Alphabet",
    "Mode",
    "Word",
    "delta1",
    "deltafin",
    "inverse",
    "occurrences",
    "parse_word",
]
