"""Exact HOMFLY-PT polynomials of oriented links, their coefficient
polynomials, and exact verifiers for the identities relating them."""

from .laurent import BivarLaurent, NotDivisible, PoleAtZero, T, UnivarLaurentT, Z
from .links import (
    OVER,
    UNDER,
    BraidWord,
    DiagramError,
    EmptySelection,
    GeneratorOutOfRange,
    LinkDiagram,
    OddCrossingParity,
    ParseError,
    UnknownCrossing,
    close_braid,
    parse_braid,
)
from .skein import (
    DEFAULT_MAX_NODES,
    CoeffTable,
    ResourceLimitExceeded,
    SkeinEngine,
    coeff_table,
    descending_value,
    framed_homfly,
    framed_homfly_bruteforce,
    homfly,
    is_descending,
)
from .combinatorics import (
    InvalidRange,
    aut_order,
    multiplicities,
    ordered_decompositions,
    partitions,
    set_partitions,
    surjection_count,
    surjection_count_enumerated,
    surjection_count_partition_form,
    verify_lemma,
    verify_partition_identity,
)
from .identities import (
    FValue,
    GOutOfRange,
    NotInterComponent,
    f_coefficients,
    intermediate_F,
    verify_prop31,
    verify_skein_F,
    verify_split_F,
    verify_thm13,
    verify_thm14,
    verify_thm15,
)
from .report import VerificationReport
from .rng import SplitMix64, random_braid
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "BivarLaurent",
    "UnivarLaurentT",
    "NotDivisible",
    "PoleAtZero",
    "Z",
    "T",
    "OVER",
    "UNDER",
    "BraidWord",
    "LinkDiagram",
    "parse_braid",
    "close_braid",
    "DiagramError",
    "UnknownCrossing",
    "OddCrossingParity",
    "EmptySelection",
    "ParseError",
    "GeneratorOutOfRange",
    "DEFAULT_MAX_NODES",
    "ResourceLimitExceeded",
    "SkeinEngine",
    "CoeffTable",
    "is_descending",
    "descending_value",
    "framed_homfly",
    "framed_homfly_bruteforce",
    "coeff_table",
    "homfly",
    "InvalidRange",
    "partitions",
    "multiplicities",
    "aut_order",
    "set_partitions",
    "ordered_decompositions",
    "surjection_count",
    "surjection_count_enumerated",
    "surjection_count_partition_form",
    "verify_lemma",
    "verify_partition_identity",
    "FValue",
    "NotInterComponent",
    "GOutOfRange",
    "intermediate_F",
    "f_coefficients",
    "verify_prop31",
    "verify_thm13",
    "verify_thm14",
    "verify_thm15",
    "verify_skein_F",
    "verify_split_F",
    "VerificationReport",
    "SplitMix64",
    "random_braid",
    "catalog",
]
