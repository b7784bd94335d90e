"""Exact arithmetic for multi-cyclic extensions of F_q(t).

Degrees and Galois groups of radical and root-of-x^p-x extensions,
residue symbols, canonical forms, and exhaustive split-density
measurements, all over exact finite-field arithmetic.
"""

from ._kernels import backend_name
from .artinschreier import (
    ASInstance,
    ASReport,
    InfinitePlace,
    NormalForm,
    RootComboWitness,
    artin_schreier_degree,
    artin_schreier_degree_report,
    artin_schreier_preimage,
    as_normalize,
    classify_infinite_place,
    ramified_finite_primes,
)
from .density import (
    ChebotarevCounts,
    CharacterSumReport,
    CyclotomicInt,
    DensityReport,
    DensityRow,
    SampledDensityEstimate,
    character_sum,
    chebotarev_class_counts,
    sampled_split_density,
    split_density,
)
from .errors import (
    BudgetExceeded,
    NonGeometricExtension,
    ParseError,
    PoleAtPrime,
    RamifiedPrime,
    ReduciblePolynomial,
)
from .field import FieldCtx, FieldElem
from .kummer import (
    KummerInstance,
    KummerReport,
    PowerComboWitness,
    kummer_degree,
    kummer_degree_report,
    mth_power_test,
)
from .polyring import (
    DEFAULT_ENUM_BUDGET,
    Poly,
    PrimePoly,
    RatFunc,
    count_irreducibles,
    factor,
    enumerate_irreducibles,
    monic_by_index,
    is_irreducible,
    partial_fractions,
)
from .symbols import (
    HasseValue,
    SymbolValue,
    hasse_symbol,
    hasse_symbol_power_sum,
    power_residue_symbol,
)
from .syntax import (
    format_elem,
    format_poly,
    format_ratfunc,
    parse_elem,
    parse_elem_list,
    parse_poly,
    parse_ratfunc,
)

__version__ = "0.1.0"

__all__ = [
    "ASInstance",
    "ASReport",
    "BudgetExceeded",
    "ChebotarevCounts",
    "CharacterSumReport",
    "CyclotomicInt",
    "DEFAULT_ENUM_BUDGET",
    "DensityReport",
    "DensityRow",
    "FieldCtx",
    "FieldElem",
    "HasseValue",
    "InfinitePlace",
    "KummerInstance",
    "KummerReport",
    "NonGeometricExtension",
    "NormalForm",
    "ParseError",
    "PoleAtPrime",
    "Poly",
    "PowerComboWitness",
    "PrimePoly",
    "RamifiedPrime",
    "RatFunc",
    "ReduciblePolynomial",
    "RootComboWitness",
    "SampledDensityEstimate",
    "SymbolValue",
    "artin_schreier_degree",
    "artin_schreier_degree_report",
    "artin_schreier_preimage",
    "as_normalize",
    "backend_name",
    "character_sum",
    "chebotarev_class_counts",
    "classify_infinite_place",
    "count_irreducibles",
    "factor",
    "format_elem",
    "format_poly",
    "format_ratfunc",
    "hasse_symbol",
    "hasse_symbol_power_sum",
    "enumerate_irreducibles",
    "monic_by_index",
    "is_irreducible",
    "kummer_degree",
    "kummer_degree_report",
    "mth_power_test",
    "parse_elem",
    "parse_elem_list",
    "parse_poly",
    "parse_ratfunc",
    "partial_fractions",
    "power_residue_symbol",
    "sampled_split_density",
    "split_density",
]
