"""Exact word-to-integer functions, integrating transducers and residual transducers."""
from respoly.builder import (
    BuildConfig,
    BuildTrace,
    FuelExhausted,
    build_residual_transducer,
    minimality_witness,
    minimality_witness_badexok,
    validate_residual_transducer,
)
from respoly.resorder import (
    OracleUnavailable,
    OrderCtx,
    aperiodicity_probe,
    derivative,
    member_npoly,
    member_nsf,
    member_zpoly,
    res_below,
    res_equiv,
    wqo_probe,
)
from respoly.transducer import (
    HTransducer,
    delta_star,
    eval_closed,
    eval_recursive,
    is_counter_free,
    structurally_equal,
    to_dot,
)
from respoly.words import Alphabet, AlphabetMismatch
from respoly.zseries import (
    Counting,
    LinRep,
    RationalPoly,
    Series,
    UnaryQP,
    UnsupportedVariant,
    Zero,
    add,
    degree,
    evaluate,
    is_eventually_nonneg,
    is_zero,
    negate,
    normalize,
    residual,
    scale,
    subtract,
    unary_to_linrep,
)

__all__ = [
    "add",
    "Alphabet",
    "AlphabetMismatch",
    "aperiodicity_probe",
    "build_residual_transducer",
    "BuildConfig",
    "BuildTrace",
    "Counting",
    "degree",
    "delta_star",
    "derivative",
    "eval_closed",
    "eval_recursive",
    "evaluate",
    "FuelExhausted",
    "HTransducer",
    "is_counter_free",
    "is_eventually_nonneg",
    "is_zero",
    "LinRep",
    "member_npoly",
    "member_nsf",
    "member_zpoly",
    "minimality_witness",
    "minimality_witness_badexok",
    "negate",
    "normalize",
    "OracleUnavailable",
    "OrderCtx",
    "RationalPoly",
    "res_below",
    "res_equiv",
    "residual",
    "scale",
    "Series",
    "structurally_equal",
    "subtract",
    "to_dot",
    "unary_to_linrep",
    "UnaryQP",
    "UnsupportedVariant",
    "validate_residual_transducer",
    "wqo_probe",
    "Zero",
]

__version__ = "0.1.0"
