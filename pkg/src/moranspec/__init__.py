"""Exact analysis of orthogonal exponentials for Moran measures with consecutive digits."""
from .exact import multiplicative_order, padic_valuation, perfect_power_decompose
from .freq import Frequency, ZeroWitness, format_frequency, from_zero_form, parse_frequency, subtract, to_real
from .measure import (
    ConfigError,
    ContractionRatio,
    DigitSequence,
    MoranMeasure,
    canonicalize_ratio,
    digit_at,
    load_measure,
    parse_measure_config,
    sup_digit,
)
from .ortho import (
    OrthogonalFamily,
    RegimeClassification,
    check_equal_cardinality_property,
    check_exponent_congruence,
    classify,
    construct_lambda0,
    construct_lambda_star,
    is_bizero_family,
    max_orthogonal_family,
    scan_exponent_congruence,
)
from .zeros import all_witnesses, enumerate_zeros, zero_membership

__version__ = "0.1.0"
