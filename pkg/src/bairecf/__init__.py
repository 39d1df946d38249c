"""Exact continued-fraction words, sequence spaces, and finite ultrametrics.

The package keeps every computation in integer or Fraction arithmetic: digit
expansions of rationals and quadratic surds, the rational interval family the
words index, first-difference distances on integer sequence spaces, and a
finite-space pipeline from metric tables to refining covers, ultrametrics,
and digit-stream embeddings.
"""

from .baire import (
    WHOLE_SPACE,
    Baire2Prefix,
    BairePrefix,
    Distance,
    InsufficientPrecisionError,
    baire_distance,
    cylinder_of_ball,
    first_difference,
    format_point,
    parse_point,
    psi_inverse,
    psi_map,
)
from .cf import (
    CFWord,
    convergents,
    evaluate,
    evaluate_with_tail,
    expand_rational,
    expand_surd,
    format_cf,
    parse_cf,
)
from .cover import (
    CoverMember,
    CoverReport,
    IntervalQ,
    children,
    interval_of,
    locate,
    member_of,
    verify_cover_properties,
)
from .homeo import (
    BallImageCheck,
    PhiApproximation,
    check_ball_image,
    phi_forward,
    phi_inverse,
)
from .rational import Rational, euclid_div, format_rational, parse_rational
from .report import PropertyCheck
from .surd import Ordering, QuadraticSurd, format_surd, parse_surd
from .ultra import (
    BallPropertiesReport,
    BaseEqualityReport,
    CoverSequence,
    DistanceTable,
    FiniteSpace,
    UltrametricReport,
    UnseparatedPairError,
    build_cover_sequence,
    covers_from_json,
    disjointify,
    sierpinski_embed,
    table_from_json,
    ultrametric_from_covers,
    verify_ball_properties,
    verify_base_equality,
    verify_ultrametric,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Rational",
    "euclid_div",
    "parse_rational",
    "format_rational",
    "Ordering",
    "QuadraticSurd",
    "parse_surd",
    "format_surd",
    "CFWord",
    "expand_rational",
    "evaluate",
    "evaluate_with_tail",
    "convergents",
    "expand_surd",
    "parse_cf",
    "format_cf",
    "BairePrefix",
    "Baire2Prefix",
    "Distance",
    "InsufficientPrecisionError",
    "first_difference",
    "baire_distance",
    "cylinder_of_ball",
    "WHOLE_SPACE",
    "psi_map",
    "psi_inverse",
    "parse_point",
    "format_point",
    "IntervalQ",
    "CoverMember",
    "CoverReport",
    "interval_of",
    "member_of",
    "children",
    "locate",
    "verify_cover_properties",
    "PhiApproximation",
    "BallImageCheck",
    "phi_forward",
    "phi_inverse",
    "check_ball_image",
    "PropertyCheck",
    "DistanceTable",
    "FiniteSpace",
    "UnseparatedPairError",
    "CoverSequence",
    "UltrametricReport",
    "BallPropertiesReport",
    "BaseEqualityReport",
    "disjointify",
    "build_cover_sequence",
    "ultrametric_from_covers",
    "verify_ultrametric",
    "verify_ball_properties",
    "verify_base_equality",
    "sierpinski_embed",
    "table_from_json",
    "covers_from_json",
]
