"""Exact conjugacy machinery for one-bump PL homeomorphisms of [0,1].

The package decides conjugacy of one-bump piecewise-linear
homeomorphisms of the unit interval in exact rational arithmetic and
returns verifiable certificates.  Its pieces:

- plmap: the maps themselves — normal form, evaluation, composition,
  inversion, powers, and classification against the diagonal.
- stair: linearity boxes and the stair construction of the unique
  candidate conjugator with a prescribed initial slope.
- mather: Mather invariants as exact multiplicative germs, and
  rotation-equivalence between them.
- solver: the conjugacy decision with certificates, centralizer
  generators, and n-th roots.
- files, svg, cli: the breakpoint file format, deterministic plots,
  and the command-line front end.
"""

from .errors import (
    ClassMismatch,
    DomainError,
    FunctionFileError,
    InternalConsistencyError,
    InvalidMapError,
    InvalidSlope,
    NotAboveDiagonal,
    NotOneBump,
    OutOfRange,
    PLConjError,
    PrefixMismatch,
    ScaleMismatch,
    SlopeMismatch,
)
from .files import parse_map_file, parse_map_text, serialize_map, write_map_file
from .mather import (
    MatherGerm,
    RotationPair,
    germ_breakpoint_classes,
    germ_eval,
    mather_invariant,
    rotation_equivalent,
    self_rotation_classes,
)
from .plmap import (
    BumpClass,
    BumpKind,
    PLMap,
    classify,
    compose,
    evaluate,
    final_slope,
    identity,
    initial_slope,
    invert,
    power,
)
from .rational import (
    Rat,
    format_rat,
    multiplicative_exponent,
    parse_rat,
    rat,
    rational_nth_root,
)
from .solver import (
    CentralizerDescription,
    Conjugate,
    ConjugacyOutcome,
    NonConjugacyReason,
    NotConjugate,
    are_conjugate,
    centralizer_generator,
    nth_root,
    slope_exponent,
)
from .stair import (
    LinearityBoxes,
    StairParams,
    conjugates_powers,
    conjugator_with_slope,
    identification_step,
    linearity_boxes,
    stair_candidate,
    stair_parameters,
    verify_conjugator,
)
from .svg import plot, render_map_svg

__version__ = "0.1.0"

__all__ = [
    "BumpClass",
    "BumpKind",
    "CentralizerDescription",
    "ClassMismatch",
    "Conjugate",
    "ConjugacyOutcome",
    "DomainError",
    "FunctionFileError",
    "InternalConsistencyError",
    "InvalidMapError",
    "InvalidSlope",
    "LinearityBoxes",
    "MatherGerm",
    "NonConjugacyReason",
    "NotAboveDiagonal",
    "NotConjugate",
    "NotOneBump",
    "OutOfRange",
    "PLConjError",
    "PLMap",
    "PrefixMismatch",
    "Rat",
    "RotationPair",
    "ScaleMismatch",
    "SlopeMismatch",
    "StairParams",
    "are_conjugate",
    "centralizer_generator",
    "classify",
    "compose",
    "conjugates_powers",
    "conjugator_with_slope",
    "evaluate",
    "final_slope",
    "format_rat",
    "germ_breakpoint_classes",
    "germ_eval",
    "identification_step",
    "identity",
    "initial_slope",
    "invert",
    "linearity_boxes",
    "mather_invariant",
    "multiplicative_exponent",
    "nth_root",
    "parse_map_file",
    "parse_map_text",
    "parse_rat",
    "plot",
    "power",
    "rat",
    "rational_nth_root",
    "render_map_svg",
    "rotation_equivalent",
    "self_rotation_classes",
    "serialize_map",
    "slope_exponent",
    "stair_candidate",
    "stair_parameters",
    "verify_conjugator",
    "write_map_file",
]
