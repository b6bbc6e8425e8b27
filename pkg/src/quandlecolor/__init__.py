"""Quandle colorings of surface braids given by chart braid-word presentations."""

from .braid import BraidParseError, BraidWord, GeneratorImage, act, act_evaluated, parse_braid, word
from .kernels import BACKEND
from .presentation import (
    ColoringReport,
    Presentation,
    PresentationError,
    ProfileViolation,
    Relation,
    chart_T,
    chart_T0,
    chart_T_star,
    check_relation,
    coloring_profile,
    count_colorings,
    load_presentation,
)
from .quandle import (
    AxiomError,
    FiniteQuandle,
    QuandleError,
    is_homomorphism,
    load_quandle,
    make_q_n,
    quandle_inv_op,
    quandle_op,
    shift_map,
    validate,
)
from .terms import Generator, InvOp, Op, Term, evaluate, render, term_size

__version__ = "0.1.0"

__all__ = [
    "AxiomError", "BACKEND", "BraidParseError", "BraidWord", "ColoringReport",
    "FiniteQuandle", "Generator", "GeneratorImage", "InvOp", "Op", "Presentation",
    "PresentationError", "ProfileViolation", "QuandleError", "Relation", "Term",
    "act", "act_evaluated", "chart_T", "chart_T0", "chart_T_star", "check_relation",
    "coloring_profile", "count_colorings", "evaluate", "is_homomorphism",
    "load_presentation", "load_quandle", "make_q_n", "parse_braid", "quandle_inv_op",
    "quandle_op", "render", "shift_map", "term_size", "validate", "word",
]
