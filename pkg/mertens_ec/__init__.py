"""Exact Mertens sums for elliptic curves over finite fields."""
from .errors import (
    ConsistencyError,
    DoubleZero,
    FieldTooLarge,
    HasseViolation,
    Inadmissible,
    MertensError,
    NotPeriodic,
    SingularCurve,
)
from .finite_field import FieldElement, FiniteField, PrimePower, make_field
from .isogeny import CaseTag, IsogenyClass, WaterhouseCase, admissible_traces, classify, frobenius_angle
from .mertens import (
    RatioProfile,
    Verdict,
    conjecture_check_exact,
    conjecture_scan,
    limsup_ratio,
    residue_table,
    sweep,
    verdict,
    witness_search,
)
from .mobius import (
    MertensTrajectory,
    MobiusSeries,
    amplitude_and_phase,
    closed_form_ratio,
    mertens_sums,
    mobius_coefficients,
)
from .surd import Surd
from .zeta import ExtensionCounts, LPolynomial, extension_counts, l_polynomial

__version__ = "1.0.0"

__all__ = [
    "admissible_traces",
    "amplitude_and_phase",
    "CaseTag",
    "classify",
    "closed_form_ratio",
    "conjecture_check_exact",
    "conjecture_scan",
    "ConsistencyError",
    "DoubleZero",
    "ExtensionCounts",
    "extension_counts",
    "FieldElement",
    "FieldTooLarge",
    "FiniteField",
    "frobenius_angle",
    "HasseViolation",
    "Inadmissible",
    "IsogenyClass",
    "limsup_ratio",
    "LPolynomial",
    "l_polynomial",
    "make_field",
    "MertensError",
    "MertensTrajectory",
    "mertens_sums",
    "MobiusSeries",
    "mobius_coefficients",
    "NotPeriodic",
    "PrimePower",
    "RatioProfile",
    "residue_table",
    "SingularCurve",
    "Surd",
    "sweep",
    "Verdict",
    "verdict",
    "WaterhouseCase",
    "witness_search",
]
