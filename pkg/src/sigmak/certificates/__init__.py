"""Interval-arithmetic certificates for the eps = 1/2 volume inequality."""

from .backup import verify_direct_sum
from .engine import FAIL, PASS, Certificate, ScalarCheck, prove
from .lemmas import (
    LEMMA_IDS,
    verify_arcsin_cubic,
    verify_EFG,
    verify_H_large,
    verify_I1_small,
    verify_lemma,
    verify_sum_small,
    verify_theorem_eps_half,
)

__all__ = [
    "PASS",
    "FAIL",
    "LEMMA_IDS",
    "Certificate",
    "ScalarCheck",
    "prove",
    "verify_arcsin_cubic",
    "verify_I1_small",
    "verify_EFG",
    "verify_sum_small",
    "verify_H_large",
    "verify_direct_sum",
    "verify_theorem_eps_half",
    "verify_lemma",
]
