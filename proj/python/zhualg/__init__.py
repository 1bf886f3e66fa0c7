"""Exact-arithmetic checks for twisted product coefficients, binomial
determinant identities, and twisted double algebras.

All rational values cross the boundary as "num/den" strings so nothing is
rounded; mode-indexed coefficient vectors come back as plain dicts.
"""

from ._core import (
    binom,
    classical_product,
    cyclo_str,
    det_closed_form,
    det_rational,
    fixture_summary,
    q_exponents,
    solve_correction,
    specialization_point,
    unified_product,
    verify_congruence,
    verify_det_identity,
)

__all__ = [
    "binom",
    "classical_product",
    "cyclo_str",
    "det_closed_form",
    "det_rational",
    "fixture_summary",
    "q_exponents",
    "solve_correction",
    "specialization_point",
    "unified_product",
    "verify_congruence",
    "verify_det_identity",
]
