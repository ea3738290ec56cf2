"""p-adic numbers, Gamma_p, its identities, and the ramified ring Z_p[pi]."""

from .eisenstein import EisensteinElem, gross_koblitz_check, zeta_p
from .gamma import frac, floor, gamma_direct, gamma_int, padic_gamma
from .lemmas import (
    floor_identity_check,
    gamma_bridge_check,
    gamma_multiplication_check,
    gamma_reflection_check,
)
from .scalar import PadicScalar, teich_realize, teichmuller

__all__ = [
    "EisensteinElem", "PadicScalar", "floor", "floor_identity_check", "frac", "gamma_bridge_check",
    "gamma_direct", "gamma_int", "gamma_multiplication_check", "gamma_reflection_check",
    "gross_koblitz_check", "padic_gamma", "teich_realize", "teichmuller", "zeta_p",
]
