"""Laguerre-Fock quantization: kernels, Toeplitz operators, Berezin transforms."""

from ._lfock import (
    QuantParams,
    asym_coeff,
    bessel_i,
    berezin,
    classify,
    eval_poly,
    fock_kernel,
    gauss_rule,
    hermite_kernel,
    laguerre_kernel,
    legendre_kernel,
    monomial_norm,
    q_operator,
    squeeze_check,
    suites,
    toeplitz_matrix,
    verify,
)

__all__ = [
    "QuantParams",
    "asym_coeff",
    "bessel_i",
    "berezin",
    "classify",
    "eval_poly",
    "fock_kernel",
    "gauss_rule",
    "hermite_kernel",
    "laguerre_kernel",
    "legendre_kernel",
    "monomial_norm",
    "q_operator",
    "squeeze_check",
    "suites",
    "toeplitz_matrix",
    "verify",
]
