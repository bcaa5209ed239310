"""Exact arithmetic for classical symmetric functions in superspace.

Superpartitions index everything; polynomials mix commuting variables
x1..xN with anticommuting t1..tN; the four classical bases (monomial,
elementary, complete, power sum) convert into each other exactly over the
rationals and pair under a diagonal scalar product with Cauchy kernels.
"""

from .superpartition import (
    Diagram,
    SparError,
    SuperPartition,
    apply_move,
    bruhat_leq,
    count_check,
    dominance_leq,
    enumerate_superpartitions,
    orders_check,
)
from .superpoly import SuperPolynomial, format_rational, parse_rational
from .bases import (
    basis_element,
    complete,
    complete_tilde,
    default_nvars,
    elementary,
    elementary_tilde,
    generating_check,
    monomial,
    multiplicative,
    powersum,
    powersum_tilde,
)
from .transform import (
    BasisExpansion,
    change_basis,
    determinant_formulas,
    expand_in_monomials,
    mono_product,
    mono_product_fillings,
    triangularity,
    verify_recursions,
)
from .inner import (
    dual_bases_check,
    eh_in_p,
    kernel_check,
    omega,
    omega_sign,
    reproducing_check,
    scalar_product,
    z_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion",
    "Diagram",
    "SparError",
    "SuperPartition",
    "SuperPolynomial",
    "apply_move",
    "basis_element",
    "bruhat_leq",
    "change_basis",
    "complete",
    "complete_tilde",
    "count_check",
    "default_nvars",
    "determinant_formulas",
    "dominance_leq",
    "dual_bases_check",
    "eh_in_p",
    "elementary",
    "elementary_tilde",
    "enumerate_superpartitions",
    "expand_in_monomials",
    "format_rational",
    "generating_check",
    "kernel_check",
    "mono_product",
    "mono_product_fillings",
    "monomial",
    "multiplicative",
    "omega",
    "omega_sign",
    "orders_check",
    "parse_rational",
    "powersum",
    "powersum_tilde",
    "reproducing_check",
    "scalar_product",
    "triangularity",
    "verify_recursions",
    "z_weight",
]
