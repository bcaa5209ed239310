"""Scalar product, the e-h involution, duality, and kernel checks."""

import random
from fractions import Fraction

import pytest

from supersym.superpartition import SuperPartition, enumerate_superpartitions
from supersym.bases import basis_element, powersum
from supersym.transform import BasisExpansion, change_basis
from supersym.inner import (
    dual_bases_check,
    eh_in_p,
    kernel_check,
    omega,
    omega_sign,
    reproducing_check,
    scalar_product,
    z_weight,
)


def sp(text):
    return SuperPartition.parse(text)


def unit(basis, text):
    return BasisExpansion.unit(basis, sp(text))


# -- weights -------------------------------------------------------------------


def test_z_weight_values():
    assert z_weight(sp("(;2)")) == 2
    assert z_weight(sp("(;1,1)")) == 2
    assert z_weight(sp("(;3,2,2,1)")) == 3 * (2 * 2 * 2) * 1
    # depends only on the symmetric side
    assert z_weight(sp("(3,0;2,1)")) == z_weight(sp("(;2,1)"))
    assert z_weight(sp("(1,0;)")) == 1


def test_omega_sign_values():
    assert omega_sign(sp("(3,0;1)")) == -1
    assert omega_sign(sp("(;)")) == 1
    assert omega_sign(sp("(;2)")) == -1
    assert omega_sign(sp("(;1,1)")) == 1
    assert omega_sign(sp("(0;)")) == 1


# -- scalar product ---------------------------------------------------------------


def test_power_sum_norms():
    assert scalar_product(unit("p", "(;2)"), unit("p", "(;2)")) == 2
    assert scalar_product(unit("p", "(1;)"), unit("p", "(1;)")) == 1
    assert scalar_product(unit("p", "(1;)"), unit("p", "(0;1)")) == 0


def test_power_sums_are_orthogonal_with_z_norms():
    for n in range(5):
        for m in range(3):
            if n < m * (m - 1) // 2:
                continue
            block = enumerate_superpartitions(n, m)
            for x in block:
                for y in block:
                    want = z_weight(x) if x == y else 0
                    assert scalar_product(
                        BasisExpansion.unit("p", x), BasisExpansion.unit("p", y)
                    ) == want


def test_scalar_product_accepts_polynomials():
    f = powersum(2, 4)
    assert scalar_product(f, f) == 2


def test_mixed_bidegrees_pair_to_zero():
    assert scalar_product(unit("p", "(;2)"), unit("p", "(;1)")) == 0
    assert scalar_product(unit("p", "(0;1)"), unit("p", "(;1)")) == 0


def random_expansion(rng, basis, n, m):
    block = enumerate_superpartitions(n, m)
    coeffs = {la: Fraction(rng.randrange(-4, 5)) for la in block}
    return BasisExpansion(basis, n, m, coeffs)


def test_symmetry_positivity_isometry():
    rng = random.Random(91)
    for n in range(4):
        for m in range(3):
            if n < m * (m - 1) // 2 or not enumerate_superpartitions(n, m):
                continue
            for _ in range(6):
                f = random_expansion(rng, "m", n, m)
                g = random_expansion(rng, "m", n, m)
                fg = scalar_product(f, g)
                assert fg == scalar_product(g, f)
                assert scalar_product(omega(f), omega(g)) == fg
                if f.coeffs:
                    assert scalar_product(f, f) > 0


# -- involution --------------------------------------------------------------------


def test_omega_on_power_sum_is_a_sign():
    x = omega(unit("p", "(3,0;1)"))
    assert x == unit("p", "(3,0;1)").scale(-1)


def test_omega_squares_to_identity():
    for n in range(4):
        for m in range(3):
            if n < m * (m - 1) // 2:
                continue
            for la in enumerate_superpartitions(n, m):
                for basis in ("e", "h", "m", "p"):
                    x = BasisExpansion.unit(basis, la)
                    assert omega(omega(x)) == x, (basis, la)


def test_omega_swaps_elementary_and_complete_small():
    la = sp("(1,0;2)")
    assert change_basis(omega(unit("e", "(1,0;2)")), "h") == BasisExpansion.unit("h", la)
    assert change_basis(omega(unit("h", "(1,0;2)")), "e") == BasisExpansion.unit("e", la)


# -- closed-form p-expansions ---------------------------------------------------------


def test_complete_in_power_sums_closed_form():
    x = eh_in_p(2, False, "h")
    assert x == BasisExpansion(
        "p", 2, 0, {sp("(;2)"): Fraction(1, 2), sp("(;1,1)"): Fraction(1, 2)}
    )


def test_fermionic_zero_cases():
    assert eh_in_p(0, True, "e") == BasisExpansion.unit("p", sp("(0;)"))
    assert eh_in_p(0, True, "h") == BasisExpansion.unit("p", sp("(0;)"))


def test_closed_forms_match_conversion():
    for n in range(5):
        for fermionic in (False, True):
            for which in ("e", "h"):
                if n == 0 and not fermionic:
                    continue
                la = SuperPartition(a=(n,), s=()) if fermionic else SuperPartition(a=(), s=(n,))
                direct = change_basis(BasisExpansion.unit(which, la), "p")
                closed = eh_in_p(n, fermionic, which)
                assert direct == closed, (n, fermionic, which)


def test_fermionic_complete_weights_are_inverse_z():
    x = eh_in_p(2, True, "h")
    for la, c in x.coeffs.items():
        assert c == Fraction(1, z_weight(la))
    assert set(x.coeffs) == set(enumerate_superpartitions(2, 1))


# -- duality -----------------------------------------------------------------------


def test_dual_bases_examples():
    assert dual_bases_check(3, 1, "h", "m") is True
    assert dual_bases_check(2, 0, "p", "p") is False
    assert dual_bases_check(3, 2, "p", "p/z") is True
    assert dual_bases_check(2, 1, "m", "m") is False


def test_complete_monomial_duality_blocks():
    for n in range(5):
        for m in range(3):
            if n < m * (m - 1) // 2 or not enumerate_superpartitions(n, m):
                continue
            assert dual_bases_check(n, m, "h", "m") is True, (n, m)


def test_dual_bases_check_validates_names():
    with pytest.raises(ValueError):
        dual_bases_check(2, 0, "h", "q")


# -- kernels -----------------------------------------------------------------------


def test_kernel_degree_zero():
    rep = kernel_check(2, 0)
    assert rep["pass"] is True, rep


def test_kernel_small():
    rep = kernel_check(3, 2)
    assert rep["pass"] is True, rep
    assert rep["first_failure"] is None


def test_reproducing_small():
    rep = reproducing_check(4, 2)
    assert rep["pass"] is True, rep


# -- the big worked involution example, kept last for cache reuse ---------------------


def test_omega_swaps_e_and_h_on_large_block():
    la = sp("(3,0;4,1)")
    got = change_basis(omega(BasisExpansion.unit("e", la)), "h")
    assert got == BasisExpansion.unit("h", la)
