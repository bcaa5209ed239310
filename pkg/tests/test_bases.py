"""The four classical families and their generating series."""

import pytest

from supersym.superpartition import SuperPartition, enumerate_superpartitions
from supersym.superpoly import SuperPolynomial
from supersym.bases import (
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

P = SuperPolynomial


def sp(text):
    return SuperPartition.parse(text)


# -- monomial -----------------------------------------------------------------


def test_monomial_small_cases():
    assert monomial(sp("(;1,1)"), 2) == P.term(2, 1, {1: 1, 2: 1})
    assert monomial(sp("(0;)"), 2) == P.theta(1, 2) + P.theta(2, 2)
    assert monomial(sp("(1,0;)"), 2) == P.term(2, 1, {1: 1}, thetas=(1, 2)) + P.term(
        2, -1, {2: 1}, thetas=(1, 2)
    )


def test_monomial_leading_coefficient_is_one():
    for n in range(5):
        for m in range(3):
            if n < m * (m - 1) // 2:
                continue
            for la in enumerate_superpartitions(n, m):
                f = monomial(la, n + m)
                powers = {i + 1: v for i, v in enumerate(la.as_composition()) if v}
                assert f.coefficient(powers, thetas=tuple(range(1, m + 1))) == 1
                assert f.is_symmetric()


def test_monomial_needs_enough_variables():
    with pytest.raises(ValueError):
        monomial(sp("(;1,1,1)"), 2)
    assert monomial(sp("(;1,1,1)"), 2, strict=False).is_zero()


def test_default_variable_count():
    assert default_nvars(sp("(2,0;1)")) == 5


# -- single generators ----------------------------------------------------------


def test_elementary_oracles():
    x1, x2, x3 = (P.x(i, 3) for i in (1, 2, 3))
    assert elementary(2, 3) == x1 * x2 + x1 * x3 + x2 * x3
    assert elementary(0, 3) == P.one(3)
    assert elementary_tilde(1, 2) == P.term(2, 1, {2: 1}, thetas=(1,)) + P.term(
        2, 1, {1: 1}, thetas=(2,)
    )
    want = (
        P.term(3, 1, {2: 1, 3: 1}, thetas=(1,))
        + P.term(3, 1, {1: 1, 3: 1}, thetas=(2,))
        + P.term(3, 1, {1: 1, 2: 1}, thetas=(3,))
    )
    assert elementary_tilde(2, 3) == want


def test_complete_oracles():
    assert complete(2, 2) == P.term(2, 1, {1: 2}) + P.term(2, 1, {1: 1, 2: 1}) + P.term(2, 1, {2: 2})
    assert complete(0, 2) == P.one(2)
    assert complete_tilde(0, 3) == monomial(sp("(0;)"), 3)
    two_m1 = monomial(sp("(1;)"), 2).scale(2)
    assert complete_tilde(1, 2) == two_m1 + monomial(sp("(0;1)"), 2)


def test_powersum_oracles():
    assert powersum(0, 3).is_zero()
    assert powersum_tilde(0, 3) == P.theta(1, 3) + P.theta(2, 3) + P.theta(3, 3)
    assert powersum(2, 2) == P.term(2, 1, {1: 2}) + P.term(2, 1, {2: 2})


def test_generators_match_their_monomials():
    for n in range(7):
        nv = n + 1
        assert elementary(n, nv) == monomial(SuperPartition(a=(), s=(1,) * n), nv)
        assert powersum_tilde(n, nv) == monomial(SuperPartition(a=(n,), s=()), nv)
        if n >= 1:
            assert powersum(n, nv) == monomial(SuperPartition(a=(), s=(n,)), nv)
        assert elementary_tilde(n, nv + 1) == monomial(
            SuperPartition(a=(0,), s=(1,) * n), nv + 1
        )


def test_negative_degree_rejected():
    for fn in (elementary, elementary_tilde, complete, complete_tilde, powersum, powersum_tilde):
        with pytest.raises(ValueError):
            fn(-1, 3)


# -- multiplicative products ------------------------------------------------------


def test_product_element_follows_fermionic_order():
    la = sp("(3,0;4,1)")
    nv = 8
    direct = elementary_tilde(3, nv) * elementary_tilde(0, nv) * elementary(4, nv) * elementary(1, nv)
    assert multiplicative("e", la, nv) == direct
    swapped = elementary_tilde(0, nv) * elementary_tilde(3, nv) * elementary(4, nv) * elementary(1, nv)
    assert multiplicative("e", la, nv) == swapped.scale(-1)


def test_empty_product_is_one():
    assert multiplicative("p", sp("(;)"), 3) == P.one(3)


def test_arrowed_product_scales_by_sector_sign():
    la = sp("(2,1,0;)")
    f = multiplicative("h", la, 4)
    assert multiplicative("h", la, 4, arrowed=True) == f.scale(-1)


def test_basis_element_dispatch():
    la = sp("(1,0;1)")
    assert basis_element("m", la, 4) == monomial(la, 4)
    assert basis_element("h", la, 4) == multiplicative("h", la, 4)
    assert basis_element("h", la) == multiplicative("h", la, default_nvars(la))
    with pytest.raises(ValueError):
        basis_element("q", la, 4)


def test_constructed_elements_are_symmetric_with_right_bidegree():
    for n in range(4):
        for m in range(3):
            if n < m * (m - 1) // 2:
                continue
            for la in enumerate_superpartitions(n, m):
                for basis in ("m", "e", "h", "p"):
                    f = basis_element(basis, la, n + m + 1)
                    assert f.is_symmetric(), (basis, la)
                    for mask, key, _ in f.iter_terms():
                        bos = sum(f.key_exponent(key, v) for v in range(1, f.nvars + 1))
                        assert (bos, mask.bit_count()) == (n, m)


# -- generating series -------------------------------------------------------------


@pytest.mark.parametrize("kind", ["E", "H", "P", "HE", "HP", "EP"])
def test_generating_identities(kind):
    rep = generating_check(kind, 3, 4)
    assert rep["pass"] is True, rep
    assert rep["first_failure"] is None


def test_generating_check_rejects_unknown_kind():
    with pytest.raises(ValueError):
        generating_check("X", 2, 3)
