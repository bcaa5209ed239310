"""The four classical bases: monomial, elementary, complete, power sums.

Each family comes in a bosonic version (e_n, h_n, p_n) and a fermionic one
(te_n, th_n, tp_n, rendered with a tilde in math but spelled with a leading
`_tilde` suffix here).  Products over the parts of a superpartition give the
multiplicative bases; the monomial basis is built directly from distinct
variable placements.

Generating series with one extra bosonic parameter t = x_{N+1} and one extra
anticommuting parameter tau = t_{N+1} tie the families together; see
generating_check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache

from .superpartition import SuperPartition, enumerate_superpartitions
from .superpoly import SuperPolynomial, _FIELD_BITS

__all__ = [
    "monomial",
    "elementary",
    "elementary_tilde",
    "complete",
    "complete_tilde",
    "powersum",
    "powersum_tilde",
    "multiplicative",
    "basis_element",
    "default_nvars",
    "generating_check",
]

BASIS_NAMES = ("m", "e", "h", "p")


def default_nvars(sp: SuperPartition) -> int:
    """Enough variables for a faithful expansion of anything in the block:
    degree plus fermionic degree."""
    n, m = sp.bidegree
    return n + m


def _distinct_arrangements(values: tuple[int, ...]):
    """Distinct orderings of a multiset, without generating duplicates."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    total = len(values)

    def rec(prefix):
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for v in sorted(counts, reverse=True):
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[v] += 1

    yield from rec([])


def monomial(sp: SuperPartition, nvars: int, strict: bool = True) -> SuperPolynomial:
    """Monomial basis element: the sum over distinct variable placements.

    Fermionic parts occupy a set of variables, each bringing its theta;
    symmetric parts (padded with zeros) fill the rest.  Normalized so the
    coefficient of t_1..t_m x_1^{a_1}..x_m^{a_m} x_{m+1}^{s_1}.. is +1.
    With fewer variables than parts the element has no room: error when
    strict, zero polynomial otherwise (the truncated-alphabet convention).
    """
    m = sp.fermionic_degree
    if sp.length > nvars:
        if strict:
            raise ValueError(
                f"monomial for {sp} needs at least {sp.length} variables, got {nvars}"
            )
        return SuperPolynomial.zero(nvars)
    svals = sp.s + (0,) * (nvars - m - len(sp.s))
    out = SuperPolynomial.zero(nvars)
    for pos in itertools.combinations(range(1, nvars + 1), m):
        rest = [v for v in range(1, nvars + 1) if v not in pos]
        for perm in itertools.permutations(pos):
            base = {p: a for p, a in zip(perm, sp.a)}
            for arr in _distinct_arrangements(svals):
                powers = dict(base)
                for p, v in zip(rest, arr):
                    if v:
                        powers[p] = v
                out = out + SuperPolynomial.term(nvars, 1, powers, thetas=perm)
    return out


def _packed_key(combo) -> int:
    """Exponent key for a monomial given as a multiset of 1-based variables."""
    key = 0
    for v in combo:
        key += 1 << (_FIELD_BITS * (v - 1))
    return key


@cache
def elementary(n: int, nvars: int) -> SuperPolynomial:
    """e_n: sum of squarefree degree-n monomials."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    body = {
        _packed_key(combo): 1
        for combo in itertools.combinations(range(1, nvars + 1), n)
    }
    return SuperPolynomial(nvars, {0: body} if body else {})


@cache
def elementary_tilde(n: int, nvars: int) -> SuperPolynomial:
    """te_n: sum of t_i times squarefree monomials avoiding x_i."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    blocks = {}
    for i in range(1, nvars + 1):
        others = [v for v in range(1, nvars + 1) if v != i]
        body = {
            _packed_key(combo): 1 for combo in itertools.combinations(others, n)
        }
        if body:
            blocks[1 << (i - 1)] = body
    return SuperPolynomial(nvars, blocks)


@cache
def complete(n: int, nvars: int) -> SuperPolynomial:
    """h_n: sum of all degree-n monomials."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    body = {
        _packed_key(combo): 1
        for combo in itertools.combinations_with_replacement(range(1, nvars + 1), n)
    }
    return SuperPolynomial(nvars, {0: body} if body else {})


@cache
def complete_tilde(n: int, nvars: int) -> SuperPolynomial:
    """th_n = sum_i t_i sum_{k<=n} x_i^k h_{n-k}.

    Collecting the convolution on a fixed monomial x^v leaves v_i + 1
    choices for the split, so th_n = sum_i t_i sum_{|v|=n} (v_i + 1) x^v.
    Equivalently th_n weights the one-fermion monomial basis by a + 1.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    blocks: dict[int, dict[int, int]] = {1 << i: {} for i in range(nvars)}
    for combo in itertools.combinations_with_replacement(range(1, nvars + 1), n):
        key = _packed_key(combo)
        counts: dict[int, int] = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        for i in range(1, nvars + 1):
            blocks[1 << (i - 1)][key] = counts.get(i, 0) + 1
    return SuperPolynomial(nvars, {m: b for m, b in blocks.items() if b})


@cache
def powersum(n: int, nvars: int) -> SuperPolynomial:
    """p_n: sum of n-th powers; p_0 is zero by convention."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return SuperPolynomial.zero(nvars)
    body = {_packed_key([i] * n): 1 for i in range(1, nvars + 1)}
    return SuperPolynomial(nvars, {0: body} if body else {})


@cache
def powersum_tilde(n: int, nvars: int) -> SuperPolynomial:
    """tp_n: sum of t_i x_i^n."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    blocks = {
        1 << (i - 1): {_packed_key([i] * n): 1} for i in range(1, nvars + 1)
    }
    return SuperPolynomial(nvars, blocks)


_GENERATORS = {
    "e": (elementary, elementary_tilde),
    "h": (complete, complete_tilde),
    "p": (powersum, powersum_tilde),
}


def generator_functions(basis: str):
    """(plain, tilde) constructor pair of a multiplicative basis."""
    if basis not in _GENERATORS:
        raise ValueError(f"multiplicative basis must be one of e, h, p, not {basis!r}")
    return _GENERATORS[basis]


@cache
def multiplicative(basis: str, sp: SuperPartition, nvars: int, arrowed: bool = False) -> SuperPolynomial:
    """Product basis element: tilde generators for the fermionic parts (in
    their given order), then plain generators for the symmetric parts.

    With arrowed=True each m-fermion sector is scaled by (-1)^(m(m-1)/2),
    which reverses the order of the theta factors.
    """
    if basis not in _GENERATORS:
        raise ValueError(f"multiplicative basis must be one of e, h, p, not {basis!r}")
    plain, tilde = _GENERATORS[basis]
    out = SuperPolynomial.one(nvars)
    for a in sp.a:
        out = out * tilde(a, nvars)
    for s in sp.s:
        out = out * plain(s, nvars)
    return out.arrow() if arrowed else out


def basis_element(basis: str, sp: SuperPartition, nvars: int | None = None, arrowed: bool = False) -> SuperPolynomial:
    """Dispatch: monomial for "m", product element for "e", "h", "p"."""
    if nvars is None:
        nvars = default_nvars(sp)
    if basis == "m":
        out = monomial(sp, nvars)
        return out.arrow() if arrowed else out
    return multiplicative(basis, sp, nvars, arrowed)


# -- generating series -------------------------------------------------------


def _series_E(nvars: int, trunc: int) -> SuperPolynomial:
    """prod_i (1 + t x_i + tau t_i) in the ring with t = x_{N+1}, tau = t_{N+1}."""
    big = nvars + 1
    out = SuperPolynomial.one(big)
    for i in range(1, nvars + 1):
        factor = (
            SuperPolynomial.one(big)
            + SuperPolynomial.term(big, 1, {big: 1, i: 1})
            + SuperPolynomial.term(big, 1, thetas=(big, i))
        )
        out = out.mul_truncated(factor, trunc, vars=(big,))
    return out


def _series_H(nvars: int, trunc: int) -> SuperPolynomial:
    """prod_i 1/(1 - t x_i - tau t_i), expanded through t-degree trunc.

    Each factor is sum_k (t x_i)^k + tau t_i sum_k k (t x_i)^(k-1); the
    second sum needs one extra order since tau carries no t-degree.
    """
    big = nvars + 1
    out = SuperPolynomial.one(big)
    for i in range(1, nvars + 1):
        factor = SuperPolynomial.zero(big)
        for k in range(trunc + 1):
            factor = factor + SuperPolynomial.term(big, 1, {big: k, i: k})
        for k in range(1, trunc + 2):
            factor = factor + k * SuperPolynomial.term(
                big, 1, {big: k - 1, i: k - 1}, thetas=(big, i)
            )
        out = out.mul_truncated(factor, trunc, vars=(big,))
    return out


def _series_P(nvars: int, trunc: int) -> SuperPolynomial:
    """sum_i (t x_i + tau t_i)/(1 - t x_i - tau t_i) through t-degree trunc."""
    big = nvars + 1
    out = SuperPolynomial.zero(big)
    for i in range(1, nvars + 1):
        for k in range(1, trunc + 1):
            out = out + SuperPolynomial.term(big, 1, {big: k, i: k})
        for k in range(trunc + 1):
            out = out + (k + 1) * SuperPolynomial.term(
                big, 1, {big: k, i: k}, thetas=(big, i)
            )
    return out


def _split_t_coefficient(series: SuperPolynomial, n: int, big: int):
    """Bosonic and left-tau parts of the t^n coefficient of a series."""
    c = series.extract_x(big, n)
    ferm = c.extract_theta_left(big)
    bos = c - c.select_theta(big)
    return bos, ferm


def generating_check(kind: str, trunc: int, nvars: int) -> dict:
    """Verify a generating-series statement exactly; returns a report dict.

    kinds:
      "E", "H", "P": series coefficients against the direct constructors
          ([t^n] and left [tau t^n]; for P the fermionic weight is n+1).
      "HE": H(t,tau) E(-t,-tau) = 1.
      "HP": H P = (t d/dt + tau d/dtau) H.
      "EP": E(t,tau) P(-t,-tau) = -(t d/dt + tau d/dtau) E.
    """
    if trunc < 0 or nvars < 1:
        raise ValueError(f"need trunc >= 0 and nvars >= 1, got ({trunc}, {nvars})")
    kind = kind.upper()
    params = {"kind": kind, "trunc": trunc, "nvars": nvars}
    big = nvars + 1
    failure = None

    if kind in ("E", "H", "P"):
        series = {"E": _series_E, "H": _series_H, "P": _series_P}[kind](nvars, trunc)
        plain, tilde = _GENERATORS["e" if kind == "E" else kind.lower()]
        for n in range(trunc + 1):
            bos, ferm = _split_t_coefficient(series, n, big)
            want_bos = plain(n, nvars).widen(big)
            weight = n + 1 if kind == "P" else 1
            want_ferm = tilde(n, nvars).widen(big) * weight
            if bos != want_bos:
                failure = f"bosonic t^{n} coefficient differs"
                break
            if ferm != want_ferm:
                failure = f"fermionic t^{n} coefficient differs"
                break
    elif kind == "HE":
        h = _series_H(nvars, trunc)
        e = _series_E(nvars, trunc).negate_vars((big,), (big,))
        if h.mul_truncated(e, trunc, vars=(big,)) != SuperPolynomial.one(big):
            failure = "H(t,tau) E(-t,-tau) != 1"
    elif kind == "HP":
        h = _series_H(nvars, trunc)
        p = _series_P(nvars, trunc)
        lhs = h.mul_truncated(p, trunc, vars=(big,))
        rhs = h.euler_scale(big) + h.select_theta(big)
        if lhs != rhs:
            failure = "H P != (t d/dt + tau d/dtau) H"
    elif kind == "EP":
        e = _series_E(nvars, trunc)
        p = _series_P(nvars, trunc).negate_vars((big,), (big,))
        lhs = e.mul_truncated(p, trunc, vars=(big,))
        rhs = -(e.euler_scale(big) + e.select_theta(big))
        if lhs != rhs:
            failure = "E(t,tau) P(-t,-tau) != -(t d/dt + tau d/dtau) E"
    else:
        raise ValueError(f"unknown generating check {kind!r}")

    return {
        "check": f"generating-{kind}",
        "params": params,
        "pass": failure is None,
        "first_failure": failure,
    }
