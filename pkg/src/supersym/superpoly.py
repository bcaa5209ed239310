"""Sparse exact polynomials in commuting and anticommuting variables.

A SuperPolynomial lives in the ring generated by x1..xN (commuting) and
t1..tN (anticommuting, squaring to zero: t_i t_j = -t_j t_i).  Terms are
stored per theta-support: for each subset of anticommuting variables, a
sparse map from packed exponent vectors to rational coefficients, with the
theta letters implicitly in increasing order.  All arithmetic is exact.

Variable indices are 1-based throughout the public interface, matching the
rendered names x1, t1.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "SuperPolynomial",
    "format_rational",
    "parse_rational",
]

_FIELD_BITS = 16
_FIELD_MASK = (1 << _FIELD_BITS) - 1


def format_rational(c) -> str:
    """Render an int or Fraction as 'p' or 'p/q'."""
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}: {exc}") from None


def _sort_sign(seq: tuple[int, ...]) -> int | None:
    """Sign of sorting an anticommuting word; None when a letter repeats."""
    if len(set(seq)) != len(seq):
        return None
    inversions = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )
    return -1 if inversions & 1 else 1


def _merge_sign(ma: int, mb: int) -> int:
    """Sign of concatenating sorted words with supports ma, mb and resorting.

    Counts, for each letter of the right word, the left-word letters that
    must jump over it: bits of ma strictly above each bit of mb.
    """
    sign = 0
    b = mb
    while b:
        low = b & -b
        sign ^= (ma >> low.bit_length()).bit_count() & 1
        b ^= low
    return -1 if sign else 1


class SuperPolynomial:
    """Exact sparse polynomial in x1..xN and t1..tN."""

    __slots__ = ("nvars", "blocks")

    def __init__(self, nvars: int, blocks: dict[int, dict[int, Fraction]] | None = None):
        if nvars < 0:
            raise ValueError(f"need nvars >= 0, got {nvars}")
        self.nvars = nvars
        self.blocks = blocks if blocks is not None else {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> SuperPolynomial:
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> SuperPolynomial:
        return cls(nvars, {0: {0: Fraction(1)}})

    @classmethod
    def term(cls, nvars: int, coeff, powers=None, thetas=()) -> SuperPolynomial:
        """One term: coeff * prod x_i^powers[i] * t_{j1} t_{j2} ...

        `powers` maps 1-based variable index to exponent; `thetas` is a
        sequence of 1-based indices in any order, and the stored coefficient
        picks up the sign of sorting them (zero polynomial on a repeat).
        """
        c = Fraction(coeff)
        if c == 0:
            return cls.zero(nvars)
        if c.denominator == 1:
            c = c.numerator  # plain ints keep the hot loops cheap
        thetas = tuple(thetas)
        sign = _sort_sign(thetas)
        if sign is None:
            return cls.zero(nvars)
        key = 0
        for var, exp in (powers or {}).items():
            if not 1 <= var <= nvars:
                raise ValueError(f"variable x{var} outside 1..{nvars}")
            if exp < 0 or exp > _FIELD_MASK:
                raise ValueError(f"exponent {exp} for x{var} out of range")
            if exp:
                key += exp << (_FIELD_BITS * (var - 1))
        mask = 0
        for var in thetas:
            if not 1 <= var <= nvars:
                raise ValueError(f"variable t{var} outside 1..{nvars}")
            mask |= 1 << (var - 1)
        return cls(nvars, {mask: {key: sign * c}})

    @classmethod
    def x(cls, var: int, nvars: int) -> SuperPolynomial:
        return cls.term(nvars, 1, {var: 1})

    @classmethod
    def theta(cls, var: int, nvars: int) -> SuperPolynomial:
        return cls.term(nvars, 1, thetas=(var,))

    # -- predicates and views -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.blocks

    def num_terms(self) -> int:
        return sum(len(t) for t in self.blocks.values())

    def iter_terms(self):
        """Yield (theta_mask, packed_key, coeff); masks and keys are internal
        0-based encodings."""
        for mask, terms in self.blocks.items():
            for key, c in terms.items():
                yield mask, key, c

    def fermionic_sectors(self) -> set[int]:
        return {mask.bit_count() for mask in self.blocks}

    def key_exponent(self, key: int, var: int) -> int:
        return (key >> (_FIELD_BITS * (var - 1))) & _FIELD_MASK

    def mask_vars(self, mask: int) -> tuple[int, ...]:
        """1-based theta indices of a block mask, increasing."""
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length())
            mask ^= low
        return tuple(out)

    def coefficient(self, powers=None, thetas=()) -> Fraction:
        """Coefficient of the monomial with the thetas in the given order."""
        probe = SuperPolynomial.term(self.nvars, 1, powers, thetas)
        if probe.is_zero():
            raise ValueError(f"repeated theta index in {thetas}")
        ((mask, terms),) = probe.blocks.items()
        ((key, sign),) = terms.items()
        return sign * self.blocks.get(mask, {}).get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._as_canonical() == other._as_canonical()

    def _as_canonical(self):
        return {m: t for m, t in self.blocks.items() if t}

    def __hash__(self):
        raise TypeError("SuperPolynomial is mutable-by-construction; not hashable")

    # -- linear structure -----------------------------------------------------

    def _check_same_ring(self, other: SuperPolynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"mixed rings: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other: SuperPolynomial) -> SuperPolynomial:
        self._check_same_ring(other)
        blocks = {m: dict(t) for m, t in self.blocks.items()}
        for mask, terms in other.blocks.items():
            dst = blocks.setdefault(mask, {})
            for key, c in terms.items():
                v = dst.get(key, 0) + c
                if v:
                    dst[key] = v
                else:
                    dst.pop(key, None)
            if not dst:
                del blocks[mask]
        return SuperPolynomial(self.nvars, blocks)

    def __neg__(self) -> SuperPolynomial:
        return self.scale(-1)

    def __sub__(self, other: SuperPolynomial) -> SuperPolynomial:
        return self + (-other)

    def scale(self, c) -> SuperPolynomial:
        c = Fraction(c)
        if c == 0:
            return SuperPolynomial.zero(self.nvars)
        if c.denominator == 1:
            c = c.numerator
        return SuperPolynomial(
            self.nvars,
            {m: {k: c * v for k, v in t.items()} for m, t in self.blocks.items()},
        )

    # -- multiplication ---------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_same_ring(other)
        blocks: dict[int, dict[int, Fraction]] = {}
        for ma, ta in self.blocks.items():
            for mb, tb in other.blocks.items():
                if ma & mb:
                    continue
                sign = _merge_sign(ma, mb)
                dst = blocks.setdefault(ma | mb, {})
                for ka, ca in ta.items():
                    sca = sign * ca
                    for kb, cb in tb.items():
                        k = ka + kb
                        v = dst.get(k, 0) + sca * cb
                        if v:
                            dst[k] = v
                        else:
                            dst.pop(k, None)
        return SuperPolynomial(self.nvars, {m: t for m, t in blocks.items() if t})

    __rmul__ = __mul__

    def mul_restricted(self, other: SuperPolynomial, theta_vars) -> SuperPolynomial:
        """Product keeping only theta supports inside the given variable set.

        Masks only grow under multiplication, so blocks outside the set can
        be dropped from both factors up front; useful when only one sector
        of a long product is ever read.
        """
        self._check_same_ring(other)
        allowed = 0
        for v in theta_vars:
            allowed |= 1 << (v - 1)
        blocks: dict[int, dict[int, Fraction]] = {}
        for ma, ta in self.blocks.items():
            if ma & ~allowed:
                continue
            for mb, tb in other.blocks.items():
                if mb & ~allowed or ma & mb:
                    continue
                sign = _merge_sign(ma, mb)
                dst = blocks.setdefault(ma | mb, {})
                for ka, ca in ta.items():
                    sca = sign * ca
                    for kb, cb in tb.items():
                        k = ka + kb
                        v = dst.get(k, 0) + sca * cb
                        if v:
                            dst[k] = v
                        else:
                            dst.pop(k, None)
        return SuperPolynomial(self.nvars, {m: t for m, t in blocks.items() if t})

    def mul_truncated(self, other: SuperPolynomial, max_degree: int, vars=None) -> SuperPolynomial:
        """Product keeping only terms of degree <= max_degree in `vars`
        (1-based bosonic indices, default all)."""
        self._check_same_ring(other)
        fields = self._field_offsets(vars)
        other_bucketed: dict[int, list[tuple[int, list[tuple[int, Fraction]]]]] = {}
        for mb, tb in other.blocks.items():
            by_deg: dict[int, list[tuple[int, Fraction]]] = {}
            for kb, cb in tb.items():
                by_deg.setdefault(self._key_degree(kb, fields), []).append((kb, cb))
            other_bucketed[mb] = sorted(by_deg.items())
        blocks: dict[int, dict[int, Fraction]] = {}
        for ma, ta in self.blocks.items():
            for mb, buckets in other_bucketed.items():
                if ma & mb:
                    continue
                sign = _merge_sign(ma, mb)
                dst = blocks.setdefault(ma | mb, {})
                for ka, ca in ta.items():
                    budget = max_degree - self._key_degree(ka, fields)
                    if budget < 0:
                        continue
                    sca = sign * ca
                    for deg, pairs in buckets:
                        if deg > budget:
                            break
                        for kb, cb in pairs:
                            k = ka + kb
                            v = dst.get(k, 0) + sca * cb
                            if v:
                                dst[k] = v
                            else:
                                dst.pop(k, None)
        return SuperPolynomial(self.nvars, {m: t for m, t in blocks.items() if t})

    # -- degrees and truncation ---------------------------------------------------

    def _field_offsets(self, vars=None) -> tuple[int, ...]:
        if vars is None:
            vars = range(1, self.nvars + 1)
        return tuple(_FIELD_BITS * (v - 1) for v in vars)

    @staticmethod
    def _key_degree(key: int, offsets: tuple[int, ...]) -> int:
        return sum((key >> off) & _FIELD_MASK for off in offsets)

    def truncate(self, max_degree: int, vars=None) -> SuperPolynomial:
        """Drop terms of degree > max_degree in `vars` (default all bosonic)."""
        fields = self._field_offsets(vars)
        blocks = {}
        for mask, terms in self.blocks.items():
            kept = {k: c for k, c in terms.items() if self._key_degree(k, fields) <= max_degree}
            if kept:
                blocks[mask] = kept
        return SuperPolynomial(self.nvars, blocks)

    # -- variable operations ----------------------------------------------------

    def widen(self, nvars: int) -> SuperPolynomial:
        """Same polynomial viewed in a ring with more variables."""
        if nvars < self.nvars:
            raise ValueError(f"cannot narrow {self.nvars} -> {nvars}")
        return SuperPolynomial(nvars, {m: dict(t) for m, t in self.blocks.items()})

    def shift_alphabet(self, offset: int, nvars: int) -> SuperPolynomial:
        """Relabel x_i -> x_{i+offset}, t_i -> t_{i+offset}.

        Relabeling is order-preserving on the theta letters, so no signs
        appear.
        """
        if offset < 0:
            raise ValueError("offset must be >= 0")
        blocks = {}
        for mask, terms in self.blocks.items():
            if mask >> (self.nvars):
                raise AssertionError("mask outside declared ring")
            nm = mask << offset
            if nm >> nvars:
                raise ValueError("shift exceeds target ring size")
            blocks[nm] = {k << (_FIELD_BITS * offset): c for k, c in terms.items()}
        return SuperPolynomial(nvars, blocks)

    def negate_vars(self, bos_vars=(), ferm_vars=()) -> SuperPolynomial:
        """Substitute x_v -> -x_v and t_v -> -t_v for the listed indices."""
        bos_offs = tuple(_FIELD_BITS * (v - 1) for v in bos_vars)
        fmask = 0
        for v in ferm_vars:
            fmask |= 1 << (v - 1)
        blocks = {}
        for mask, terms in self.blocks.items():
            msign = -1 if (mask & fmask).bit_count() & 1 else 1
            dst = {}
            for key, c in terms.items():
                par = sum((key >> off) & _FIELD_MASK for off in bos_offs) & 1
                dst[key] = -msign * c if par else msign * c
            blocks[mask] = dst
        return SuperPolynomial(self.nvars, blocks)

    def extract_x(self, var: int, exp: int) -> SuperPolynomial:
        """Coefficient of x_var^exp: keep matching terms, clear that field."""
        off = _FIELD_BITS * (var - 1)
        blocks = {}
        for mask, terms in self.blocks.items():
            dst = {}
            for key, c in terms.items():
                if (key >> off) & _FIELD_MASK == exp:
                    dst[key - (exp << off)] = c
            if dst:
                blocks[mask] = dst
        return SuperPolynomial(self.nvars, blocks)

    def select_theta(self, var: int) -> SuperPolynomial:
        """Terms whose theta word contains t_var, unchanged."""
        bit = 1 << (var - 1)
        return SuperPolynomial(
            self.nvars, {m: dict(t) for m, t in self.blocks.items() if m & bit}
        )

    def extract_theta_left(self, var: int) -> SuperPolynomial:
        """Coefficient of t_var factored out on the left.

        Moving t_var to the front of the sorted word passes over the letters
        below it, hence the sign (-1)^(#smaller letters present).
        """
        bit = 1 << (var - 1)
        blocks = {}
        for mask, terms in self.blocks.items():
            if not mask & bit:
                continue
            sign = -1 if (mask & (bit - 1)).bit_count() & 1 else 1
            blocks[mask ^ bit] = {k: sign * c for k, c in terms.items()}
        return SuperPolynomial(self.nvars, blocks)

    def euler_scale(self, var: int) -> SuperPolynomial:
        """Multiply each term by its x_var exponent (the operator x d/dx)."""
        off = _FIELD_BITS * (var - 1)
        blocks = {}
        for mask, terms in self.blocks.items():
            dst = {}
            for key, c in terms.items():
                e = (key >> off) & _FIELD_MASK
                if e:
                    dst[key] = e * c
            if dst:
                blocks[mask] = dst
        return SuperPolynomial(self.nvars, blocks)

    def arrow(self) -> SuperPolynomial:
        """Scale each m-theta sector by (-1)^(m(m-1)/2), reversing theta words."""
        blocks = {}
        for mask, terms in self.blocks.items():
            m = mask.bit_count()
            if (m * (m - 1) // 2) & 1:
                blocks[mask] = {k: -c for k, c in terms.items()}
            else:
                blocks[mask] = dict(terms)
        return SuperPolynomial(self.nvars, blocks)

    def apply_exchange(self, i: int) -> SuperPolynomial:
        """Swap variables i and i+1 in both alphabets (1 <= i < nvars).

        With both t_i and t_{i+1} present the letters are adjacent in the
        sorted word, so the swap contributes one transposition sign.
        """
        if not 1 <= i < self.nvars:
            raise ValueError(f"need 1 <= i < {self.nvars}, got {i}")
        lo = 1 << (i - 1)
        hi = 1 << i
        off_lo = _FIELD_BITS * (i - 1)
        off_hi = _FIELD_BITS * i
        blocks: dict[int, dict[int, Fraction]] = {}
        for mask, terms in self.blocks.items():
            both = mask & (lo | hi)
            if both == lo or both == hi:
                nm = mask ^ lo ^ hi
                sign = 1
            else:
                nm = mask
                sign = -1 if both else 1
            dst = blocks.setdefault(nm, {})
            for key, c in terms.items():
                a = (key >> off_lo) & _FIELD_MASK
                b = (key >> off_hi) & _FIELD_MASK
                nk = key - (a << off_lo) - (b << off_hi) + (b << off_lo) + (a << off_hi)
                v = dst.get(nk, 0) + sign * c
                if v:
                    dst[nk] = v
                else:
                    dst.pop(nk, None)
        return SuperPolynomial(self.nvars, {m: t for m, t in blocks.items() if t})

    def is_symmetric(self) -> bool:
        """Invariance under every adjacent simultaneous exchange."""
        return all(self.apply_exchange(i) == self for i in range(1, self.nvars))

    # -- rendering ------------------------------------------------------------

    def render(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for mask in sorted(self.blocks, key=lambda m: (m.bit_count(), m)):
            for key in sorted(self.blocks[mask], reverse=True):
                c = self.blocks[mask][key]
                factors = [format_rational(c)]
                for var in range(1, self.nvars + 1):
                    e = self.key_exponent(key, var)
                    if e == 1:
                        factors.append(f"x{var}")
                    elif e:
                        factors.append(f"x{var}^{e}")
                tword = " ".join(f"t{v}" for v in self.mask_vars(mask))
                if tword:
                    factors.append(tword)
                pieces.append(" * ".join(factors))
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<SuperPolynomial nvars={self.nvars} terms={self.num_terms()}>"
