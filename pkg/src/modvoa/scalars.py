"""Exact arithmetic in the prime field F_p and binomial coefficients.

Binomials are defined for any signed upper argument by
binom(m, k) = m(m-1)...(m-k+1)/k!, evaluated in exact integers and only then
reduced mod p (k! need not be invertible mod p once k >= p).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

from .report import Report


class Prime(int):
    """An odd prime p, validated once at construction."""

    def __new__(cls, p):
        if isinstance(p, Prime):
            return p
        p = int(p)
        if p < 3:
            raise ValueError(f"characteristic must be an odd prime >= 3, got {p}")
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
            d += 1
        return super().__new__(cls, p)

    @property
    def half(self) -> int:
        return (self + 1) // 2

    def inv(self, a: int) -> int:
        a %= self
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {int(self)}")
        return pow(a, -1, self)


class FpScalar:
    """Immutable element of F_p stored as its canonical residue."""

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        modulus = Prime(modulus)
        if isinstance(value, FpScalar):
            value = value.value
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", int(value) % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("FpScalar is immutable")

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.modulus != self.modulus:
                raise ValueError("scalars over different primes")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.modulus)

    def inverse(self) -> "FpScalar":
        return FpScalar(self.modulus.inv(self.value), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value * self.modulus.inv(o), self.modulus)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(o * self.modulus.inv(self.value), self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpScalar(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, int(self.modulus)))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpScalar({self.value}, {int(self.modulus)})"

    def __str__(self):
        return str(self.value)

    def to_json_value(self):
        return self.value


@lru_cache(maxsize=None)
def int_binomial(m: int, k: int) -> int:
    """Exact integer binomial for signed m and k >= 0."""
    if k < 0:
        return 0
    if m >= 0:
        return comb(m, k)
    return (-1) ** k * comb(-m + k - 1, k)


def fp_binomial(m: int, k: int, p) -> FpScalar:
    p = Prime(p)
    return FpScalar(int_binomial(m, k), p)


def binom_mod(m: int, k: int, p: int) -> int:
    """Plain-int residue of binom(m, k) mod p, used in inner loops."""
    return int_binomial(m, k) % p


def lucas_binomial(m: int, k: int, p) -> FpScalar:
    """binom(m, k) mod p as a product of base-p digit binomials (m, k >= 0)."""
    p = Prime(p)
    if m < 0 or k < 0:
        raise ValueError("Lucas' theorem needs non-negative arguments")
    result = 1
    while m or k:
        md, kd = m % p, k % p
        if kd > md:
            return FpScalar(0, p)
        result = result * comb(md, kd) % p
        m //= p
        k //= p
    return FpScalar(result, p)


def verify_lucas_congruences(p, nmax: int, kmax: int) -> Report:
    """Check binom(pn+k-1, k) = 0 for p not dividing k, and
    binom(pn+pk-1, pk) = binom(n+k-1, k), for 1 <= n <= nmax, 1 <= k <= kmax.
    """
    p = Prime(p)
    report = Report("lucas", {"p": int(p), "nmax": nmax, "kmax": kmax})
    bad_i, bad_ii = [], []
    count_i = count_ii = 0
    for n, k in product(range(1, nmax + 1), range(1, kmax + 1)):
        if k % p:
            count_i += 1
            if lucas_binomial(p * n + k - 1, k, p).value != 0:
                bad_i.append([n, k])
        count_ii += 1
        if lucas_binomial(p * n + p * k - 1, p * k, p) != lucas_binomial(n + k - 1, k, p):
            bad_ii.append([n, k])
    report.add("lucas part (i): binom(pn+k-1,k)=0 when p does not divide k", not bad_i,
               bad_i[:5] or None, p=p, instances=count_i)
    report.add("lucas part (ii): binom(pn+pk-1,pk)=binom(n+k-1,k)", not bad_ii,
               bad_ii[:5] or None, p=p, instances=count_ii)
    return report


def appendix_first(m: int, n: int, k: int, p: int) -> tuple[int, int]:
    """Both sides of (m-n)binom(m+n+1,k) = sum_i (m-n-k+2i)binom(m+1,k-i)binom(n+1,i)."""
    lhs = (m - n) * int_binomial(m + n + 1, k)
    rhs = sum((m - n - k + 2 * i) * int_binomial(m + 1, k - i) * int_binomial(n + 1, i)
              for i in range(k + 1))
    return lhs % p, rhs % p


def appendix_second(m: int, n: int, k: int, p: int) -> tuple[int, int]:
    """Both sides of the cocycle identity whose right side is binom(m+1,3) d_{m+n,0} d_{k,0}."""
    if m + n - k == 0:
        lhs = sum(int_binomial(m + 1, k - i) * int_binomial(n + 1, i)
                  * int_binomial(m - k + i + 1, 3) for i in range(k + 1))
    else:
        lhs = 0
    rhs = int_binomial(m + 1, 3) if (m + n == 0 and k == 0) else 0
    return lhs % p, rhs % p


def verify_appendix_identities(p, mrange, nrange, krange) -> Report:
    p = Prime(p)
    mrange, nrange, krange = list(mrange), list(nrange), list(krange)
    window = {"m": [min(mrange), max(mrange)], "n": [min(nrange), max(nrange)],
              "k": [min(krange), max(krange)]}
    report = Report("appendix", {"p": int(p), **window})
    for label, fn in (("binomial identity (m-n)binom(m+n+1,k)", appendix_first),
                      ("cocycle binomial identity", appendix_second)):
        bad = []
        count = 0
        for m, n, k in product(mrange, nrange, krange):
            count += 1
            lhs, rhs = fn(m, n, k, p)
            if lhs != rhs:
                bad.append({"m": m, "n": n, "k": k, "lhs": lhs, "rhs": rhs})
        report.add(label, not bad, bad[:5] or None, p=p, instances=count, **window)
    return report
