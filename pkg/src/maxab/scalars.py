"""Exact scalars: roots of unity and finite rational combinations of them.

A root of unity is stored as a rational angle a/b in [0, 1), meaning the
complex number exp(2*pi*i*a/b).  All arithmetic is exact; the multiplicative
order of the scalar is the reduced denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ValidationError


class RootOfUnity:
    """exp(2*pi*i*a/b) with a/b reduced and 0 <= a < b."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            raise ValidationError("zero denominator in root of unity")
        num %= den if den > 0 else -den
        if den < 0:
            den = -den
        g = gcd(num, den)
        self.num = num // g
        self.den = den // g
        self._hash = hash((self.num, self.den))

    @staticmethod
    def one() -> "RootOfUnity":
        return _ONE

    @staticmethod
    def minus_one() -> "RootOfUnity":
        return _MINUS_ONE

    @staticmethod
    def from_fraction(q: Fraction) -> "RootOfUnity":
        return RootOfUnity(q.numerator, q.denominator)

    @staticmethod
    def parse(s: str) -> "RootOfUnity":
        """Parse "a/b" (or "a") as the angle a/b."""
        q = Fraction(s)
        return RootOfUnity(q.numerator, q.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.num, self.den)

    def order(self) -> int:
        return self.den

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.num, self.den)

    def conj(self) -> "RootOfUnity":
        return self.inverse()

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.num * k, self.den)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RootOfUnity)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return self._hash

    def is_one(self) -> bool:
        return self.num == 0

    def is_real(self) -> bool:
        return self.den <= 2

    def real_sign(self) -> int:
        """The value as +-1; error if not real."""
        if self.num == 0:
            return 1
        if self.den == 2 and self.num == 1:
            return -1
        raise ValidationError(f"root of unity {self} is not +-1")

    def sqrt(self) -> "RootOfUnity":
        """A square root (angle halved)."""
        return RootOfUnity(self.num, 2 * self.den)

    def complexval(self) -> complex:
        from cmath import exp, pi
        return exp(2j * pi * self.num / self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"RootOfUnity({self.num}/{self.den})"


_ONE = RootOfUnity(0, 1)
_MINUS_ONE = RootOfUnity(1, 2)


def _cyclotomic_poly(n: int) -> list[Fraction]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by the cyclotomic polynomials of proper divisors.
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d:
            continue
        phi_d = _cyclotomic_poly(d)
        poly = _polydiv_exact(poly, phi_d)
    return poly


_CYCLO_CACHE: dict[int, list[Fraction]] = {}


def cyclotomic_poly(n: int) -> list[Fraction]:
    if n not in _CYCLO_CACHE:
        _CYCLO_CACHE[n] = _cyclotomic_poly(n)
    return _CYCLO_CACHE[n]


def _polydiv_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact polynomial quotient (remainder must vanish)."""
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ValidationError("inexact polynomial division")
    return out


class CycSum:
    """A finite rational combination of roots of unity, kept exact.

    Used for traces of monomial matrices and eigenprojector entries, where
    sums like 1 + w + w^2 must compare exactly against rationals.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[RootOfUnity, Fraction] | None = None):
        self.terms: dict[RootOfUnity, Fraction] = {}
        if terms:
            for z, c in terms.items():
                if c:
                    self.terms[z] = self.terms.get(z, Fraction(0)) + c
            self.terms = {z: c for z, c in self.terms.items() if c}

    @staticmethod
    def zero() -> "CycSum":
        return CycSum()

    @staticmethod
    def of(z: RootOfUnity, coeff: Fraction = Fraction(1)) -> "CycSum":
        return CycSum({z: coeff})

    @staticmethod
    def rational(q) -> "CycSum":
        return CycSum({RootOfUnity(0, 1): Fraction(q)})

    def __add__(self, other: "CycSum") -> "CycSum":
        terms = dict(self.terms)
        for z, c in other.terms.items():
            terms[z] = terms.get(z, Fraction(0)) + c
        return CycSum(terms)

    def __sub__(self, other: "CycSum") -> "CycSum":
        terms = dict(self.terms)
        for z, c in other.terms.items():
            terms[z] = terms.get(z, Fraction(0)) - c
        return CycSum(terms)

    def scale(self, z: RootOfUnity, coeff: Fraction = Fraction(1)) -> "CycSum":
        return CycSum({z * w: coeff * c for w, c in self.terms.items()})

    def conj(self) -> "CycSum":
        return CycSum({w.conj(): c for w, c in self.terms.items()})

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        lcm = 1
        for z in self.terms:
            lcm = lcm * z.den // gcd(lcm, z.den)
        # Coefficient vector in Q[x]/(Phi_lcm): reduce x^t exponents mod Phi.
        coeffs = [Fraction(0)] * lcm
        for z, c in self.terms.items():
            coeffs[z.num * (lcm // z.den) % lcm] += c
        phi = cyclotomic_poly(lcm)
        rem = _polymod(coeffs, phi)
        return not any(rem)

    def equals_rational(self, q) -> bool:
        return (self - CycSum.rational(q)).is_zero()

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction if it is rational, else None."""
        const = self.terms.get(RootOfUnity(0, 1), Fraction(0))
        if (self - CycSum.rational(const)).is_zero():
            return const
        return None

    def complexval(self) -> complex:
        return sum((float(c) * z.complexval() for z, c in self.terms.items()),
                   0j)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycSum) and (self - other).is_zero()

    def __repr__(self) -> str:
        if not self.terms:
            return "CycSum(0)"
        parts = [f"{c}*e({z})" for z, c in sorted(
            self.terms.items(), key=lambda t: (t[0].den, t[0].num))]
        return "CycSum(" + " + ".join(parts) + ")"


def _polymod(coeffs: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    deg_m = len(mod) - 1
    for k in range(len(out) - 1, deg_m - 1, -1):
        c = out[k] / mod[-1]
        if c:
            for j, mj in enumerate(mod):
                out[k - deg_m + j] -= c * mj
    return out[:deg_m]
