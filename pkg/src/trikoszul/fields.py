"""Exact coefficient fields: the rationals and an odd prime field.

Scalars are plain Python objects (Fraction, or int mod p); the field object
supplies the arithmetic so the linear algebra stays generic.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    name = "qq"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, k: int) -> Fraction:
        return Fraction(k)

    def of_fraction(self, f: Fraction) -> Fraction:
        return f

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / a

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        self.p = p
        self.name = f"gf{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def of_int(self, k: int) -> int:
        return k % self.p

    def of_fraction(self, f: Fraction) -> int:
        num = f.numerator % self.p
        den = f.denominator % self.p
        if den == 0:
            raise ZeroDivisionError("denominator vanishes in the prime field")
        return (num * pow(den, self.p - 2, self.p)) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
GF32003 = PrimeField(32003)

_FIELDS = {"qq": QQ, "gf32003": GF32003}


def get_field(name: str):
    """Look up a field by its CLI name ('qq' or 'gf32003')."""
    try:
        return _FIELDS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown field {name!r}; choose from {sorted(_FIELDS)}") from None
