"""
Exact Arithmetic
Roots of unity as rational exponents and cyclotomic numbers reduced modulo Phi_N
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """Class to represent exp(2*pi*i*exponent) with exponent in [0, 1)"""

    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'exponent', Fraction(self.exponent) % 1)

    @classmethod
    def of(cls, k, n):
        """zeta_n^k"""
        return cls(Fraction(k, n))

    @classmethod
    def one(cls):
        return cls(Fraction(0))

    @property
    def order(self):
        return self.exponent.denominator

    @property
    def numerator(self):
        return self.exponent.numerator

    def is_one(self):
        return self.exponent == 0

    def inverse(self):
        return RootOfUnity(-self.exponent)

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            return root_mul(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, RootOfUnity):
            return RootOfUnity(self.exponent - other.exponent)
        return NotImplemented

    def __pow__(self, k):
        return RootOfUnity(self.exponent * k)

    def __neg__(self):
        return RootOfUnity(self.exponent + Fraction(1, 2))

    def to_complex(self):
        return complex(np.exp(2j * np.pi * float(self.exponent)))

    def to_json(self):
        return f"{self.exponent.numerator}/{self.exponent.denominator}"

    @classmethod
    def from_json(cls, text):
        return cls(Fraction(text))

    def __str__(self):
        return f"zeta({self.order})^{self.numerator}"


def root_mul(a, b):
    """Product of two roots of unity: exponents add mod 1"""
    return RootOfUnity(a.exponent + b.exponent)


def nth_root_solutions(n, target):
    """
    All g with g^n = target

    Args:
        n: Positive integer
        target: RootOfUnity

    Returns:
        List of the n solutions (t + s)/n, s = 0..n-1
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    t = target.exponent
    return [RootOfUnity((t + s) / n) for s in range(n)]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _exact_divide(num, den):
    """Quotient of integer polynomials (low degree first), den monic, exact"""
    num = list(num)
    quotient = [0] * (len(num) - len(den) + 1)
    for k in range(len(quotient) - 1, -1, -1):
        c = num[k + len(den) - 1]
        quotient[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:len(den) - 1]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """
    Phi_n as a tuple of integer coefficients, low degree first

    Divides x^n - 1 by Phi_d for every proper divisor d of n.
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def cyclo_reduce(poly, order):
    """
    Canonical form of a polynomial in zeta_N

    Args:
        poly: Coefficient sequence indexed by exponent, or dict exponent -> coefficient
        order: Ambient order N

    Returns:
        Cyclotomic with degree < deg Phi_N
    """
    items = poly.items() if isinstance(poly, dict) else enumerate(poly)
    folded = [Fraction(0)] * order
    for e, c in items:
        if c:
            folded[e % order] += Fraction(c)

    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    for k in range(order - 1, deg - 1, -1):
        c = folded[k]
        if c:
            shift = k - deg
            for i, p in enumerate(phi):
                folded[shift + i] -= c * p
    return Cyclotomic(order, tuple(folded[:deg]))


class Cyclotomic:
    """Class to represent an element of Q(zeta_N) in canonical form"""

    __slots__ = ('order', 'coeffs')

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def from_root(cls, root, order=None):
        order = order or root.order
        if order % root.order:
            raise ValueError(f"{root} does not live in Q(zeta_{order})")
        return cyclo_reduce({root.numerator * (order // root.order): 1}, order)

    @classmethod
    def from_rational(cls, q, order=1):
        return cyclo_reduce({0: q}, order)

    @classmethod
    def zero(cls, order=1):
        return cyclo_reduce({}, order)

    def lift(self, order):
        """Re-express inside Q(zeta_order); self.order must divide order"""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        return cyclo_reduce({e * step: c for e, c in enumerate(self.coeffs)}, order)

    def _common(self, other):
        other = as_cyclotomic(other)
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def is_zero(self):
        return not any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, RootOfUnity, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (Cyclotomic, RootOfUnity, int, Fraction)):
            return NotImplemented
        return self + (-as_cyclotomic(other))

    def __rsub__(self, other):
        return as_cyclotomic(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, tuple(c * other for c in self.coeffs))
        if isinstance(other, RootOfUnity):
            return self.times_root(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        prod = {}
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] = prod.get(i + j, 0) + x * y
        return cyclo_reduce(prod, a.order)

    __rmul__ = __mul__

    def times_root(self, root):
        n = lcm(self.order, root.order)
        a = self.lift(n)
        shift = root.numerator * (n // root.order)
        return cyclo_reduce({e + shift: c for e, c in enumerate(a.coeffs)}, n)

    def galois(self, k):
        """Image under zeta_N -> zeta_N^k, gcd(k, N) = 1"""
        return cyclo_reduce({e * k: c for e, c in enumerate(self.coeffs)}, self.order)

    def _conjugate_units(self):
        return [k for k in range(1, self.order + 1) if gcd(k, self.order) == 1]

    def norm(self):
        """Field norm to Q as a Fraction"""
        result = Cyclotomic.from_rational(1, self.order)
        for k in self._conjugate_units():
            result = result * self.galois(k)
        return result.coeffs[0] if result.coeffs else Fraction(0)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        others = Cyclotomic.from_rational(1, self.order)
        for k in self._conjugate_units()[1:]:
            others = others * self.galois(k)
        return others * (1 / self.norm())

    def __truediv__(self, other):
        other = as_cyclotomic(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (Cyclotomic, RootOfUnity, int, Fraction)):
            a, b = self._common(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    __hash__ = None

    def to_complex(self):
        return complex(sum(float(c) * np.exp(2j * np.pi * e / self.order)
                           for e, c in enumerate(self.coeffs)))

    def to_json(self):
        return {'order': self.order, 'coeffs': [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cyclo_reduce([Fraction(c) for c in data['coeffs']], data['order'])

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    __str__ = __repr__


# Scalars are RootOfUnity until a sum forces promotion

def as_cyclotomic(x, order=None):
    if isinstance(x, Cyclotomic):
        return x.lift(order) if order else x
    if isinstance(x, RootOfUnity):
        n = lcm(order or 1, x.order)
        return Cyclotomic.from_root(x, n)
    return Cyclotomic.from_rational(Fraction(x), order or 1)


def scalar_mul(a, b):
    if isinstance(a, RootOfUnity) and isinstance(b, RootOfUnity):
        return root_mul(a, b)
    if isinstance(a, RootOfUnity):
        a, b = b, a
    return as_cyclotomic(a) * b


def scalar_add(a, b):
    return as_cyclotomic(a) + as_cyclotomic(b)


def is_zero_scalar(x):
    if isinstance(x, RootOfUnity):
        return False
    if isinstance(x, Cyclotomic):
        return x.is_zero()
    return x == 0


def scalars_equal(a, b):
    if isinstance(a, RootOfUnity) and isinstance(b, RootOfUnity):
        return a == b
    return as_cyclotomic(a) == as_cyclotomic(b)


def scalar_to_json(x):
    if isinstance(x, RootOfUnity):
        return {'root': x.to_json()}
    return as_cyclotomic(x).to_json()


def cyclotomic_rank(vectors):
    """
    Rank over Q(zeta_N) of sparse vectors

    Args:
        vectors: Iterable of dicts key -> scalar (RootOfUnity, Cyclotomic or rational)

    Returns:
        Integer rank
    """
    vectors = [v for v in vectors if v]
    keys = sorted({k for v in vectors for k in v})
    rows = [[as_cyclotomic(v.get(k, 0)) for k in keys] for v in vectors]
    rank = 0
    for col in range(len(keys)):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_inv = rows[rank][col].inverse()
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col] * pivot_inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
