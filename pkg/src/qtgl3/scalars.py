"""Exact scalar arithmetic: Gaussian rationals and q/mu polynomials.

Every quantity in the system is a finite sum

    sum_{e,d}  (a + b*i) * q^e * mu^d

with a, b rational, e an integer (q is a formal Laurent variable kept on
the unit circle, so conjugation sends q -> q^-1) and d a nonnegative
integer (mu is a formal real parameter).  All operations are exact; the
only approximate operation is `evaluate`, which substitutes a numeric
unit-circle q and a real mu.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from math import gcd


class GaussianRational:
    """Complex number with rational real/imaginary parts, kept reduced.

    Stored as an integer triple (a, b, d) meaning (a + b*i)/d with d > 0
    and gcd(a, b, d) = 1, so equality is plain field comparison.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self.a, self.b, self.d = a, b, d

    @classmethod
    def _make(cls, a, b, d):
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self = object.__new__(cls)
        self.a, self.b, self.d = a, b, d
        return self

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def __add__(self, other):
        return GaussianRational._make(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    def __sub__(self, other):
        return GaussianRational._make(
            self.a * other.d - other.a * self.d,
            self.b * other.d - other.b * self.d,
            self.d * other.d,
        )

    def __neg__(self):
        return GaussianRational._make(-self.a, -self.b, self.d)

    def __mul__(self, other):
        return GaussianRational._make(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    def conjugate(self):
        return GaussianRational._make(self.a, -self.b, self.d)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def to_complex(self):
        return complex(self.a / self.d, self.b / self.d)

    def __str__(self):
        re, im = self.re, self.im
        sign = "+" if im >= 0 else "-"
        return f"({re}{sign}{abs(im)}i)"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


G_ZERO = GaussianRational(0)
G_ONE = GaussianRational(1)
G_I = GaussianRational(0, 1)


class ScalarPoly:
    """Laurent polynomial in q, polynomial in mu, Gaussian-rational coefficients.

    `terms` maps (q_exponent, mu_degree) -> GaussianRational and never
    stores a zero coefficient, so equality of values is dict equality.
    Instances are treated as immutable: no method mutates `terms`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else {k: c for k, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        self.terms = terms
        return self

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return ZERO

    @classmethod
    def one(cls):
        return ONE

    @classmethod
    def from_rational(cls, x):
        return cls.gaussian(x, 0)

    @classmethod
    def gaussian(cls, re, im=0):
        c = GaussianRational(re, im)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def q_power(cls, e):
        return cls._raw({(e, 0): G_ONE})

    @classmethod
    def mu_power(cls, d):
        if d < 0:
            raise ValueError("mu degree must be nonnegative")
        return cls._raw({(0, d): G_ONE})

    @classmethod
    def term(cls, coeff, q_exp=0, mu_deg=0):
        c = coeff if isinstance(coeff, GaussianRational) else GaussianRational(coeff)
        return cls._raw({(q_exp, mu_deg): c} if c else {})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            if s is None:
                terms[k] = c
            else:
                s = s + c
                if s:
                    terms[k] = s
                else:
                    del terms[k]
        return ScalarPoly._raw(terms)

    def __sub__(self, other):
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            if s is None:
                terms[k] = -c
            else:
                s = s - c
                if s:
                    terms[k] = s
                else:
                    del terms[k]
        return ScalarPoly._raw(terms)

    def __neg__(self):
        return ScalarPoly._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            other = ScalarPoly.from_rational(other)
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (e1, d1), c1 in a.items():
            for (e2, d2), c2 in b.items():
                k = (e1 + e2, d1 + d2)
                c = c1 * c2
                s = out.get(k)
                if s is None:
                    out[k] = c
                else:
                    s = s + c
                    if s:
                        out[k] = s
                    else:
                        del out[k]
        return ScalarPoly._raw(out)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation with q on the unit circle: q -> q^-1, mu fixed."""
        return ScalarPoly._raw(
            {(-e, d): c.conjugate() for (e, d), c in self.terms.items()}
        )

    # -- queries --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def mu_degree(self):
        if not self.terms:
            raise ValueError("mu_degree of the zero polynomial")
        return max(d for (_, d) in self.terms)

    def leading_mu_part(self):
        """Laurent-in-q coefficient of the highest mu power."""
        top = self.mu_degree()
        return ScalarPoly._raw(
            {(e, 0): c for (e, d), c in self.terms.items() if d == top}
        )

    def evaluate(self, theta, mu):
        """Substitute q = exp(2*pi*i*theta) (theta rational) and a real mu."""
        theta = Fraction(theta)
        out = 0j
        for (e, d), c in self.terms.items():
            angle = 2.0 * math.pi * float((theta * e) % 1)
            out += c.to_complex() * cmath.exp(1j * angle) * (float(mu) ** d)
        return out

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (-k[1], k[0]))
        return " + ".join(f"{self.terms[k]}·q^{k[0]}·μ^{k[1]}" for k in keys)

    def __repr__(self):
        return f"<ScalarPoly {self}>"


ZERO = ScalarPoly._raw({})
ONE = ScalarPoly._raw({(0, 0): G_ONE})
MU = ScalarPoly._raw({(0, 1): G_ONE})
HALF_MU = ScalarPoly._raw({(0, 1): GaussianRational(Fraction(1, 2))})
MINUS_ONE = ScalarPoly._raw({(0, 0): GaussianRational(-1)})


def q_pow(e):
    """q^e as a ScalarPoly (cached for small exponents)."""
    p = _Q_CACHE.get(e)
    if p is None:
        p = ScalarPoly.q_power(e)
        _Q_CACHE[e] = p
    return p


_Q_CACHE = {0: ONE}
