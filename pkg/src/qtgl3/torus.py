"""The rank-2 quantum torus: Laurent monomials in s, t with ts = q*st.

Elements are kept in the normal form  sum_(m,n) lambda_(m,n) * s^m t^n
(all s powers before all t powers); the reordering phases are absorbed
into the ScalarPoly coefficients, so equality is decidable by dict
comparison.
"""

from __future__ import annotations

from .scalars import ONE, ScalarPoly, q_pow

# A torus monomial s^m t^n is the exponent pair (m, n).
Mono = tuple


def mono_mul(x, y):
    """Product of two normal-form monomials: (phase, monomial).

    (s^m1 t^n1)(s^m2 t^n2) = q^(n1*m2) s^(m1+m2) t^(n1+n2), from pushing
    t^n1 past s^m2 one relation at a time.
    """
    phase = q_pow(x[1] * y[0])
    return phase, (x[0] + y[0], x[1] + y[1])


def mono_bar(x):
    """Conjugate monomial: (phase, monomial) with bar(s^m t^n) = q^(mn) s^-m t^-n."""
    return q_pow(x[0] * x[1]), (-x[0], -x[1])


class TorusElement:
    """Finite linear combination of torus monomials with ScalarPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else {k: c for k, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.monomial(0, 0)

    @classmethod
    def monomial(cls, m, n, coeff=ONE):
        if not coeff:
            return cls._raw({})
        return cls._raw({(m, n): coeff})

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            s = c if s is None else s + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return TorusElement._raw(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TorusElement._raw({k: -c for k, c in self.terms.items()})

    def scale(self, coeff):
        if not coeff:
            return TorusElement._raw({})
        return TorusElement._raw({k: coeff * c for k, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for x, cx in self.terms.items():
            for y, cy in other.terms.items():
                phase, z = mono_mul(x, y)
                c = cx * cy * phase
                s = out.get(z)
                s = c if s is None else s + c
                if s:
                    out[z] = s
                else:
                    out.pop(z, None)
        return TorusElement._raw(out)

    def kappa(self):
        """Coefficient of the identity monomial (a trace-like linear functional)."""
        return self.terms.get((0, 0), ScalarPoly.zero())

    def bar(self):
        """Antilinear involution: lambda s^m t^n -> conj(lambda) q^(mn) s^-m t^-n."""
        out = {}
        for (m, n), c in self.terms.items():
            phase, z = mono_bar((m, n))
            out[z] = c.conjugate() * phase
        return TorusElement._raw(out)

    def degree_s(self):
        return TorusElement(
            {k: ScalarPoly.from_rational(k[0]) * c for k, c in self.terms.items()}
        )

    def degree_t(self):
        return TorusElement(
            {k: ScalarPoly.from_rational(k[1]) * c for k, c in self.terms.items()}
        )

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n) in sorted(self.terms):
            parts.append(f"[{self.terms[(m, n)]}]·s^{m}·t^{n}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<TorusElement {self}>"

    def to_json(self):
        """Array-of-terms encoding [[m, n, coeff-string], ...]."""
        return [[m, n, str(c)] for (m, n), c in sorted(self.terms.items())]
