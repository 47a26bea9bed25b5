"""Integer Laurent polynomials in one and two variables.

Small dict-backed implementations; enough arithmetic for bracket state
sums, graded Euler characteristics and Poincare polynomials.  No zero
coefficients are ever stored.
"""

from __future__ import annotations


class Laurent:
    """Laurent polynomial in one variable with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if c:
                    nc = self.coeffs.get(e, 0) + c
                    if nc:
                        self.coeffs[e] = nc
                    else:
                        self.coeffs.pop(e, None)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    def is_zero(self):
        return not self.coeffs

    def min_degree(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no min degree")
        return min(self.coeffs)

    def max_degree(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no max degree")
        return max(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        p = Laurent.__new__(Laurent)
        p.coeffs = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = Laurent.__new__(Laurent)
        p.coeffs = {e: -c for e, c in self.coeffs.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, int):
            p = Laurent.__new__(Laurent)
            p.coeffs = {e: c * other for e, c in self.coeffs.items()} if other else {}
            return p
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        p = Laurent.__new__(Laurent)
        p.coeffs = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of polynomials are not supported")
        result = Laurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def substitute_inverse(self):
        """q -> q^-1."""
        p = Laurent.__new__(Laurent)
        p.coeffs = {-e: c for e, c in self.coeffs.items()}
        return p

    def divide_exact(self, other):
        """Exact division; raises ValueError when the division has remainder."""
        if other.is_zero():
            raise ValueError("division by zero polynomial")
        if self.is_zero():
            return Laurent.zero()
        rem = dict(self.coeffs)
        dtop = other.max_degree()
        dc = other.coeffs[dtop]
        out = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if c % dc:
                raise ValueError("inexact Laurent division")
            q, qe = c // dc, e - dtop
            out[qe] = q
            for oe, oc in other.coeffs.items():
                ne = oe + qe
                nc = rem.get(ne, 0) - oc * q
                if nc:
                    rem[ne] = nc
                else:
                    rem.pop(ne, None)
        p = Laurent.__new__(Laurent)
        p.coeffs = out
        return p

    def evaluate_int(self, value):
        """Evaluate at a nonzero integer (exact, using Fractions internally)."""
        from fractions import Fraction

        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * Fraction(value) ** e
        if total.denominator != 1:
            raise ValueError("evaluation is not an integer")
        return int(total)

    def to_json(self):
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c:+d}")
            elif e == 1:
                parts.append(f"{c:+d}*q")
            else:
                parts.append(f"{c:+d}*q^{e}")
        return "".join(parts)


class Laurent2:
    """Laurent polynomial in two variables (q, t), integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for (eq, et), c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if c:
                    key = (eq, et)
                    nc = self.coeffs.get(key, 0) + c
                    if nc:
                        self.coeffs[key] = nc
                    else:
                        self.coeffs.pop(key, None)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            else:
                out.pop(k, None)
        p = Laurent2.__new__(Laurent2)
        p.coeffs = out
        return p

    def __eq__(self, other):
        return isinstance(other, Laurent2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def specialize_t(self, value):
        """Substitute an integer for t, returning a one-variable polynomial in q."""
        terms = []
        for (eq, et), c in self.coeffs.items():
            if et < 0 and abs(value) != 1:
                raise ValueError("cannot specialize t to a non-unit with negative exponents")
            scale = value ** abs(et) if abs(value) == 1 else value**et
            terms.append((eq, c * scale))
        return Laurent(terms)

    def to_json(self):
        return {f"{eq},{et}": c for (eq, et), c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (eq, et) in sorted(self.coeffs):
            c = self.coeffs[(eq, et)]
            parts.append(f"{c:+d}*q^{eq}*t^{et}")
        return "".join(parts)
