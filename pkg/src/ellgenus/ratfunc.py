"""Laurent polynomials and reduced rational functions in one variable.

Dense polynomials are plain tuples of Fractions, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class NotPolynomial(ValueError):
    """A rational function has a pole away from 0 and is not a Laurent polynomial."""


# -- dense polynomial helpers -------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_neg(a):
    return tuple(-c for c in a)


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _trim(out)


def poly_scale(a, c):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(a) <= db:
        return (), _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        c = c / lead
        quot[k - db] = c
        for i in range(db + 1):
            a[k - db + i] -= c * b[i]
    return _trim(quot), _trim(a[:db])


def poly_monic(a):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(c / lead for c in a)


def poly_gcd(a, b):
    """Monic gcd by Euclid's algorithm over Q; gcd(0, 0) = 0."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_monic(poly_divmod(a, b)[1])
    return poly_monic(a)


def poly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _as_poly(c):
    c = Fraction(c)
    return (c,) if c else ()


# -- Laurent polynomials ------------------------------------------------------

class LaurentPolynomial:
    """Finite sum of c_k * var^k, k in Z; zero coefficients are never stored."""

    __slots__ = ("var", "terms")

    def __init__(self, terms=None, var: str = "lam"):
        self.var = var
        self.terms = {int(k): Fraction(c) for k, c in dict(terms or {}).items() if c != 0}

    def __repr__(self):
        return "LaurentPolynomial(%r, var=%r)" % (dict(sorted(self.terms.items())), self.var)

    def __str__(self):
        from .formatting import format_laurent
        return format_laurent(self)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, k: int) -> Fraction:
        return self.terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return set(self.terms) <= {0}

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**k for k, c in self.terms.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.var == other.var and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.var, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = LaurentPolynomial({0: other}, self.var)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return LaurentPolynomial({k: c * other for k, c in self.terms.items()}, self.var)
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def substitute_inverse(self) -> "LaurentPolynomial":
        return LaurentPolynomial({-k: c for k, c in self.terms.items()}, self.var)

    def to_rational_function(self) -> "RationalFunction":
        if not self.terms:
            return RationalFunction((), (Fraction(1),), self.var)
        low = min(self.terms)
        shift = min(low, 0)
        num = [Fraction(0)] * (max(self.terms) - shift + 1)
        for k, c in self.terms.items():
            num[k - shift] = c
        den = [Fraction(0)] * (-shift) + [Fraction(1)]
        return RationalFunction(num, den, self.var, reduced=True)


# -- rational functions -------------------------------------------------------

class RationalFunction:
    """numerator/denominator with gcd 1 and a monic denominator."""

    __slots__ = ("var", "num", "den")

    def __init__(self, num, den=(1,), var: str = "lam", reduced: bool = False):
        num = _trim(Fraction(c) for c in num)
        den = _trim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (Fraction(1),)
        elif not reduced:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.var = var
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c, var: str = "lam") -> "RationalFunction":
        return cls(_as_poly(c), (Fraction(1),), var, reduced=True)

    @classmethod
    def monomial(cls, k: int, var: str = "lam", coeff=1) -> "RationalFunction":
        if k >= 0:
            return cls([0] * k + [coeff], (1,), var, reduced=True)
        return cls([coeff], [0] * (-k) + [1], var, reduced=True)

    def __repr__(self):
        return "RationalFunction(%r, %r, var=%r)" % (list(self.num), list(self.den), self.var)

    def __str__(self):
        from .formatting import format_ratfunc
        return format_ratfunc(self)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise ValueError("variable mismatch: %s vs %s" % (self.var, other.var))
            return other
        if isinstance(other, (int, Rational)):
            return RationalFunction.constant(other, self.var)
        if isinstance(other, LaurentPolynomial):
            return self._coerce(other.to_rational_function())
        return None

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    def __neg__(self):
        return RationalFunction(poly_neg(self.num), self.den, self.var, reduced=True)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RationalFunction(poly_add(self.num, o.num), self.den, self.var)
        g = poly_gcd(self.den, o.den)
        da = poly_divmod(self.den, g)[0]
        db = poly_divmod(o.den, g)[0]
        num = poly_add(poly_mul(self.num, db), poly_mul(o.num, da))
        return RationalFunction(num, poly_mul(da, o.den), self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return RationalFunction(poly_scale(self.num, Fraction(other)), self.den, self.var, reduced=True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RationalFunction.constant(0, self.var)
        # cross-cancel first so the products stay small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        a, d = poly_divmod(self.num, g1)[0], poly_divmod(o.den, g1)[0]
        b, c = poly_divmod(o.num, g2)[0], poly_divmod(self.den, g2)[0]
        return RationalFunction(poly_mul(a, b), poly_mul(c, d), self.var, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num, self.var, reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFunction.constant(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        d = poly_eval(self.den, x)
        if d == 0:
            raise ZeroDivisionError("pole at %s = %s" % (self.var, x))
        return poly_eval(self.num, x) / d

    def substitute_inverse(self) -> "RationalFunction":
        """f(1/var), still as a reduced rational function in var."""
        if not self.num:
            return self
        shift = (len(self.den) - 1) - (len(self.num) - 1)
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        if shift >= 0:
            num = (Fraction(0),) * shift + num
        else:
            den = (Fraction(0),) * (-shift) + den
        return RationalFunction(num, den, self.var)

    def to_laurent(self) -> LaurentPolynomial:
        """Exact Laurent polynomial; NotPolynomial if the denominator is not a power of var."""
        d = len(self.den) - 1
        if any(self.den[:d]):
            raise NotPolynomial("pole away from 0: denominator %s" % (self._den_str(),))
        return LaurentPolynomial({i - d: c for i, c in enumerate(self.num)}, self.var)

    def _den_str(self):
        from .formatting import format_poly
        return format_poly(self.den, self.var)


def ratfunc_to_laurent(f: RationalFunction) -> LaurentPolynomial:
    return f.to_laurent()
