"""Truncated power series in one formal variable.

Coefficients live in any exact commutative ring that accepts Fraction
operands: ``Fraction`` itself, :class:`~ellgenus.ratfunc.RationalFunction`,
or another :class:`Series` in a different variable (so ``Q[[q]][[x]]`` is a
series in ``x`` whose coefficients are series in ``q``).

A series stores the coefficients of x^0 .. x^(order-1); everything from
x^order on is unknown.  Binary operations never claim more precision than
the less precise operand.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def reciprocal(c):
    if isinstance(c, (int, Rational)):
        return Fraction(1) / c
    return 1 / c


def is_zero(c) -> bool:
    if isinstance(c, (int, Rational)):
        return c == 0
    return c.is_zero()


class Series:
    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs, var: str = "x", order: int | None = None):
        coeffs = [Fraction(c) if isinstance(c, (int, Rational)) else c for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            coeffs = coeffs[:order] + [Fraction(0)] * (order - len(coeffs))
        self.var = var
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, var: str, order: int) -> "Series":
        return cls([1], var, order)

    @classmethod
    def monomial(cls, var: str, n: int, order: int, coeff=1) -> "Series":
        return cls([0] * n + [coeff], var, order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int):
        if n >= self.order:
            raise IndexError("x^%d is beyond the known precision O(%s^%d)" % (n, self.var, self.order))
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.order

    def __repr__(self):
        return "Series(%r, var=%r)" % (list(self.coeffs), self.var)

    def __str__(self):
        from .formatting import format_series
        return format_series(self)

    # -- structure -------------------------------------------------------

    def _same_ring(self, other) -> bool:
        return isinstance(other, Series) and other.var == self.var

    def _check(self, other):
        """True if ``other`` belongs to an outer ring that should handle the operation."""
        if isinstance(other, Series) and other.var != self.var:
            inner = other._coefficient_var()
            if inner == self.var:
                return True
            if inner is not None or self._coefficient_var() not in (None, other.var):
                raise ValueError("variable mismatch: %s vs %s" % (self.var, other.var))
        return False

    def _coefficient_var(self):
        for c in self.coeffs:
            if isinstance(c, Series):
                return c.var
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot raise precision from %d to %d" % (self.order, order))
        return Series(self.coeffs[:order], self.var)

    def map(self, f) -> "Series":
        return Series([f(c) for c in self.coeffs], self.var)

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if not is_zero(c):
                return n
        return None

    def is_even(self) -> bool:
        return all(is_zero(c) for c in self.coeffs[1::2])

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.var)

    def __pos__(self):
        return self

    def __add__(self, other):
        if self._check(other):
            return NotImplemented
        if self._same_ring(other):
            n = min(self.order, other.order)
            return Series([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], self.var)
        if self.order == 0:
            return self
        return Series((self.coeffs[0] + other,) + self.coeffs[1:], self.var)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._check(other):
            return NotImplemented
        if not self._same_ring(other):
            return Series([c * other for c in self.coeffs], self.var)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            acc = Fraction(0)
            for i in range(k + 1):
                if is_zero(a[i]) or is_zero(b[k - i]):
                    continue
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, self.var)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.var)

    def inverse(self) -> "Series":
        if self.order == 0:
            return self
        a0 = self.coeffs[0]
        if is_zero(a0):
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = reciprocal(a0)
        out = [inv0]
        for k in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if not is_zero(self.coeffs[i]):
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-acc * inv0)
        return Series(out, self.var)

    def __truediv__(self, other):
        if self._check(other):
            return NotImplemented
        if self._same_ring(other):
            n = min(self.order, other.order)
            return self.truncate(n) * other.truncate(n).inverse()
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        return other * self.inverse()

    def __pow__(self, e):
        if isinstance(e, int) and e >= 0:
            out = Series.one(self.var, self.order)
            base = self
            while e:
                if e & 1:
                    out = out * base
                base = base * base
                e >>= 1
            return out
        return pow_rational(self, Fraction(e))

    def __eq__(self, other):
        if isinstance(other, Series) and other.var == self.var:
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)) or isinstance(other, Series):
            if self.order == 0:
                return False
            return self.coeffs[0] == other and all(is_zero(c) for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    # -- calculus --------------------------------------------------------

    def derivative(self) -> "Series":
        return Series([n * c for n, c in enumerate(self.coeffs) if n > 0], self.var)

    def integral(self) -> "Series":
        """Antiderivative with zero constant term; one order more precise."""
        return Series([Fraction(0)] + [c * Fraction(1, n + 1) for n, c in enumerate(self.coeffs)], self.var)

    def log(self) -> "Series":
        if self.order == 0:
            return self
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        return (self.derivative() / self.truncate(self.order - 1)).integral()

    def compose(self, inner: "Series") -> "Series":
        """self(inner), for ``inner`` with zero constant term."""
        if inner.var != self.var:
            raise ValueError("variable mismatch: %s vs %s" % (self.var, inner.var))
        if inner.order and not is_zero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        out = Series([0], self.var, n)
        for c in reversed(self.coeffs[:n]):
            out = out * inner.truncate(n) + c
        return out

    def even_part_in_square(self, var: str | None = None) -> "Series":
        """For an even series f(x), the series h with h(x^2) = f(x)."""
        if not self.is_even():
            raise ValueError("series has odd terms")
        return Series(self.coeffs[::2], var or self.var)


def pow_rational(a: Series, e) -> Series:
    """a**e for rational e via the recurrence coming from a*f' = e*a'*f.

    Requires a(0) == 1; the result has a's precision.
    """
    e = Fraction(e)
    if a.order == 0:
        return a
    if a.coeffs[0] != 1:
        raise ValueError("constant term must be 1, got %s" % (a.coeffs[0],))
    c = a.coeffs
    f = [Fraction(1)]
    for n in range(1, a.order):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if is_zero(c[k]):
                continue
            acc = acc + (e * k - (n - k)) * c[k] * f[n - k]
        f.append(acc * Fraction(1, n))
    return Series(f, a.var)


def reversion(a: Series) -> Series:
    """Compositional inverse b with a(b(x)) = x to a's precision.

    Coefficients are fixed one degree at a time: perturbing b by t*x^n changes
    a(b) by a1*t*x^n plus higher order terms.
    """
    if a.order < 2:
        raise ValueError("need at least the linear coefficient")
    if not is_zero(a.coeffs[0]):
        raise ValueError("series must vanish at 0")
    a1 = a.coeffs[1]
    if is_zero(a1):
        raise ZeroDivisionError("linear coefficient is not invertible")
    inv1 = reciprocal(a1)
    b = [Fraction(0), inv1] + [Fraction(0)] * (a.order - 2)
    for n in range(2, a.order):
        err = a.compose(Series(b, a.var))[n]
        b[n] = -err * inv1
    return Series(b, a.var)
