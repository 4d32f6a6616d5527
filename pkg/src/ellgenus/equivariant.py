"""S^1-equivariant genus characters from isolated fixed point data.

Each fixed point contributes a rational function of the standard character
lambda; the character of the manifold is the sum over fixed points:

    signature   sign * prod_j (lam^m + 1)/(lam^m - 1)
    A-hat       sign * prod_j 1/(mu^m - mu^-m)                  (lam = mu^2)
    elliptic    sign * prod_j F(lam^m, q) * N(q)^(dim/2)

    F(y, q) = (y+1)/(y-1) * prod_{n>=1} (1+q^n y)(1+q^n/y) / ((1-q^n y)(1-q^n/y))
    N(q)    = prod_{n>=1} (1-q^n)^2 / (1+q^n)^2

For data coming from a closed manifold the signature and elliptic sums are
Laurent polynomials in every q-degree.  The A-hat sum need not be one when
the manifold is not spin; that is reported, not raised.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .ratfunc import LaurentPolynomial, NotPolynomial, RationalFunction, poly_mul
from .series import Series


@dataclass(frozen=True)
class FixedPointDatum:
    sign: int
    weights: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1, got %r" % (self.sign,))
        weights = tuple(int(m) for m in self.weights)
        if not weights:
            raise ValueError("a fixed point needs at least one weight")
        if any(m == 0 for m in weights):
            raise ValueError("zero weight: fixed point is not isolated")
        object.__setattr__(self, "weights", weights)


@dataclass(frozen=True)
class FixedPointData:
    dim: int
    points: tuple = ()

    def __post_init__(self):
        if self.dim < 0 or self.dim % 2:
            raise ValueError("dimension must be even and non-negative, got %r" % (self.dim,))
        points = tuple(p if isinstance(p, FixedPointDatum) else FixedPointDatum(*p) for p in self.points)
        for p in points:
            if 2 * len(p.weights) != self.dim:
                raise ValueError("fixed point %r does not have dim/2 = %d weights" % (p, self.dim // 2))
        object.__setattr__(self, "points", points)

    def __len__(self):
        return len(self.points)

    def __add__(self, other: "FixedPointData") -> "FixedPointData":
        """Disjoint union."""
        if other.dim != self.dim:
            raise ValueError("dimension mismatch: %d vs %d" % (self.dim, other.dim))
        return FixedPointData(self.dim, self.points + other.points)


@dataclass(frozen=True)
class EquivariantCharacter:
    kind: str
    var: str
    q_order: int
    per_q: tuple
    polynomial_form: tuple | None = None

    def __post_init__(self):
        if len(self.per_q) != self.q_order:
            raise ValueError("need one coefficient per q-degree")

    def __eq__(self, other):
        if not isinstance(other, EquivariantCharacter):
            return NotImplemented
        return (self.kind, self.var, self.per_q) == (other.kind, other.var, other.per_q)

    def __hash__(self):
        return hash((self.kind, self.var, self.per_q))

    def __add__(self, other):
        _compatible(self, other)
        return EquivariantCharacter(self.kind, self.var, self.q_order,
                                    tuple(a + b for a, b in zip(self.per_q, other.per_q)))

    def __neg__(self):
        return EquivariantCharacter(self.kind, self.var, self.q_order, tuple(-a for a in self.per_q))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.per_q)

    def substitute_inverse(self) -> "EquivariantCharacter":
        return EquivariantCharacter(self.kind, self.var, self.q_order,
                                    tuple(c.substitute_inverse() for c in self.per_q))


def _compatible(a, b):
    if (a.kind, a.var, a.q_order) != (b.kind, b.var, b.q_order):
        raise ValueError("characters of different type or precision")


def _sum(terms, var):
    total = RationalFunction.constant(0, var)
    for t in terms:
        total = total + t
    return total


def _sign(m):
    return 1 if m > 0 else -1


def _binomial_poly(m, c):
    """var^m + c as a dense coefficient list."""
    return [c] + [0] * (m - 1) + [1]


# -- local contributions ------------------------------------------------------

def signature_contribution(p: FixedPointDatum) -> RationalFunction:
    num, den = (Fraction(p.sign),), (Fraction(1),)
    for m in p.weights:
        a = abs(m)
        num = poly_mul(num, tuple(Fraction(_sign(m) * c) for c in _binomial_poly(a, 1)))
        den = poly_mul(den, tuple(Fraction(c) for c in _binomial_poly(a, -1)))
    return RationalFunction(num, den, "lam")


def ahat_contribution(p: FixedPointDatum) -> RationalFunction:
    # 1/(mu^m - mu^-m) = sign(m) * mu^|m| / (mu^{2|m|} - 1)
    shift = sum(abs(m) for m in p.weights)
    sgn = p.sign
    den = (Fraction(1),)
    for m in p.weights:
        sgn *= _sign(m)
        den = poly_mul(den, tuple(Fraction(c) for c in _binomial_poly(2 * abs(m), -1)))
    num = (Fraction(0),) * shift + (Fraction(sgn),)
    return RationalFunction(num, den, "mu")


@lru_cache(maxsize=None)
def _twist_factor(m: int, q_order: int) -> Series:
    """prod_{n<q_order} (1+q^n y)(1+q^n/y)/((1-q^n y)(1-q^n/y)), y = lam^m, as q-series of Laurent polynomials."""
    one = LaurentPolynomial({0: 1})
    out = Series([one], "q", q_order)
    for n in range(1, q_order):
        for e in (m, -m):
            top = q_order // n + 1
            numer = [one] + [0] * (q_order - 1)
            numer[n] = LaurentPolynomial({e: 1})
            # 1/(1 - q^n y) = sum_k q^{nk} y^k
            geo = [0] * q_order
            for k in range(top):
                if n * k < q_order:
                    geo[n * k] = LaurentPolynomial({e * k: 1})
            out = out * Series(numer, "q") * Series(geo, "q")
    return out


@lru_cache(maxsize=None)
def _normalisation(q_order: int) -> Series:
    one = Series.one("q", q_order)
    out = one
    for n in range(1, q_order):
        qn = Series.monomial("q", n, q_order)
        out = out * ((one - qn) / (one + qn)) ** 2
    return out


def elliptic_contribution(p: FixedPointDatum, q_order: int) -> tuple:
    """Per-q-degree contribution of one fixed point, including N(q)^(dim/2)."""
    if q_order < 1:
        raise ValueError("q_order must be >= 1")
    pre = signature_contribution(p)
    body = _normalisation(q_order) ** len(p.weights)
    body = Series([LaurentPolynomial({0: c}) for c in body], "q")
    for m in p.weights:
        body = body * _twist_factor(abs(m), q_order)
    return tuple(pre * _as_ratfunc(c) for c in body)


def _as_ratfunc(c):
    if isinstance(c, LaurentPolynomial):
        return c.to_rational_function()
    return RationalFunction.constant(c)


# -- characters ---------------------------------------------------------------

def signature_character(data: FixedPointData) -> EquivariantCharacter:
    return EquivariantCharacter("signature", "lam", 1,
                                (_sum((signature_contribution(p) for p in data.points), "lam"),))


def ahat_character(data: FixedPointData) -> EquivariantCharacter:
    return EquivariantCharacter("ahat", "mu", 1, (_sum((ahat_contribution(p) for p in data.points), "mu"),))


def elliptic_character(data: FixedPointData, q_order: int) -> EquivariantCharacter:
    if q_order < 1:
        raise ValueError("q_order must be >= 1")
    contributions = [elliptic_contribution(p, q_order) for p in data.points]
    per_q = tuple(_sum((c[n] for c in contributions), "lam") for n in range(q_order))
    return EquivariantCharacter("elliptic", "lam", q_order, per_q)


def character(data: FixedPointData, kind: str, q_order: int = 1) -> EquivariantCharacter:
    if kind == "signature":
        return signature_character(data)
    if kind == "ahat":
        return ahat_character(data)
    if kind == "elliptic":
        return elliptic_character(data, q_order)
    raise ValueError("unknown character type %r" % (kind,))


def contribution(p: FixedPointDatum, kind: str, q_order: int = 1) -> tuple:
    if kind == "signature":
        return (signature_contribution(p),)
    if kind == "ahat":
        return (ahat_contribution(p),)
    if kind == "elliptic":
        return elliptic_contribution(p, q_order)
    raise ValueError("unknown character type %r" % (kind,))


# -- checks -------------------------------------------------------------------

@dataclass
class PolynomialityReport:
    passed: bool
    failures: list  # (q-degree, reason)
    character: EquivariantCharacter


def polynomiality_check(ch: EquivariantCharacter) -> PolynomialityReport:
    forms, failures = [], []
    for n, f in enumerate(ch.per_q):
        try:
            forms.append(f.to_laurent())
        except NotPolynomial as exc:
            failures.append((n, str(exc)))
    if failures:
        return PolynomialityReport(False, failures, replace(ch, polynomial_form=None))
    return PolynomialityReport(True, [], replace(ch, polynomial_form=tuple(forms)))


@dataclass
class RigidityReport:
    is_character: bool
    is_rigid: bool
    offenders: list = field(default_factory=list)  # (n, k, a_nk) with k != 0
    constants: list = field(default_factory=list)  # a_n0 per q-degree, when a character

    def __str__(self):
        if not self.is_character:
            return "NOT A CHARACTER (pole away from 0)"
        if self.is_rigid:
            if all(c == 0 for c in self.constants):
                return "RIGID (all coefficients 0)"
            return "RIGID"
        lines = ["NON-RIGID"]
        lines += ["  a[%d,%d] = %s" % (n, k, a) for n, k, a in self.offenders]
        return "\n".join(lines)


def rigidity_check(ch: EquivariantCharacter) -> RigidityReport:
    report = polynomiality_check(ch)
    if not report.passed:
        return RigidityReport(False, False)
    offenders = [(n, k, a)
                 for n, lp in enumerate(report.character.polynomial_form)
                 for k, a in lp.items() if k != 0]
    constants = [lp.coefficient(0) for lp in report.character.polynomial_form]
    return RigidityReport(True, not offenders, offenders, constants)


def evaluate_at_one(ch: EquivariantCharacter):
    """Value at lam = 1 (mu = 1): the non-equivariant genus.

    A Fraction for single-q-degree characters, otherwise a q-series.
    Raises ZeroDivisionError when a coefficient has a pole at 1.
    """
    values = []
    for n, f in enumerate(ch.per_q):
        if ch.polynomial_form is not None:
            values.append(ch.polynomial_form[n].evaluate(1))
        else:
            values.append(f.evaluate(1))
    if ch.q_order == 1:
        return values[0]
    return Series(values, "q")
