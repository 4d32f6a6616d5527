"""Genera from Pontryagin numbers.

A genus is fixed by two parameters (delta, eps): its logarithm has derivative
g'(u) = (1 - 2*delta*u^2 + eps*u^4)^(-1/2), the value on CP^{2i} is the
u^{2i} coefficient of g', and the characteristic power series is
Q(x) = x / g^{-1}(x).  Multiplicative sequences turn Q into polynomials in
Pontryagin classes.

delta and eps are either Fractions or q-series (:class:`Series` in ``q``);
the universal elliptic genus uses the latter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .series import Series, is_zero, pow_rational, reversion

MAX_K = 4


class ConsistencyError(ArithmeticError):
    """An internal cross-check failed."""


@dataclass(frozen=True)
class GenusSpec:
    delta: Any
    eps: Any
    q_order: int = 0
    name: str = "custom"
    # characteristic series given independently of (delta, eps), e.g. the
    # product form of the twisted signature genus
    char_series: Series | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.delta, Series) != isinstance(self.eps, Series):
            raise TypeError("delta and eps must live in the same coefficient ring")


SIGNATURE = GenusSpec(Fraction(1), Fraction(1), name="signature")
AHAT = GenusSpec(Fraction(-1, 8), Fraction(0), name="ahat")


def log_derivative(spec: GenusSpec, u_order: int) -> Series:
    if u_order < 1:
        raise ValueError("u_order must be >= 1")
    base = Series([1, 0, -2 * spec.delta, 0, spec.eps], "u", u_order)
    return pow_rational(base, Fraction(-1, 2))


def logarithm(spec: GenusSpec, u_order: int) -> Series:
    """g(u) with terms of degree < u_order."""
    return log_derivative(spec, max(u_order - 1, 1)).integral().truncate(u_order)


def cp_coefficients(spec: GenusSpec, max_i: int) -> list:
    """[phi(CP^0), phi(CP^2), ..., phi(CP^{2*max_i})]."""
    g1 = log_derivative(spec, 2 * max_i + 1)
    return [g1[2 * i] for i in range(max_i + 1)]


def characteristic_series(spec: GenusSpec, x_order: int) -> Series:
    """Q(x) = x / g^{-1}(x) with terms of degree < x_order."""
    if x_order < 1:
        raise ValueError("x_order must be >= 1")
    if spec.char_series is not None:
        return spec.char_series.truncate(x_order)
    g = logarithm(spec, x_order + 1)
    ginv = reversion(Series(g.coeffs, "x"))
    return Series(ginv.coeffs[1:], "x").inverse()


# -- partitions and multiplicative sequences ----------------------------------

@lru_cache(maxsize=None)
def partitions(k: int) -> tuple:
    """Partitions of k as weakly decreasing tuples, in lexicographic order."""
    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest
    return tuple(sorted(gen(k, k)))


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


def _emul(a: dict, b: dict, k: int) -> dict:
    out = {}
    for pa, ca in a.items():
        for pb, cb in b.items():
            if sum(pa) + sum(pb) > k:
                continue
            p = _merge(pa, pb)
            out[p] = out[p] + ca * cb if p in out else ca * cb
    return {p: c for p, c in out.items() if not is_zero(c)}


def _eadd(a: dict, b: dict) -> dict:
    out = dict(a)
    for p, c in b.items():
        out[p] = out[p] + c if p in out else c
    return {p: c for p, c in out.items() if not is_zero(c)}


@lru_cache(maxsize=None)
def power_sums_in_elementary(k: int) -> tuple:
    """Newton's identities: power sums P_1..P_k as integer polynomials in e_1..e_k."""
    P = [None]
    for j in range(1, k + 1):
        acc = {(j,): Fraction((-1) ** (j - 1) * j)}
        for i in range(1, j):
            term = _emul({(i,): Fraction((-1) ** (i - 1))}, P[j - i], k)
            acc = _eadd(acc, term)
        P.append(acc)
    return tuple(P)


def multiplicative_sequence(Q: Series, k: int) -> dict:
    """Coefficients K_pi (pi a partition of k) with genus = sum K_pi * p_pi.

    Writes Q(x) = Qt(x^2); log prod_i Qt(z_i) = sum_j c_j P_j(z) where
    log Qt = sum c_j z^j, rewrites the power sums P_j in elementary symmetric
    functions (the Pontryagin classes) and exponentiates.
    """
    if k < 0 or k > MAX_K:
        raise ValueError("k must be in 0..%d" % MAX_K)
    if Q.order < 2 * k + 1:
        raise ValueError("need Q to order %d, have %d" % (2 * k + 1, Q.order))
    if Q[0] != 1:
        raise ValueError("Q(0) must be 1")
    if k == 0:
        return {(): Fraction(1)}
    Qt = Series(Q.coeffs[: 2 * k + 1], Q.var).even_part_in_square()
    c = Qt.log()
    P = power_sums_in_elementary(k)
    L = {}
    for j in range(1, k + 1):
        if not is_zero(c[j]):
            L = _eadd(L, {p: v * c[j] for p, v in P[j].items()})
    total = {(): Fraction(1)}
    power = {(): Fraction(1)}
    for m in range(1, k + 1):
        power = _emul(power, L, k)
        total = _eadd(total, {p: v * Fraction(1, math.factorial(m)) for p, v in power.items()})
    return {p: total.get(p, Fraction(0)) for p in partitions(k)}


# -- Pontryagin data ----------------------------------------------------------

def parse_partition(key) -> tuple:
    if isinstance(key, str):
        key = [int(s) for s in key.split(",") if s.strip()] if key.strip() else []
    parts = tuple(sorted((int(p) for p in key), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive: %r" % (key,))
    return parts


@dataclass(frozen=True)
class PontryaginData:
    dim: int
    numbers: dict

    def __post_init__(self):
        if self.dim < 0 or self.dim % 4:
            raise ValueError("dimension %d is not divisible by 4" % self.dim)
        k = self.dim // 4
        clean = {}
        for key, value in self.numbers.items():
            p = parse_partition(key)
            if sum(p) != k:
                raise ValueError("partition %r does not have weight %d (dim %d)" % (p, k, self.dim))
            clean[p] = Fraction(value)
        object.__setattr__(self, "numbers", clean)

    @property
    def k(self) -> int:
        return self.dim // 4

    def number(self, p) -> Fraction:
        return self.numbers.get(parse_partition(p), Fraction(0))


def _genus_from_series(data: PontryaginData, Q: Series):
    K = multiplicative_sequence(Q, data.k)
    total = Fraction(0)
    for p, coeff in K.items():
        n = data.number(p)
        if n and not is_zero(coeff):
            total = total + coeff * n
    return total


def evaluate_genus(data: PontryaginData, spec: GenusSpec):
    """The genus of a manifold with the given Pontryagin numbers (a Fraction or q-series)."""
    return _genus_from_series(data, characteristic_series(spec, 2 * data.k + 1))


def pontryagin_of_projective_product(ns) -> PontryaginData:
    """Pontryagin numbers of CP^{n_1} x ... x CP^{n_r}.

    The total class is prod_i (1 + h_i^2)^{n_i + 1} with h_i^{n_i + 1} = 0;
    numbers are read off as coefficients of h_1^{n_1} ... h_r^{n_r}.
    """
    ns = [int(n) for n in ns]
    if any(n < 0 for n in ns):
        raise ValueError("negative projective dimension")
    real_dim = 2 * sum(ns)
    if real_dim % 4:
        raise ValueError("total dimension %d is not divisible by 4" % real_dim)
    r = len(ns)
    # total Pontryagin class as {exponent tuple: integer}
    total = {(0,) * r: 1}
    for i, n in enumerate(ns):
        factor = {}
        for j in range(n // 2 + 1):
            e = [0] * r
            e[i] = 2 * j
            factor[tuple(e)] = math.comb(n + 1, j)
        total = _hmul(total, factor, ns)
    k = real_dim // 4
    classes = [{} for _ in range(k + 1)]
    for e, c in total.items():
        classes[sum(e) // 2][e] = c
    top = tuple(ns)
    numbers = {}
    for p in partitions(k):
        prod = {(0,) * r: 1}
        for part in p:
            prod = _hmul(prod, classes[part], ns)
        numbers[p] = Fraction(prod.get(top, 0))
    return PontryaginData(real_dim, numbers)


def _hmul(a, b, ns):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(x > n for x, n in zip(e, ns)):
                continue
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def connected_sum_pontryagin(a: PontryaginData, b: PontryaginData) -> PontryaginData:
    """Pontryagin numbers of a # b: positive-degree classes split, so numbers add."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch: %d vs %d" % (a.dim, b.dim))
    if a.dim < 4:
        raise ValueError("connected sum needs dimension >= 4")
    keys = set(a.numbers) | set(b.numbers)
    return PontryaginData(a.dim, {p: a.number(p) + b.number(p) for p in sorted(keys)})


# -- the universal elliptic genus ---------------------------------------------

def _exp_series(scale, order: int) -> Series:
    return Series([Fraction(scale) ** n / math.factorial(n) for n in range(order)], "x")


def twisted_signature_series(q_order: int, x_order: int) -> Series:
    """Q(x, q) for the signature operator twisted by
    (x) S_{q^n} T (x) Lambda_{q^n} T, normalised so that Q(0, q) = 1:

        x coth x * prod_{n>=1} (1+q^n y)(1+q^n/y)(1-q^n)^2 / ((1-q^n y)(1-q^n/y)(1+q^n)^2),

    y = e^{2x}.  The result is a series in x with q-series coefficients.
    """
    if q_order < 1 or x_order < 1:
        raise ValueError("orders must be >= 1")
    one_q = Series.one("q", q_order)
    y = _exp_series(2, x_order + 1)
    yinv = _exp_series(-2, x_order)
    # x coth x = (y + 1) / ((y - 1) / x)
    numer = (y + 1).truncate(x_order)
    denom = Series((y - 1).coeffs[1:], "x")
    Q = (numer / denom) * one_q
    y = y.truncate(x_order)
    for n in range(1, q_order):
        qn = Series.monomial("q", n, q_order)
        norm = ((1 - qn) / (1 + qn)) ** 2
        Q = Q * ((1 + y * qn) * (1 + yinv * qn)) / ((1 - y * qn) * (1 - yinv * qn)) * norm
    return Q


def universal_elliptic_spec(q_order: int, x_order: int = 2 * MAX_K + 1) -> GenusSpec:
    """The elliptic genus with delta(q), eps(q) read off from the twisted signature series.

    delta = phi(CP^2), eps = 3*delta^2 - 2*phi(CP^4).  Raises ConsistencyError
    if the series fails Q(0, q) = 1, its q^0 part is not the signature series,
    or the resulting (delta, eps) do not reproduce phi(CP^{2i}) for every i
    that x_order allows.
    """
    if x_order < 6:
        raise ValueError("x_order must be >= 6")
    Q = twisted_signature_series(q_order, x_order)
    if Q[0] != 1:
        raise ConsistencyError("Q(0, q) != 1")
    sig = characteristic_series(SIGNATURE, x_order)
    if [c[0] for c in Q] != list(sig):
        raise ConsistencyError("q^0 part is not the signature series")
    cp2 = _genus_from_series(pontryagin_of_projective_product([2]), Q)
    cp4 = _genus_from_series(pontryagin_of_projective_product([4]), Q)
    delta = one_q_series(cp2, q_order)
    eps = (3 * delta * delta - 2 * one_q_series(cp4, q_order))
    spec = GenusSpec(delta, eps, q_order, name="elliptic", char_series=Q)
    report = ellipticity_check(spec, (x_order - 1) // 2)
    if not report.passed:
        raise ConsistencyError("ellipticity check failed at i=%s" % report.mismatches)
    return spec


def one_q_series(c, q_order: int) -> Series:
    if isinstance(c, Series):
        return c
    return Series([c], "q", q_order)


@dataclass
class EllipticityReport:
    passed: bool
    from_sequences: list
    from_logarithm: list
    mismatches: list

    def __str__(self):
        lines = []
        for i, (a, b) in enumerate(zip(self.from_sequences, self.from_logarithm)):
            mark = "ok" if i not in self.mismatches else "MISMATCH"
            lines.append("CP^%d: %s | %s  %s" % (2 * i, a, b, mark))
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def ellipticity_check(spec: GenusSpec, max_i: int) -> EllipticityReport:
    """Compare phi(CP^{2i}) from multiplicative sequences with the u^{2i} coefficient of g'."""
    if max_i > MAX_K:
        raise ValueError("max_i must be <= %d" % MAX_K)
    Q = characteristic_series(spec, 2 * max_i + 1)
    seq = [_genus_from_series(pontryagin_of_projective_product([2 * i]), Q) for i in range(max_i + 1)]
    log = cp_coefficients(spec, max_i)
    bad = [i for i, (a, b) in enumerate(zip(seq, log)) if not _coeff_equal(a, b)]
    return EllipticityReport(not bad, seq, log, bad)


def _coeff_equal(a, b) -> bool:
    if isinstance(b, Series) and not isinstance(a, Series):
        a, b = b, a
    return a == b
