"""Fixed point data of standard S^1-manifolds and ways of combining them."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .equivariant import FixedPointData, FixedPointDatum


class NonIsolatedFixedSet(ValueError):
    pass


class GluingMismatch(ValueError):
    pass


def linear_cpn(a) -> FixedPointData:
    """CP^n with g.[z_0 : ... : z_n] = [g^{a_0} z_0 : ... : g^{a_n} z_n].

    The fixed point e_i has tangent weights a_j - a_i (j != i), complex orientation.
    """
    a = [int(x) for x in a]
    if len(a) < 2:
        raise ValueError("need at least two exponents")
    repeated = [x for x, c in Counter(a).items() if c > 1]
    if repeated:
        raise NonIsolatedFixedSet("non-isolated fixed set: exponent %d repeats" % repeated[0])
    points = [FixedPointDatum(1, tuple(aj - ai for j, aj in enumerate(a) if j != i))
              for i, ai in enumerate(a)]
    return FixedPointData(2 * (len(a) - 1), tuple(points))


def sphere_of_representation(a) -> FixedPointData:
    """Unit sphere S(V + R), V the sum of the weight-a_i representations.

    The two poles have the same weights and opposite orientation signs.
    """
    a = tuple(int(x) for x in a)
    if not a:
        raise ValueError("need at least one weight")
    if any(x == 0 for x in a):
        raise ValueError("zero weight")
    return FixedPointData(2 * len(a), (FixedPointDatum(1, a), FixedPointDatum(-1, a)))


def product(d1: FixedPointData, d2: FixedPointData) -> FixedPointData:
    if d1.dim == 0 or d2.dim == 0:
        raise ValueError("factors must have positive dimension (a fixed point needs weights)")
    points = tuple(FixedPointDatum(p.sign * r.sign, p.weights + r.weights)
                   for p in d1.points for r in d2.points)
    return FixedPointData(d1.dim + d2.dim, points)


def orientation_reverse(d: FixedPointData) -> FixedPointData:
    return FixedPointData(d.dim, tuple(FixedPointDatum(-p.sign, p.weights) for p in d.points))


def gluing_compatible(p: FixedPointDatum, r: FixedPointDatum) -> bool:
    """Whether the tangent representations at p and r are isomorphic with opposite orientations.

    The weights must agree up to sign.  Reversing the sign of one weight
    reverses orientation, so the number of sign disagreements has to be odd
    when the orientation signs agree and even when they differ.  Its parity
    is the parity of the total count of negative weights, whatever the pairing.
    """
    if Counter(abs(m) for m in p.weights) != Counter(abs(m) for m in r.weights):
        return False
    negatives = sum(m < 0 for m in p.weights) + sum(m < 0 for m in r.weights)
    return negatives % 2 == (1 if p.sign == r.sign else 0)


def equivariant_connected_sum(d1: FixedPointData, i: int, d2: FixedPointData, j: int) -> FixedPointData:
    """Glue d1 and d2 at fixed points i and j; both points disappear."""
    if d1.dim != d2.dim:
        raise GluingMismatch("dimension mismatch: %d vs %d" % (d1.dim, d2.dim))
    try:
        p, r = d1.points[i], d2.points[j]
    except IndexError:
        raise GluingMismatch("no fixed point with index %d / %d" % (i, j)) from None
    if Counter(abs(m) for m in p.weights) != Counter(abs(m) for m in r.weights):
        raise GluingMismatch("weights %s and %s differ up to sign" % (list(p.weights), list(r.weights)))
    if not gluing_compatible(p, r):
        raise GluingMismatch("orientations do not reverse: signs %+d, %+d with weights %s, %s"
                             % (p.sign, r.sign, list(p.weights), list(r.weights)))
    points = d1.points[:i] + d1.points[i + 1:] + d2.points[:j] + d2.points[j + 1:]
    return FixedPointData(d1.dim, points)


@dataclass(frozen=True)
class ChernReport:
    k: int
    m_n: int
    m_s: int
    c1: Fraction
    integral: bool
    parity_determined: bool

    def __str__(self):
        if not self.integral:
            return ("c1 = %s (not integral: %d does not divide m_N - m_S = %d; "
                    "no such equivariant bundle)" % (self.c1, self.k, self.m_n - self.m_s))
        line = "c1 = %s (integral)" % (self.c1,)
        if not self.parity_determined:
            line += ("\nparity of m_N - m_S = %d says nothing about the parity of c1 "
                     "(principal isotropy of even order %d)" % (self.m_n - self.m_s, self.k))
        return line


def chern_weight_relation(k: int, m_n: int, m_s: int) -> ChernReport:
    """k * c1(E)[S^2] = m_N - m_S for a rotation of S^2 with principal isotropy Z_k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    diff = m_n - m_s
    c1 = Fraction(diff, k)
    return ChernReport(k, m_n, m_s, c1, c1.denominator == 1, k % 2 == 1)
