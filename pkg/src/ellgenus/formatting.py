"""Text renderings used by the CLI reports.

Rationals print as ``p/q`` (``p`` alone when q = 1), q-series as
``c0 + c1*q + ... + O(q^N)``, Laurent polynomials term by term sorted by
exponent with every power written out as ``λ^k``.
"""
from fractions import Fraction

SYMBOLS = {"lam": "λ", "mu": "μ"}


def symbol(var):
    return SYMBOLS.get(var, var)


def format_rational(c) -> str:
    return str(Fraction(c))


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _term(coeff, power_str):
    if not power_str:
        return format_rational(coeff)
    if coeff == 1:
        return power_str
    if coeff == -1:
        return "-" + power_str
    return "%s*%s" % (format_rational(coeff), power_str)


def format_coefficient(c) -> str:
    from .series import Series
    if isinstance(c, Series):
        return "(" + format_series(c) + ")"
    if isinstance(c, Fraction) or isinstance(c, int):
        return format_rational(c)
    return "(" + str(c) + ")"


def format_series(s) -> str:
    from .series import is_zero
    terms = []
    for n, c in enumerate(s.coeffs):
        if is_zero(c):
            continue
        power = "" if n == 0 else (s.var if n == 1 else "%s^%d" % (s.var, n))
        if isinstance(c, (int, Fraction)):
            terms.append(_term(c, power))
        else:
            terms.append(format_coefficient(c) + ("*" + power if power else ""))
    body = _join(terms)
    return "%s + O(%s^%d)" % (body, s.var, s.order)


def format_laurent(p) -> str:
    v = symbol(p.var)
    return _join([_term(c, "" if k == 0 else "%s^%d" % (v, k)) for k, c in p.items()])


def format_poly(coeffs, var) -> str:
    v = symbol(var)
    terms = [_term(c, "" if k == 0 else "%s^%d" % (v, k))
             for k, c in reversed(list(enumerate(coeffs))) if c != 0]
    return _join(terms)


def format_ratfunc(f) -> str:
    if f.is_polynomial():
        return format_poly(f.num, f.var)
    return "(%s)/(%s)" % (format_poly(f.num, f.var), format_poly(f.den, f.var))


def format_value(c) -> str:
    """Top-level rendering of a genus value: a rational or a q-series, unparenthesised."""
    from .series import Series
    if isinstance(c, Series):
        return format_series(c)
    return format_rational(c)
