"""Free Meixner laws mu_{a,b}.

Integers, Fractions and rational strings take the exact route and return
Fractions; floats take the double route.
"""

from fractions import Fraction
from numbers import Rational

from . import _core

__all__ = [
    "moments",
    "cumulants",
    "q_cumulants",
    "classify",
    "support",
    "atoms",
    "density",
    "cauchy_transform",
    "r_transform",
    "gauss_rule",
    "verify_regression",
]


def _is_exact(*values):
    return all(isinstance(v, (Rational, str)) for v in values)


def _lit(value):
    return str(Fraction(value))


def _fractions(values):
    return [Fraction(v) for v in values]


def moments(a, b, n):
    """m_0..m_n."""
    if _is_exact(a, b):
        return _fractions(_core.moments_exact(_lit(a), _lit(b), n))
    return _core.moments_float(float(a), float(b), n)


def cumulants(a, b, n, method="nc_le2"):
    """R_1..R_n; method is nc_le2, semicircle or from_moments."""
    if _is_exact(a, b):
        return _fractions(_core.cumulants_exact(_lit(a), _lit(b), n, method))
    return _core.cumulants_float(float(a), float(b), n, method)


def q_cumulants(a, b, q, n):
    return _fractions(_core.q_cumulants_exact(_lit(a), _lit(b), _lit(q), n))


def classify(a, b):
    """(type name, selecting predicates). Exact arguments only."""
    return _core.classify(_lit(a), _lit(b))


def support(a, b):
    return _core.support(float(a), float(b))


def atoms(a, b):
    """[(location, weight), ...]"""
    return _core.atoms(float(a), float(b))


def density(a, b, xs):
    return _core.density(float(a), float(b), [float(x) for x in xs])


def cauchy_transform(a, b, z):
    return _core.cauchy_transform(float(a), float(b), complex(z))


def r_transform(a, b, z):
    return _core.r_transform(float(a), float(b), complex(z))


def gauss_rule(a, b, n):
    """(nodes, weights)"""
    return _core.gauss_rule(float(a), float(b), n)


def verify_regression(alpha, a, b, n=8):
    """{identity: passed} for the exact regression checks up to order n."""
    return _core.verify_regression(_lit(alpha), _lit(a), _lit(b), n)
