"""Exact rational scalars used by every geometric module.

All geometry in this package is done over Q.  gmpy2.mpq is used when
available (it is several times faster than fractions.Fraction); the
stdlib Fraction is a drop-in fallback.  Nothing downstream may rely on
which backend is active.
"""

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q


def qstr(x):
    """Canonical string form of a rational, stable across backends."""
    x = Q(x)
    n, d = x.numerator, x.denominator
    if d == 1:
        return str(n)
    return "%d/%d" % (n, d)


def qparse(s):
    """Inverse of qstr."""
    if "/" in s:
        n, d = s.split("/")
        return Q(int(n), int(d))
    return Q(int(s))


def sign(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
