"""Bernoulli numbers, Bernoulli polynomials, and the integer zeta table.

Bernoulli numbers are generated exactly as fractions (B_1 = -1/2 convention)
and cached; everything downstream consumes double-precision projections.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .constants import PI
from .errors import DomainError


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    if n < 0:
        raise DomainError("Bernoulli numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli_number(j)
    return -acc / (n + 1)


def bernoulli_poly(n: int, x: complex) -> complex:
    """Bernoulli polynomial B_n(x) for complex x."""
    return sum(
        math.comb(n, k) * float(bernoulli_number(k)) * x ** (n - k)
        for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def zeta_int(n: int) -> float:
    """Riemann zeta at an integer argument n != 1.

    Even n >= 2 via the Bernoulli closed form, odd n >= 3 by direct
    summation with an Euler-Maclaurin tail, nonpositive n via zeta(-m) =
    -B_{m+1}/(m+1).
    """
    if n == 1:
        raise DomainError("zeta(1) is a pole")
    if n == 0:
        # zeta(-m) = -B_{m+1}/(m+1) assumes the B_1 = +1/2 convention; this
        # module uses B_1 = -1/2, so the m = 0 case must be pinned by hand
        return -0.5
    if n < 0:
        m = -n
        return float(-bernoulli_number(m + 1) / (m + 1))
    if n % 2 == 0:
        b = bernoulli_number(n)
        return float(
            Fraction(abs(b.numerator), b.denominator)
            * Fraction(2) ** (n - 1)
            / math.factorial(n)
        ) * PI**n
    # odd n >= 3: direct sum to K, Euler-Maclaurin tail from K
    K = 50
    s = math.fsum(k ** (-float(n)) for k in range(1, K))
    s += K ** (1.0 - n) / (n - 1) + 0.5 * K ** (-float(n))
    poch = float(n)
    for j in (1, 2, 3):
        s += (
            float(bernoulli_number(2 * j))
            / math.factorial(2 * j)
            * poch
            * K ** (-(n + 2.0 * j - 1.0))
        )
        poch *= (n + 2 * j - 1) * (n + 2 * j)
    return s
