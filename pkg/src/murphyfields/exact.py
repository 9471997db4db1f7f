"""Exact integer/rational helpers: square tests, real-quadratic units,
generalized Lucas/Fibonacci sequences.

Rationals are `fractions.Fraction` throughout (always reduced, positive
denominator, structural equality).  Units of a real quadratic order are kept
in the half-integral form (x + y*sqrt(d))/2 with x^2 - d*y^2 = +-4, which is
the normalization the Lucas/Fibonacci parameterization

    eps^n = (L_n + F_n*(eps - eps_bar)) / 2

reads off directly: L_n = x_n and F_n = y_n / y_1.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

SQUAREFREE_TRIAL_BOUND = 10**6
CF_PERIOD_CAP = 10**6


def is_square_int(n):
    """True when the integer n is a perfect square (0 counts)."""
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def perfect_square(q):
    """Exact nonnegative square root of a rational square, else None.

    0 -> 0.  Accepts int or Fraction.
    """
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    if rn * rn != q.numerator:
        return None
    rd = isqrt(q.denominator)
    if rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def squarefree_status(n):
    """(is_squarefree, certain) for a nonzero integer |n|.

    Trial division up to SQUAREFREE_TRIAL_BOUND; a surviving cofactor larger
    than the bound squared... cannot hide a square factor unless it is itself
    a perfect square, so `certain` is False only for huge composite tails.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("0 is not squarefree")
    if n == 1:
        return True, True
    d = 2
    while d * d <= n and d <= SQUAREFREE_TRIAL_BOUND:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False, True
        d += 1 if d == 2 else 2
    if n == 1 or n <= SQUAREFREE_TRIAL_BOUND:
        return True, True
    if is_square_int(n):
        return False, True
    # n has no prime factor <= bound; a square factor would need p^2 > bound^2.
    return True, n < SQUAREFREE_TRIAL_BOUND**2


def squarefree_part(n):
    """Largest squarefree divisor of the nonzero integer n (sign kept)."""
    if n == 0:
        raise ValueError("squarefree part of 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                out *= d
        d += 1 if d == 2 else 2
    return sign * out * n


@dataclass(frozen=True)
class QuadUnit:
    """Unit (x + y*sqrt(d))/2 of the maximal order of Q(sqrt(d)),
    with x^2 - d*y^2 = 4*norm, norm in {+1, -1}."""

    d: int
    x: int
    y: int
    norm: int

    def __post_init__(self):
        if self.x * self.x - self.d * self.y * self.y != 4 * self.norm:
            raise ValueError("not a unit of norm +-1 in half-coordinates")

    def conj(self):
        return QuadUnit(self.d, self.x, -self.y, self.norm)

    def __mul__(self, other):
        if self.d != other.d:
            raise ValueError("mixed quadratic fields")
        x = (self.x * other.x + self.d * self.y * other.y) // 2
        y = (self.x * other.y + self.y * other.x) // 2
        return QuadUnit(self.d, x, y, self.norm * other.norm)

    def inverse(self):
        # 1/eps = norm * eps_bar
        return QuadUnit(self.d, self.norm * self.x, -self.norm * self.y, self.norm)

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QuadUnit(self.d, 2, 0, 1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def value(self, sqrt_d):
        """Numeric value given a numeric sqrt(d)."""
        return (self.x + self.y * sqrt_d) / 2


def _icbrt(n):
    """Integer cube root of n >= 0 (floor)."""
    if n < 2:
        return n
    r = int(round(n ** (1.0 / 3.0)))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def _pell_unit(d):
    """Fundamental solution of x^2 - d*y^2 = +-1 via the CF of sqrt(d)."""
    a0 = isqrt(d)
    P, Q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for _ in range(CF_PERIOD_CAP):
        P = a * Q - P
        Q = (d - P * P) // Q
        a = (P + a0) // Q
        if a == 2 * a0 and Q == 1:
            return h, k
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    raise ValueError("continued-fraction period exceeds the step cap")


def fundamental_unit(d):
    """Fundamental unit > 1 of O_{Q(sqrt(d))}.

    The continued fraction of sqrt(d) gives the fundamental unit x1 + y1*sqrt(d)
    of Z[sqrt(d)]; for d = 1 mod 4 this may be the cube of a half-integral
    unit (the index of Z[sqrt(d)]^x in O_K^x divides 3), which is recovered
    exactly from the trace cubic x^3 - 3*n*x = 2*x1.
    """
    if d <= 1:
        raise ValueError("need a squarefree integer d > 1")
    ok, certain = squarefree_status(d)
    if not ok:
        raise ValueError(f"{d} is not squarefree")
    if not certain:
        raise ValueError(f"cannot certify {d} squarefree below the trial bound")

    x1, y1 = _pell_unit(d)
    n = x1 * x1 - d * y1 * y1
    assert n in (1, -1)
    if d % 4 == 1:
        # (x + y sqrt d)/2 with ((x + y sqrt d)/2)^3 = x1 + y1 sqrt d would
        # have trace x with x^3 - 3 n x = 2 x1.
        guess = _icbrt(2 * abs(x1))
        for x in range(max(1, guess - 2), guess + 3):
            if x**3 - 3 * n * x == 2 * x1:
                y2, rem = divmod(x * x - 4 * n, d)
                if rem == 0 and is_square_int(y2):
                    return QuadUnit(d, x, isqrt(y2), n)
    return QuadUnit(d, 2 * x1, 2 * y1, n)


@dataclass(frozen=True)
class LucasFib:
    """L_n, F_n with eps^n = (L_n + F_n*(eps - eps_bar))/2."""

    d: int
    n: int
    L: int
    F: int


def lucas_fib(d, n):
    """Generalized Lucas/Fibonacci pair for Q(sqrt(d)) at index n (any sign)."""
    eps = fundamental_unit(d)
    pw = eps**n
    if pw.y % eps.y:
        raise ArithmeticError("power not in the Z[eps] lattice")
    return LucasFib(d, n, pw.x, pw.y // eps.y)


def two_squares(d):
    """Some (a, b) with a^2 + b^2 = d, or None."""
    for a in range(1, isqrt(d) + 1):
        r = d - a * a
        if is_square_int(r):
            return a, isqrt(r)
    return None
