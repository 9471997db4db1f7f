"""Exact arithmetic in Q(u) with u^2 = m*u - 1 and in the biquadratic ring
Q[s, w] with s^2 = m^2 - 4 and w^2 = (m + 2 + A)^2 - 4(m - 2).

QuadElem is a + b*u; conjugation sends u to u^{-1} = m - u, so
conj(a + b*u) = (a + b*m) - b*u and norm(x) = x * conj(x) lands in Q.
The coefficients a, b are normally Fractions but any exact commutative ring
element works (the Shen-octic test runs this ring over Q[a] coefficients).

BiquadElem is c0 + c1*s + c2*w + c3*s*w over Fraction coefficients with the
two sign-flip conjugations as ring maps; the product of the four conjugates
of any element is rational.  Contexts with s^2 = 0 or w^2 = 0 are legal rings
with nilpotents (identity testing only; classification routes those cases to
the collapsed families instead).
"""

from dataclasses import dataclass
from fractions import Fraction

from .polyring import Poly


def _c(v):
    return Fraction(v) if isinstance(v, int) else v


class QuadElem:
    """a + b*u in Q[u]/(u^2 - m*u + 1)."""

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b, m):
        self.a = _c(a)
        self.b = _c(b)
        self.m = _c(m)

    @staticmethod
    def u(m):
        return QuadElem(0, 1, m)

    @staticmethod
    def const(a, m):
        return QuadElem(a, 0, m)

    def _check(self, other):
        if self.m != other.m:
            raise ValueError("mixed u-ring contexts")

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return self.m == other.m and self.a == other.a and self.b == other.b
        other = _c(other)
        return not self.b and self.a == other

    def __hash__(self):
        return hash(("QuadElem", self.a, self.b, self.m))

    def __repr__(self):
        return f"({self.a} + {self.b}*u)"

    def __add__(self, other):
        if not isinstance(other, QuadElem):
            return QuadElem(self.a + _c(other), self.b, self.m)
        self._check(other)
        return QuadElem(self.a + other.a, self.b + other.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.m)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadElem) else -_c(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QuadElem):
            other = _c(other)
            return QuadElem(self.a * other, self.b * other, self.m)
        self._check(other)
        bb = self.b * other.b
        return QuadElem(
            self.a * other.a - bb,
            self.a * other.b + self.b * other.a + bb * self.m,
            self.m,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem(1, 0, self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self):
        """u -> m - u (= u^{-1})."""
        return QuadElem(self.a + self.b * self.m, -self.b, self.m)

    def norm(self):
        n = self * self.conj()
        if n.b:
            raise ArithmeticError("norm did not land in the base ring")
        return n.a

    def trace(self):
        return 2 * self.a + self.b * self.m

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("non-invertible quadratic ring element")
        c = self.conj()
        if isinstance(n, Fraction):
            return c * (1 / n)
        return QuadElem(c.a / n, c.b / n, self.m)

    def __truediv__(self, other):
        if not isinstance(other, QuadElem):
            other = _c(other)
            return QuadElem(self.a / other, self.b / other, self.m)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * _c(other)


@dataclass(frozen=True)
class BiquadCtx:
    m: Fraction
    A: Fraction
    s2: Fraction
    w2: Fraction

    @staticmethod
    def make(m, A):
        m, A = Fraction(m), Fraction(A)
        return BiquadCtx(m, A, m * m - 4, (m + 2 + A) ** 2 - 4 * (m - 2))

    @property
    def y2(self):
        return self.A**2 - 4 * (self.m - 2)


class BiquadElem:
    """c0 + c1*s + c2*w + c3*s*w over a BiquadCtx."""

    __slots__ = ("c", "ctx")

    def __init__(self, c, ctx):
        self.c = tuple(Fraction(v) for v in c)
        if len(self.c) != 4:
            raise ValueError("need 4 components")
        self.ctx = ctx

    @staticmethod
    def const(v, ctx):
        return BiquadElem((v, 0, 0, 0), ctx)

    @staticmethod
    def s(ctx):
        return BiquadElem((0, 1, 0, 0), ctx)

    @staticmethod
    def w(ctx):
        return BiquadElem((0, 0, 1, 0), ctx)

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mixed (m, A) contexts")

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, BiquadElem):
            return self.ctx == other.ctx and self.c == other.c
        v = _c(other)
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0 and self.c[0] == v

    def __hash__(self):
        return hash(("BiquadElem", self.c, self.ctx))

    def __repr__(self):
        return f"({self.c[0]} + {self.c[1]}*s + {self.c[2]}*w + {self.c[3]}*sw)"

    def __add__(self, other):
        if not isinstance(other, BiquadElem):
            v = _c(other)
            return BiquadElem((self.c[0] + v,) + self.c[1:], self.ctx)
        self._check(other)
        return BiquadElem(tuple(x + y for x, y in zip(self.c, other.c)), self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return BiquadElem(tuple(-x for x in self.c), self.ctx)

    def __sub__(self, other):
        if not isinstance(other, BiquadElem):
            return self + (-_c(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiquadElem):
            v = _c(other)
            return BiquadElem(tuple(x * v for x in self.c), self.ctx)
        self._check(other)
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        S, W = self.ctx.s2, self.ctx.w2
        return BiquadElem(
            (
                a0 * b0 + S * a1 * b1 + W * a2 * b2 + S * W * a3 * b3,
                a0 * b1 + a1 * b0 + W * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + S * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            ),
            self.ctx,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = BiquadElem.const(1, self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj_s(self):
        c = self.c
        return BiquadElem((c[0], -c[1], c[2], -c[3]), self.ctx)

    def conj_w(self):
        c = self.c
        return BiquadElem((c[0], c[1], -c[2], -c[3]), self.ctx)

    def rational_part(self):
        return self.c[0]

    def as_rational(self):
        if any(self.c[1:]):
            raise ArithmeticError("element is not rational")
        return self.c[0]

    def total_norm(self):
        n = self * self.conj_s() * self.conj_w() * self.conj_s().conj_w()
        return n.as_rational()

    def inverse(self):
        cs = self.conj_s()
        cw = self.conj_w()
        csw = cs.conj_w()
        n = (self * cs * cw * csw).as_rational()
        if not n:
            raise ZeroDivisionError("non-invertible biquadratic element")
        return (cs * cw * csw) * (1 / n)

    def __truediv__(self, other):
        if not isinstance(other, BiquadElem):
            v = _c(other)
            return BiquadElem(tuple(x / v for x in self.c), self.ctx)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * _c(other)


def embed_quad(q, ctx):
    """Embed a + b*u into Q[s, w] via u = (m + s)/2; contexts must share m."""
    if q.m != ctx.m:
        raise ValueError("u-ring and biquadratic contexts disagree on m")
    half = Fraction(1, 2)
    return BiquadElem((q.a + q.b * ctx.m * half, q.b * half, 0, 0), ctx)


def embed_quad_poly(p, ctx):
    """Coefficientwise embedding of a Poly over QuadElem."""
    return Poly(tuple(embed_quad(c, ctx) for c in p.coeffs))


def test_value(ctx):
    """Determinant certifying linear dependence of the factor triple:
    tv = (-2m - A)s/2 + (m - 2)w/2 - (m^2 - 4)/2."""
    m, A = ctx.m, ctx.A
    half = Fraction(1, 2)
    return BiquadElem(
        (-(m * m - 4) * half, (-2 * m - A) * half, (m - 2) * half, 0), ctx
    )


def biquad_poly_parts(p):
    """Split a Poly over BiquadElem into its four component Polys over Q."""
    comps = [[], [], [], []]
    for c in p.coeffs:
        for i in range(4):
            comps[i].append(c.c[i])
    return tuple(Poly(tuple(comp)) for comp in comps)
