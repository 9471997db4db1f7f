"""Dense univariate polynomials over an exact commutative coefficient ring.

A Poly is an ascending tuple of coefficients with no trailing zeros; the zero
polynomial is the empty tuple.  Coefficients are duck-typed: Fraction for
Q[x], Poly-over-Fraction for the one-formal-parameter ring Q[a][x], and the
quadratic/biquadratic ring elements from `quadring`.  Integers are coerced to
Fraction on construction so that true division never drops to floats.

Resultants come in two flavors, cross-checked in the tests:

* `resultant`      -- subresultant pseudo-remainder sequence (works over any
                      integral domain with exact division, e.g. Q[a]);
* `resultant_sylvester` -- fraction-free Bareiss elimination on the Sylvester
                      matrix.

`discriminant` uses the normalization
disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
"""

from dataclasses import dataclass
from fractions import Fraction


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


def _zero_like(c):
    return c * 0


def _one_like(c):
    return c**0


def _exact_div(a, b):
    """Division a/b known to be exact in the coefficient ring."""
    if isinstance(a, Poly) or isinstance(b, Poly):
        return a / b
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a / b
    return a / b


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c):
        return Poly((c,))

    @staticmethod
    def x(ring_one=Fraction(1)):
        return Poly((_zero_like(ring_one), ring_one))

    @staticmethod
    def monomial(k, c=Fraction(1)):
        return Poly((_zero_like(c),) * k + (c,))

    # -- basics -------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        other = _coerce(other)
        if not other:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def map(self, f):
        return Poly(tuple(f(c) for c in self.coeffs))

    def scale(self, s):
        """Multiply by a ring scalar.  Unlike `*`, this never mistakes a
        coefficient that happens to be a Poly (the Q[a] ring) for a
        polynomial in the outer variable."""
        return Poly(tuple(c * s for c in self.coeffs))

    def scale_div(self, s):
        """Exact division of every coefficient by the ring scalar s."""
        return Poly(tuple(_exact_div(c, s) for c in self.coeffs))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(_coerce(other))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(_coerce(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = _coerce(other)
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [None] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                t = ai * bj
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(_one_like(self.lc())) if self.coeffs else Poly((Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Exact division (raises ValueError when the remainder is nonzero);
        scalar divisors divide coefficientwise."""
        if not isinstance(other, Poly):
            other = _coerce(other)
            return Poly(tuple(_exact_div(c, other) for c in self.coeffs))
        q, r = divmod_poly(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def deriv(self):
        return Poly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x):
        """Horner evaluation at a ring element (or Poly, giving composition)."""
        if not self.coeffs:
            return _zero_like(x) if not isinstance(x, Poly) else Poly(())
        acc = self.coeffs[-1]
        if isinstance(x, Poly):
            acc = Poly.const(acc)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lc()
        one = _one_like(lc)
        if lc == one:
            return self
        inv = _inv_coeff(lc)
        return Poly(tuple(c * inv for c in self.coeffs))

    def reverse(self):
        """x^deg * p(1/x)."""
        return Poly(tuple(reversed(self.coeffs)))

    # -- serialization (Fraction coefficients) -------------------------

    def to_text(self):
        return ", ".join(str(c) for c in self.coeffs)

    @staticmethod
    def from_text(s):
        s = s.strip()
        if not s:
            return Poly(())
        return Poly(tuple(Fraction(tok.strip()) for tok in s.split(",")))


def _inv_coeff(c):
    if isinstance(c, Fraction):
        if not c:
            raise ZeroDivisionError("zero leading coefficient")
        return 1 / c
    inv = getattr(c, "inverse", None)
    if inv is not None:
        return inv()
    return _one_like(c) / c


def divmod_poly(a, b):
    """Quotient and remainder; requires an invertible leading coefficient
    of b (field-like coefficients)."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.degree() < b.degree():
        return Poly(()), a
    inv = _inv_coeff(b.lc())
    rem = list(a.coeffs)
    db = b.degree()
    q = [None] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            q[k - db] = _zero_like(inv)
            continue
        f = c * inv
        q[k - db] = f
        for j, bc in enumerate(b.coeffs):
            rem[j + k - db] = rem[j + k - db] - f * bc
    return Poly(q), Poly(rem[:db])


def pmod(a, b):
    return divmod_poly(a, b)[1]


def gcd_poly(a, b):
    """Monic gcd over a field."""
    while b:
        a, b = b, pmod(a, b)
    return a.monic() if a else a


def ext_gcd_poly(a, b):
    """(g, s, t) with s*a + t*b = g, g monic (field coefficients)."""
    one = Poly((Fraction(1),))
    zero = Poly(())
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = _inv_coeff(r0.lc())
    return r0 * inv, s0 * inv, t0 * inv


def mod_inv(a, T):
    """Inverse of a modulo T (field coefficients); ValueError when the gcd
    is not constant."""
    g, s, _ = ext_gcd_poly(a, T)
    if g.degree() != 0:
        raise ValueError("element not invertible modulo T")
    return pmod(s, T)


def mod_mul(a, b, T):
    return pmod(a * b, T)


def mod_compose(f, g, T):
    """f(g) reduced mod T."""
    if not f.coeffs:
        return Poly(())
    acc = Poly.const(f.coeffs[-1])
    for c in reversed(f.coeffs[:-1]):
        acc = pmod(acc * g, T) + c
    return pmod(acc, T)


# -- pseudo-division and resultants ------------------------------------


def prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, fraction-free."""
    da, db = a.degree(), b.degree()
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if da < db:
        raise ValueError("pseudo-division needs deg a >= deg b")
    lb = b.lc()
    d = da - db + 1
    r = a
    n = 0
    while r and r.degree() >= db:
        t = Poly.monomial(r.degree() - db, r.lc()) * b
        r = r.scale(lb) - t
        n += 1
    return r.scale(lb ** (d - n))


def resultant(a, b):
    """Res(a, b) by the subresultant PRS (Cohen, Alg. 3.3.7-style); valid
    over any integral domain with exact division."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    if a.degree() == 0 and b.degree() == 0:
        return _one_like(a.lc())
    if a.degree() == 0:
        return a.lc() ** b.degree()
    if b.degree() == 0:
        return b.lc() ** a.degree()
    s = 1
    if a.degree() < b.degree():
        if a.degree() % 2 and b.degree() % 2:
            s = -s
        a, b = b, a
    one = _one_like(a.lc())
    g = h = one
    while b.degree() > 0:
        d = a.degree() - b.degree()
        if a.degree() % 2 and b.degree() % 2:
            s = -s
        r = prem(a, b)
        a, b = b, r.scale_div(g * h**d)
        g = a.lc()
        if d:
            h = _exact_div(g**d, h ** (d - 1)) if d > 1 else g
    if b.is_zero():
        return _zero_like(one)
    res = _exact_div(b.lc() ** a.degree(), h ** (a.degree() - 1))
    return res if s == 1 else -res


def sylvester_matrix(a, b):
    da, db = a.degree(), b.degree()
    if da < 0 or db < 0:
        raise ValueError("Sylvester matrix of the zero polynomial")
    n = da + db
    zero = _zero_like(a.lc())
    rows = []
    rev_a = list(reversed(a.coeffs))
    rev_b = list(reversed(b.coeffs))
    for i in range(db):
        rows.append([zero] * i + rev_a + [zero] * (n - i - da - 1))
    for i in range(da):
        rows.append([zero] * i + rev_b + [zero] * (n - i - db - 1))
    return rows


def bareiss_det(rows):
    """Fraction-free determinant (Bareiss); divisions are exact over an
    integral domain."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = _one_like(m[0][0])
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _zero_like(prev)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = _zero_like(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant_sylvester(a, b):
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    if a.degree() == 0 and b.degree() == 0:
        return _one_like(a.lc())
    if a.degree() == 0:
        return a.lc() ** b.degree()
    if b.degree() == 0:
        return b.lc() ** a.degree()
    return bareiss_det(sylvester_matrix(a, b))


def discriminant(p):
    n = p.degree()
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(p, p.deriv())
    r = _exact_div(r, p.lc())
    return -r if (n * (n - 1) // 2) % 2 else r


# -- linear fractional maps ---------------------------------------------


@dataclass(frozen=True)
class MobiusMap:
    """x -> (a*x + b)/(c*x + d), as the matrix [[a, b], [c, d]]."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        if not (self.a * self.d - self.b * self.c):
            raise ValueError("degenerate linear fractional map")

    def compose(self, other):
        """self after other: (self o other)."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Mobius map")
        one = _one_like(self.a)
        result = MobiusMap(one, _zero_like(one), _zero_like(one), one)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base)
            n >>= 1
        return result

    def is_scalar(self):
        return (not self.b) and (not self.c) and self.a == self.d

    def apply(self, x):
        """Value at a ring element (field-like division)."""
        num = self.a * x + self.b
        den = self.c * x + self.d
        if isinstance(den, Fraction):
            return num / den
        return num * _inv_coeff(den)

    def numden(self, one=Fraction(1)):
        """(num, den) as degree-<=1 polynomials in x."""
        return Poly((self.b * one, self.a * one)), Poly((self.d * one, self.c * one))


def mobius_transform(p, mo):
    """(c*x + d)^deg(p) * p((a*x + b)/(c*x + d))."""
    n = p.degree()
    if n < 0:
        return p
    num = Poly((mo.b, mo.a))
    den = Poly((mo.d, mo.c))
    acc = Poly(())
    for i, ci in enumerate(p.coeffs):
        acc = acc + Poly.const(ci) * num**i * den ** (n - i)
    return acc


def conjugate_product(P, num, den=None):
    """Characteristic polynomial of the rational map num/den on the roots of
    P: the monic degree-deg(P) polynomial whose roots are (num/den)(r) over
    the roots r of P.  Computed as Res_y(P(y), x*den(y) - num(y)).

    `num`/`den` are polynomials in the coefficient ring of P (den defaults
    to 1); the denominator must be invertible mod P.
    """
    n = P.degree()
    if n < 1:
        raise ValueError("base polynomial must have positive degree")
    one = _one_like(P.lc())
    if den is None:
        den = Poly.const(one)
    rden = resultant(P, den) if den.degree() >= 0 else Fraction(0)
    if not rden:
        raise ValueError("denominator of the map is not invertible mod P")
    # Lift to polynomials in y whose coefficients are polynomials in x.
    ypolys = []
    m = max(num.degree(), den.degree())
    for i in range(m + 1):
        ni = num[i] if i <= num.degree() else _zero_like(one)
        di = den[i] if i <= den.degree() else _zero_like(one)
        ypolys.append(Poly((-ni, di)))  # -num_i + x*den_i
    B = Poly(ypolys)
    A = Poly(tuple(Poly.const(c) for c in P.coeffs))
    res = resultant(A, B)
    if not isinstance(res, Poly):
        res = Poly.const(res)
    if res.degree() != n:
        raise ValueError("degenerate conjugate product (degree dropped)")
    return res.monic()


def sturm_real_count(p):
    """Number of distinct real roots of a squarefree p over Fraction, by
    Sturm's chain (sign variations at -oo and +oo)."""
    if p.degree() <= 0:
        return 0
    chain = [p, p.deriv()]
    while chain[-1]:
        r = -pmod(chain[-2], chain[-1])
        chain.append(r)
    chain.pop()

    def variations(signs):
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    at_pos = [(1 if q.lc() > 0 else -1) for q in chain]
    at_neg = [s * (1 if q.degree() % 2 == 0 else -1) for s, q in zip(at_pos, chain)]
    return variations(at_neg) - variations(at_pos)


def squarefree_decomposition(p):
    """Yun's algorithm over Q: [(A1, 1), (A2, 2), ...] with p = lc * prod Ai^i
    and the Ai squarefree, pairwise coprime, monic."""
    p = p.monic()
    out = []
    dp = p.deriv()
    a = gcd_poly(p, dp)
    b = p / a
    c = dp / a
    d = c - b.deriv()
    i = 1
    while b.degree() > 0:
        a = gcd_poly(b, d)
        if a.degree() > 0:
            out.append((a, i))
        b = b / a
        c = d / a
        d = c - b.deriv()
        i += 1
    return out


def real_root_count_with_multiplicity(p):
    """(real_count, degree) counting multiplicities, exact over Q."""
    total = 0
    for part, mult in squarefree_decomposition(p):
        total += mult * sturm_real_count(part)
    return total


def interpolate(points):
    """Lagrange interpolation through (x_i, y_i) with Fraction nodes x_i and
    ring-element values y_i; returns the unique Poly of degree < len(points)."""
    result = Poly(())
    xs = [Fraction(x) for x, _ in points]
    for i, (_, yi) in enumerate(points):
        num = Poly((Fraction(1),))
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * Poly((-xj, Fraction(1)))
            den *= xs[i] - xj
        result = result + num.scale(yi * (1 / den))
    return result
