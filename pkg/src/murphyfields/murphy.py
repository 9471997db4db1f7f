"""The two-parameter octic family T(m, A, x) = p(x) * pbar(x) and its exact
identity suite.

p(x) is the quartic

    x^4 + (u - u^{-1} - A) x^3 + ((2 - A)u - A - 4) x^2 + (u^2 - 1 - A u) x + u^2

over Q(u), u^2 = m*u - 1; pbar has conjugated coefficients.  Over Q[s, w]
(s^2 = m^2 - 4, w^2 = (m+2+A)^2 - 4(m-2), u = (m+s)/2) the octic splits into
the four monic quadratics

    q1 = x^2 + (-A + s - w)x/2 + (m + s)/2      q1*q2 = p
    q2 = x^2 + (-A + s + w)x/2 + (m + s)/2      q3*q4 = pbar
    q3 = x^2 + (-A - s + w)x/2 + (m - s)/2
    q4 = x^2 + (-A - s - w)x/2 + (m - s)/2

whose regroupings q1*q3, q2*q4 and q1*q4, q2*q3 are the quartic factors over
Q(sw) and Q(w).  s and w are rational expressions mod T whenever the
"monster" resultant mu = Res(q1, q3) * Res(q2, q4) is nonzero, which lets us
realize the order-4 map sigma(x) = (-x - 1)/(x + u) inside Q[x]/(T) and check
the degree-4 unit condition 1 + x + x*sigma(x) + x*sigma(x)*sigma^2(x) = 0
exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import perfect_square
from .polyring import (
    MobiusMap,
    Poly,
    discriminant,
    mobius_transform,
    mod_compose,
    mod_inv,
    pmod,
    resultant,
)
from .quadring import (
    BiquadCtx,
    BiquadElem,
    QuadElem,
    biquad_poly_parts,
    embed_quad_poly,
    test_value,
)


class DegenerateParams(ValueError):
    """Raised for the parameter pairs where the construction collapses."""

    def __init__(self, case, detail=""):
        self.case = case
        super().__init__(f"degenerate parameters: {case}" + (f" ({detail})" if detail else ""))


def _frac(v):
    return Fraction(v)


def related_octic(m, A):
    """Parameters of the related octic; an involution swapping w^2 and y^2."""
    m, A = _frac(m), _frac(A)
    return m, -m - 2 - A


def build_p(m, A):
    """The seed quartic over Q(u).  At m = +-2 the ring collapses and u is
    taken as the rational double root m/2."""
    m, A = _frac(m), _frac(A)
    if m == 2 or m == -2:
        uv = m / 2
        mk = lambda a, b: QuadElem(a + b * uv, 0, m)
    else:
        mk = lambda a, b: QuadElem(a, b, m)
    # ascending coefficients; u^2 reduces to m*u - 1
    return Poly(
        (
            mk(-1, m),  # u^2
            mk(-2, m - A),  # u^2 - 1 - A u
            mk(-A - 4, 2 - A),  # (2 - A) u - A - 4
            mk(-m - A, 2),  # u - u^{-1} - A = 2u - m - A
            mk(1, 0),
        )
    )


def _conj_poly(p):
    return p.map(lambda c: c.conj())


def quartic_factors(ctx):
    """q1, q2, q3, q4 over Q[s, w]."""
    half = Fraction(1, 2)
    m, A = ctx.m, ctx.A

    def q(s_sign, w_sign):
        lin = BiquadElem((-A * half, s_sign * half, w_sign * half, 0), ctx)
        con = BiquadElem((m * half, s_sign * half, 0, 0), ctx)
        return Poly((con, lin, BiquadElem.const(1, ctx)))

    return q(1, -1), q(1, 1), q(-1, 1), q(-1, -1)


def _res_monic_quadratics(p, q):
    """Res(x^2+ax+b, x^2+cx+d) = (c-a)^2 b - a(c-a)(d-b) + (d-b)^2;
    division-free, safe in rings with nilpotents."""
    a, b = p.coeffs[1], p.coeffs[0]
    c, d = q.coeffs[1], q.coeffs[0]
    e, f = c - a, d - b
    return e * e * b - a * e * f + f * f


def monster_mu(m, A):
    """mu = Res(q1, q3) * Res(q2, q4), a rational."""
    ctx = BiquadCtx.make(m, A)
    q1, q2, q3, q4 = quartic_factors(ctx)
    return (_res_monic_quadratics(q1, q3) * _res_monic_quadratics(q2, q4)).as_rational()


def degenerate_case(m, A):
    """Name of the collapse case for (m, A), or None."""
    m, A = _frac(m), _frac(A)
    if m == 2:
        return "m=2 (order of sigma collapses)" + (
            "; (2,-4) kills the monster resultant" if A == -4 else ""
        )
    if m == -2:
        return "m=-2 (simplest-quartic case, T = p^2)"
    if (m, A) == (Fraction(2, 3), Fraction(-4, 3)):
        return "(2/3,-4/3) (monster resultant vanishes; -2 is not a rational square)"
    return None


@dataclass
class OcticBundle:
    m: Fraction
    A: Fraction
    T: Poly
    p: Poly
    pbar: Poly
    q1: Poly
    q2: Poly
    q3: Poly
    q4: Poly
    Ps: Poly
    Psbar: Poly
    Psw: Poly
    Pswbar: Poly
    Pw: Poly
    Pwbar: Poly
    s2: Fraction
    w2: Fraction
    y2: Fraction
    mu: Fraction
    relatedA: Fraction
    ctx: BiquadCtx = field(repr=False)

    def to_dict(self):
        def biq_poly(p):
            one, s, w, sw = biquad_poly_parts(p)
            return {"1": one.to_text(), "s": s.to_text(), "w": w.to_text(), "sw": sw.to_text()}

        return {
            "schema": 1,
            "m": str(self.m),
            "A": str(self.A),
            "T": self.T.to_text(),
            "q1": biq_poly(self.q1),
            "q2": biq_poly(self.q2),
            "q3": biq_poly(self.q3),
            "q4": biq_poly(self.q4),
            "s2": str(self.s2),
            "w2": str(self.w2),
            "y2": str(self.y2),
            "mu": str(self.mu),
            "relatedA": str(self.relatedA),
        }


def build_bundle(m, A):
    """Construct the octic with all factor systems, re-expanding every
    claimed product as a construction-time invariant."""
    m, A = _frac(m), _frac(A)
    ctx = BiquadCtx.make(m, A)
    p = build_p(m, A)
    pbar = _conj_poly(p)
    Tq = p * pbar

    def rationalize_quad(poly):
        cs = []
        for c in poly.coeffs:
            if c.b:
                raise ArithmeticError("product did not land in Q[x]")
            cs.append(c.a)
        return Poly(tuple(cs))

    T = rationalize_quad(Tq)
    if T.coeffs[0] != 1 or T.lc() != 1 or T.degree() != 8:
        raise ArithmeticError("octic is not monic of degree 8 with constant term 1")

    q1, q2, q3, q4 = quartic_factors(ctx)
    Ps, Psbar = q1 * q2, q3 * q4
    Psw, Pswbar = q1 * q3, q2 * q4
    Pw, Pwbar = q1 * q4, q2 * q3
    if m != 2 and m != -2:
        if Ps != embed_quad_poly(p, ctx) or Psbar != embed_quad_poly(pbar, ctx):
            raise ArithmeticError("q1*q2, q3*q4 disagree with p, pbar")

    def rationalize_biq(poly):
        return Poly(tuple(c.as_rational() for c in poly.coeffs))

    for prod in (Psw * Pswbar, Pw * Pwbar, Ps * Psbar):
        if rationalize_biq(prod) != T:
            raise ArithmeticError("a quartic regrouping fails to multiply back to T")

    mu = (_res_monic_quadratics(q1, q3) * _res_monic_quadratics(q2, q4)).as_rational()
    return OcticBundle(
        m=m, A=A, T=T, p=p, pbar=pbar,
        q1=q1, q2=q2, q3=q3, q4=q4,
        Ps=Ps, Psbar=Psbar, Psw=Psw, Pswbar=Pswbar, Pw=Pw, Pwbar=Pwbar,
        s2=ctx.s2, w2=ctx.w2, y2=ctx.y2,
        mu=mu, relatedA=related_octic(m, A)[1], ctx=ctx,
    )


def s_w_component_polys(bundle):
    """(A_s, B_s, C_w, D_w) with p = A_s*s + B_s and Pw = C_w*w + D_w in Q[x]."""
    b_part, s_part, w_part, sw_part = biquad_poly_parts(bundle.Ps)
    if w_part or sw_part:
        raise ArithmeticError("p has w-components")
    d_part, s2_part, c_part, sw2_part = biquad_poly_parts(bundle.Pw)
    if s2_part or sw2_part:
        raise ArithmeticError("Pw has s-components")
    return s_part, b_part, c_part, d_part


# -- the identity suite --------------------------------------------------


@dataclass
class IdentityCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class IdentityReport:
    m: Fraction
    A: Fraction
    checks: list
    skipped: str = ""

    @property
    def all_ok(self):
        return all(c.ok for c in self.checks)

    def to_dict(self):
        return {
            "schema": 1,
            "m": str(self.m),
            "A": str(self.A),
            "skipped": self.skipped,
            "all_ok": self.all_ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }


def verify_core_identities(m, A):
    """Exact verification of the whole quartic-factor identity suite at one
    parameter pair with m^2 - 4 not a rational square."""
    m, A = _frac(m), _frac(A)
    if perfect_square(m * m - 4) is not None:
        return IdentityReport(m, A, [], skipped="m^2-4 is a rational square; generic identities not applicable")

    bundle = build_bundle(m, A)
    ctx = bundle.ctx
    checks = []

    def add(name, ok, detail=""):
        checks.append(IdentityCheck(name, bool(ok), detail))

    u = QuadElem.u(m)
    u_b = BiquadElem((m / 2, Fraction(1, 2), 0, 0), ctx)
    p, pbar = bundle.p, bundle.pbar
    q1, q2, q3, q4 = bundle.q1, bundle.q2, bundle.q3, bundle.q4

    # (x+u)^4 pbar((-x-1)/(x+u)) = (m-2) p(x)
    mob = MobiusMap(QuadElem.const(-1, m), QuadElem.const(-1, m), QuadElem.const(1, m), u)
    add("pbar_transform", mobius_transform(pbar, mob) == p.scale(QuadElem.const(m - 2, m)))

    # x^4 p(u/x) = u^2 p(x)
    lhs = Poly(tuple(p.coeffs[4 - j] * u ** (4 - j) for j in range(5)))
    add("p_reciprocal_twist", lhs == p.scale(u * u))

    # disc of the resolvent quadratic Y^2 + (-A + u - 1/u)Y - A - 4 - A u
    bq = QuadElem(-A, 2, m) - QuadElem.const(m, m)  # -A + 2u - m
    cq = QuadElem(-A - 4, -A, m)
    discF = bq * bq - 4 * cq
    add("resolvent_disc", discF == QuadElem.const(ctx.w2, m))

    # quadratic-factor discriminants via the corner values Q1 = q1(-1), Q2 = q2(-1)
    mone = BiquadElem.const(-1, ctx)
    Q1, Q2 = bundle.q1(mone), bundle.q2(mone)
    d1 = discriminant(q1)
    d2 = discriminant(q2)
    d3 = discriminant(q3)
    d4 = discriminant(q4)
    two_u1 = 2 * (u_b + 1)
    add("disc_q1_corner", d1 == Q1 * (Q1 + Q2 * u_b - two_u1))
    add("disc_q2_corner", d2 == Q2 * (Q2 + Q1 * u_b - two_u1))

    # (x+u)^2 q3((-x-1)/(x+u)) = q3(-1) q1(x)
    mob_b = MobiusMap(mone, mone, BiquadElem.const(1, ctx), u_b)
    Q3 = q3(mone)
    add("q3_transform", mobius_transform(q3, mob_b) == q1.scale(Q3))

    # disc(q1)disc(q3) = ((u-1) disc(q3) / q3(-1))^2, with the explicit root
    sqrt13 = BiquadElem((0, (m + A - 2) / 2, (2 - m) / 2, 0), ctx)
    add("disc_q1q3_square", d1 * d3 * Q3 * Q3 == ((u_b - 1) * d3) ** 2)
    add("disc_q1q3_sqrt", (u_b - 1) * d3 == Q3 * sqrt13)

    add("disc_q1q2", d1 * d2 == (u_b - 1) ** 2 * ctx.y2)
    add("res_q1q2", _res_monic_quadratics(q1, q2) == ctx.w2 * u_b)
    add("disc_q1q4", d1 * d4 == Q1 * Q1 * ctx.y2)
    add("res_q1q4", _res_monic_quadratics(q1, q4) == ctx.s2 * Q1)

    # test-value product
    tv = test_value(ctx)
    tv_conj = tv.conj_s().conj_w()
    add("testvalue_product", tv * tv_conj == (2 - m) * _res_monic_quadratics(q1, q3))

    # monster resultants against the component polynomials of p and Pw
    As, Bs, Cw, Dw = s_w_component_polys(bundle)
    mu = bundle.mu
    add("res_s_component", resultant(As, bundle.T) == (m - 2) ** 2 * mu**2 / 256)
    add("res_w_component", resultant(Cw, bundle.T) == mu**2 / 256)

    # discriminant facts
    dp = discriminant(p)
    dpbar = discriminant(pbar)
    add("disc_p_u6", dp == u**6 * dpbar)
    dT = discriminant(bundle.T)
    add("disc_T_square", perfect_square(dT) is not None, f"disc T = {dT}")

    return IdentityReport(m, A, checks)


# -- sigma as a rational map mod T ---------------------------------------


@dataclass
class SigmaMap:
    m: Fraction
    A: Fraction
    T: Poly
    u_expr: Poly
    s_expr: Poly
    w_expr: Poly
    sigma_num: Poly
    sigma_den: Poly
    sigma_x: Poly  # sigma(x) reduced mod T


def sigma_mod_T(m, A, bundle=None):
    """Realize s, w, u and the order-4 map inside Q[x]/(T(m, A, x)).

    Raises DegenerateParams when m = +-2 or the monster resultant vanishes.
    """
    m, A = _frac(m), _frac(A)
    case = degenerate_case(m, A)
    if case is not None and (m == 2 or m == -2 or monster_mu(m, A) == 0):
        raise DegenerateParams(case)
    if bundle is None:
        bundle = build_bundle(m, A)
    if bundle.mu == 0:
        raise DegenerateParams(degenerate_case(m, A) or "monster resultant vanishes")

    T = bundle.T
    As, Bs, Cw, Dw = s_w_component_polys(bundle)
    s_expr = pmod(-Bs * mod_inv(As, T), T)
    w_expr = pmod(-Dw * mod_inv(Cw, T), T)
    u_expr = (s_expr + m).scale(Fraction(1, 2))

    # construction invariants
    if pmod(s_expr * s_expr, T) != Poly((bundle.s2,)):
        raise ArithmeticError("s_expr^2 != m^2 - 4 mod T")
    if pmod(w_expr * w_expr, T) != Poly((bundle.w2,)):
        raise ArithmeticError("w_expr^2 != w^2 mod T")
    if pmod(u_expr * u_expr - u_expr.scale(m) + 1, T):
        raise ArithmeticError("u_expr does not satisfy u^2 - m u + 1 mod T")

    x = Poly((0, 1))
    num = -x - 1
    den = x + u_expr
    sigma_x = pmod(num * mod_inv(den, T), T)
    return SigmaMap(m, A, T, u_expr, s_expr, w_expr, num, den, sigma_x)


def sigma_orbit(sm, k=4):
    """[x, sigma(x), ..., sigma^(k-1)(x)] mod T."""
    x = Poly((0, 1))
    out = [x]
    for _ in range(k - 1):
        out.append(mod_compose(out[-1], sm.sigma_x, sm.T))
    return out


def murphy_identity_check(m, A):
    """Exact check of 1 + r + r sigma(r) + r sigma(r) sigma^2(r) = 0 in
    Q[x]/(T); m = -2 reduces to the quartic identity with u = -1."""
    m, A = _frac(m), _frac(A)
    if m == 2:
        raise DegenerateParams(degenerate_case(m, A))
    if m == -2:
        P = Poly((1, A, -6, -A, 1))
        x = Poly((0, 1))
        h1 = pmod((-x - 1) * mod_inv(x - 1, P), P)
        h2 = mod_compose(h1, h1, P)
        total = 1 + x + pmod(x * h1, P) + pmod(x * h1 * h2, P)
        return pmod(total, P).is_zero()
    sm = sigma_mod_T(m, A)
    x, h1 = Poly((0, 1)), sm.sigma_x
    h2 = mod_compose(h1, h1, sm.T)
    total = 1 + x + pmod(x * h1, sm.T) + pmod(x * h1 * h2, sm.T)
    return pmod(total, sm.T).is_zero()
