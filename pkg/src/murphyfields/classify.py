"""Classification of T(m, A, x) from rational data alone: the seven square
tests on s^2, w^2, y^2 and their products give [E:Q]; the group label, the
signature of T, and the totally-real exception lists all follow from exact
case analysis.  No factoring and no field arithmetic: everything here is
integer/rational square testing plus the literal sign conditions.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import is_square_int, perfect_square
from .polyring import Poly, gcd_poly, real_root_count_with_multiplicity, sturm_real_count
from .murphy import build_bundle, degenerate_case, monster_mu, related_octic

FLAG_NAMES = ("s2", "w2", "y2", "s2w2", "s2y2", "w2y2", "s2w2y2")

# twins with coinciding splitting fields, and the related dihedral quartics
# whose P_w is cyclic (s*y rational); annotated when encountered
TWINS_SAME_FIELD = {(-3, -4), (-7, 8), (-66, 13)}
PW_CYCLIC = {(-3, 5), (-7, -3), (-66, 51)}


def invariants(m, A):
    """(s2, w2, y2) as Fractions."""
    m, A = Fraction(m), Fraction(A)
    return m * m - 4, (m + 2 + A) ** 2 - 4 * (m - 2), A * A - 4 * (m - 2)


def _is_sq(v):
    return v == 0 or perfect_square(v) is not None


def square_flags(s2, w2, y2):
    vals = (s2, w2, y2, s2 * w2, s2 * y2, w2 * y2, s2 * w2 * y2)
    return dict(zip(FLAG_NAMES, (_is_sq(v) for v in vals)))


def degE_of(s2, w2, y2):
    """[E:Q] for E = Q(s, w, y); zero invariants drop their generator."""
    vals = [v for v in (s2, w2, y2) if v != 0]
    if not vals:
        return 1
    n = len(vals)
    squares = 0
    for mask in range(1, 1 << n):
        prod = Fraction(1)
        for i in range(n):
            if mask >> i & 1:
                prod *= vals[i]
        if perfect_square(prod) is not None:
            squares += 1
    # the subset products that are squares form the kernel; its size is
    # 2^n / degE, counting the empty product
    return (1 << n) // (squares + 1)


@dataclass
class Classification:
    m: Fraction
    A: Fraction
    s2: Fraction
    w2: Fraction
    y2: Fraction
    square_flags: dict
    degE: int
    T_irreducible: bool
    Psw_irreducible_over_Q: object  # bool when sw is rational, else None
    group: str
    signature: tuple
    totally_real: bool
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "schema": 1,
            "m": str(self.m),
            "A": str(self.A),
            "s2": str(self.s2),
            "w2": str(self.w2),
            "y2": str(self.y2),
            "square_flags": self.square_flags,
            "degE": self.degE,
            "T_irreducible": self.T_irreducible,
            "Psw_irreducible_over_Q": self.Psw_irreducible_over_Q,
            "group": self.group,
            "signature": list(self.signature) if self.signature else None,
            "totally_real": self.totally_real,
            "notes": self.notes,
        }

    def csv_row(self):
        real = self.signature[0] if self.signature else ""
        return f"{self.m},{self.A},{self.degE},{self.group},{real},{';'.join(self.notes)}"


def washington_t(m, A):
    """t with (m, A) = (t^2+2, -t^2-2t-4) when w^2 = 0, else None."""
    m, A = Fraction(m), Fraction(A)
    if (m + 2 + A) ** 2 != 4 * (m - 2):
        return None
    return -(m + 2 + A) / 2


def signature(m, A):
    """(real_roots, complex_pairs) of T(m, A, x), counting multiplicity.

    Literal sign case analysis; w^2 = 0 routes through the quartic doubling,
    y^2 = 0 through an exact Sturm count.  m = +-2 is not handled here (the
    octic machinery is not applicable); classify() routes those separately.
    """
    m, A = Fraction(m), Fraction(A)
    if m == 2 or m == -2:
        raise ValueError("signature of the collapsed m = +-2 cases is not defined here")
    s2, w2, y2 = invariants(m, A)
    if w2 == 0:
        t = washington_t(m, A)
        if abs(t + 1) > 1:
            return (8, 0)
        if abs(t + 1) < 1:
            return (0, 4)
        # t = -2, i.e. (m, A) = (6, -4): T = (x^2+2x-1)^4, both roots real
        return (8, 0)
    if y2 == 0:
        bundle = build_bundle(m, A)
        real = real_root_count_with_multiplicity(bundle.T)
        return (real, (8 - real) // 2)
    if s2 < 0 or w2 < 0:
        return (0, 4)
    if m < -2:
        return (8, 0)
    if y2 < 0:
        return (4, 2)
    # m > 2, w^2 > 0, y^2 > 0
    j = abs((A + 4) ** 2 + m * A * (A + 4) + A * A)
    if j > 16:
        return (8, 0)
    if j < 16:
        return (0, 4)
    raise ArithmeticError(
        "signature boundary |.| = 16 reached; cannot happen for m^2-4 non-square with simple roots"
    )


def classify(m, A):
    """Full rational-data classification of one parameter pair."""
    m, A = Fraction(m), Fraction(A)
    notes = []

    if m == 2 or m == -2:
        s2, w2, y2 = invariants(m, A)
        flags = square_flags(s2, w2, y2)
        if m == 2:
            disc_q = (A + 2) ** 2 - 4
            sig = (8, 0) if disc_q > 0 else (4, 2)
            notes.append("p = (x+1)^2 (x^2-(A+2)x+1); sigma collapses to the order-2 map 1/x")
            notes.append(f"quadratic-factor disc (A+2)^2-4 = {disc_q}")
            group = "degenerate(m=2)"
        else:
            notes.append("T = p^2 with p = x^4 - A x^3 - 6 x^2 + A x + 1")
            irr = perfect_square(A * A + 16) is None
            notes.append("p irreducible (cyclic quartic)" if irr else "p reducible (A^2+16 is a square)")
            group = "C4"
            sig = (8, 0)
        return Classification(
            m, A, s2, w2, y2, flags, degE_of(s2, w2, y2),
            False, None, group, sig, sig == (8, 0), notes,
        )

    s2, w2, y2 = invariants(m, A)
    flags = square_flags(s2, w2, y2)
    degE = degE_of(s2, w2, y2)
    sig = signature(m, A)
    T_irr = not (flags["s2"] or flags["w2"] or flags["s2w2"])
    sw_rational = flags["s2w2"]
    psw_irr = None
    if sw_rational:
        psw_irr = (not flags["s2"]) and y2 != 0

    if w2 == 0:
        t = washington_t(m, A)
        notes.append(f"w^2 = 0: T = P_t^2 for the cyclic quartic P_t at t={t}")
        notes.append("related octic carries the repeated factor (x^2-tx-1)^2")
        if t == -1:
            notes.append("splitting field Q(zeta_5)")
        group = "C4"
    elif y2 == 0:
        rm, rA = related_octic(m, A)
        notes.append(f"y^2 = 0: degenerate twins; related octic ({rm},{rA}) is the Washington form")
        notes.append("same splitting field as the related octic")
        group = "C4"
    elif degE == 8:
        group = "8T11"
    elif degE == 4:
        if flags["s2w2y2"]:
            group = "Q8"
        elif flags["w2"] or flags["y2"]:
            group = "D8(8)"
            if flags["w2"]:
                notes.append("P_w, P_w-bar are rational D4 quartics")
            else:
                notes.append("related octic has w rational (D4 quartic factors)")
        elif sw_rational:
            group = "C4_twins"
            notes.append(f"Murphy's twins: sw = {perfect_square(s2 * w2)}")
            notes.append("twins define distinct cyclic quartic fields")
        elif flags["s2y2"] or flags["w2y2"]:
            group = "C4xC2"
        else:
            group = "degenerate(s rational)"
            notes.append("m^2-4 is a rational square; the sigma construction is rejected")
    else:
        if A == -(m + 2) / 2:
            group = "V4"
            notes.append("self-related (d = -2 case)")
            notes.append(
                f"splitting field Q(sqrt({(m - 2) ** 2 - 16}), sqrt({(m - 4) ** 2 - 4}))"
            )
        elif A == -3 and perfect_square(17 - 4 * m) is not None:
            group = "V4"
            rt = perfect_square(17 - 4 * m)
            t = (-1 + rt) / 2
            notes.append(f"d = -1 case with m = 4 - t - t^2 at t={t}")
            notes.append(f"splitting field Q(sqrt({t * t - 4}), sqrt({(t + 1) ** 2 - 4}))")
        elif sw_rational and not flags["s2"]:
            group = "C4_twins"
            if flags["s2y2"]:
                notes.append("twins define the same cyclic quartic field")
            if (m, A) in TWINS_SAME_FIELD:
                notes.append("known same-field twins pair")
        elif flags["w2"] and flags["s2y2"]:
            group = "degenerate(degE=2)"
            notes.append("w rational with s*y rational: P_w defines cyclic quartic fields")
            if (m, A) in PW_CYCLIC:
                notes.append("known cyclic-P_w pair")
        else:
            group = f"degenerate(degE={degE})"
            notes.append("no group label certified at [E:Q] <= 2")

    case = degenerate_case(m, A)
    if case and monster_mu(m, A) == 0:
        notes.append(f"monster resultant vanishes: {case}")

    return Classification(
        m, A, s2, w2, y2, flags, degE, T_irr, psw_irr, group, sig, sig == (8, 0), notes
    )


def dihedral_quartic(m, d):
    """P_w for the explicit w-rational parameterization
    A = -m - 2 - d - (m-2)/d, w = (m-2)/d - d."""
    m, d = Fraction(m), Fraction(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    return Poly(
        (
            Fraction(1),
            (d + 1) * m + 2,
            (d + 2) * m + d * d + 2 * d + 2,
            m + 2 * d + 2,
            Fraction(1),
        )
    )


def dihedral_params(m, d):
    """(A, w) for the dihedral parameterization."""
    m, d = Fraction(m), Fraction(d)
    return -m - 2 - d - (m - 2) / d, (m - 2) / d - d


def totally_real_special(case, m, second):
    """Exception-list checks for the 'mostly real' splitting fields.

    case: 'yw' | 'swy' | 'divisor' | 'sw'; second is A (or d for 'divisor').
    Returns True when L is totally real.  Raises when the hypothesis fails.
    """
    m = Fraction(m)
    second = Fraction(second)
    if case == "divisor":
        d = second
        if d == 0:
            raise ValueError("d must be nonzero")
        if m.denominator == 1 and d.denominator == 1 and int(m - 2) % int(d) != 0:
            raise ValueError("need d | m - 2")
        if d * d > abs(m - 2):
            raise ValueError("need d^2 <= |m - 2|")
        exceptions = {(-1, 1), (-1, -1), (0, 1), (0, -1), (1, 1), (1, -1), (4, -1)}
        if (m, d) in exceptions:
            return False
        if d == -1 and m > 4:
            return False
        return True

    A = second
    s2, w2, y2 = invariants(m, A)
    if s2 * w2 * y2 == 0:
        raise ValueError("hypothesis needs s^2 w^2 y^2 != 0")
    flags = square_flags(s2, w2, y2)
    if case == "yw":
        if not flags["w2y2"]:
            raise ValueError("yw is not rational")
        return (m, A) not in {(1, -4), (1, 1), (4, -3)}
    if case == "swy":
        if not flags["s2w2y2"]:
            raise ValueError("swy is not rational")
        return True
    if case == "sw":
        if not flags["s2w2"]:
            raise ValueError("sw is not rational")
        return (m, A) not in {(7, -4), (7, 1)}
    raise ValueError(f"unknown case {case!r}")


# -- integer scans -------------------------------------------------------


def _int_flags(s2, w2, y2):
    def sq(v):
        return v == 0 or (v > 0 and is_square_int(v))

    return (
        sq(s2), sq(w2), sq(y2),
        sq(s2 * w2), sq(s2 * y2), sq(w2 * y2), sq(s2 * w2 * y2),
    )


def _int_degE(s2, w2, y2):
    def sq(v):
        return v > 0 and is_square_int(v)

    vals = [v for v in (s2, w2, y2) if v != 0]
    if not vals:
        return 1
    if len(vals) == 3:
        squares = sum(
            (sq(s2), sq(w2), sq(y2), sq(s2 * w2), sq(s2 * y2), sq(w2 * y2), sq(s2 * w2 * y2))
        )
        return 8 // (squares + 1)
    if len(vals) == 2:
        a, b = vals
        squares = sum((sq(a), sq(b), sq(a * b)))
        return 4 // (squares + 1)
    return 1 if sq(vals[0]) else 2


def _a_range(m, offset_bound):
    """Integers A with |A + (m+2)/2| <= offset_bound."""
    twice_center = -(m + 2)  # A ranges around -(m+2)/2
    lo = (twice_center - 2 * offset_bound + 1) // 2
    hi = (twice_center + 2 * offset_bound) // 2
    return range(lo, hi + 1)


def scan_degE_fraction(m_bound=100, offset_bound=100):
    """Fast integer sweep: histogram of [E:Q] over |m| <= m_bound,
    |A + (m+2)/2| <= offset_bound, m != +-2; returns (fraction8, histogram,
    total)."""
    hist = {1: 0, 2: 0, 4: 0, 8: 0}
    total = 0
    for m in range(-m_bound, m_bound + 1):
        if m in (2, -2):
            continue
        s2 = m * m - 4
        for A in _a_range(m, offset_bound):
            w2 = (m + 2 + A) ** 2 - 4 * (m - 2)
            y2 = A * A - 4 * (m - 2)
            hist[_int_degE(s2, w2, y2)] += 1
            total += 1
    frac = Fraction(hist[8], total) if total else None
    return frac, hist, total


def abelian_nonreal_pairs(m_bound=100, offset_bound=100):
    """Integer pairs in the scan window whose splitting field is certified
    Abelian and non-real by the classification theorems: the degE = 4
    Abelian branches, the collapsed Washington routes (w^2 = 0 / y^2 = 0),
    and the signature-case V4 pair.  (d = -2 pairs with m <= 2 also give
    Abelian V4 fields but sit outside these certified branches; see the
    classifier notes.)"""
    out = []
    for m in range(-m_bound, m_bound + 1):
        if m in (2, -2):
            continue
        for A in _a_range(m, offset_bound):
            s2, w2, y2 = m * m - 4, (m + 2 + A) ** 2 - 4 * (m - 2), A * A - 4 * (m - 2)
            if w2 == 0:
                t = -(m + 2 + A) // 2
                if abs(t + 1) < 1:
                    out.append((m, A))
                continue
            if y2 == 0:
                rA = -m - 2 - A
                if (m + 2 + rA) ** 2 == 4 * (m - 2):
                    t = -(m + 2 + rA) // 2
                    if abs(t + 1) < 1:
                        out.append((m, A))
                continue
            fl = _int_flags(s2, w2, y2)
            nsq = sum(fl)
            if nsq == 1 and (fl[3] or fl[4] or fl[5]):  # sw, sy or wy rational
                if signature(m, A) != (8, 0):
                    out.append((m, A))
            elif 2 * A == -(m + 2) and m > 2:
                if signature(m, A) == (0, 4):
                    out.append((m, A))
    return sorted(out)
