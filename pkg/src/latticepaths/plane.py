"""Closed-form counts for monotone paths in the plane.

Difference formulas for one and two diagonal boundaries, a trigonometric
twin for the two-sided band, cycle-lemma counts for lines of integer and
rational slope, a transfer recursion for piecewise linear boundaries, and
the three-candidate ballot count in Z^3.

Everything is exact.  Floats appear only inside the trigonometric band
evaluator, which rounds to the nearest integer behind a residual guard and
re-evaluates in high-precision decimal arithmetic when the guard trips.
Boundary conventions: "weakly below the line x = mu*y + nu" means the
half-plane x >= mu*y + nu, checked at every vertex of the path.
"""

import math
from decimal import Decimal, localcontext
from fractions import Fraction

from .algebra import (
    NumericGuardError,
    Poly,
    binom,
    gen_binom,
    multinomial,
    qbinom,
)


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


def _exact_int(value, what):
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError("%s did not reduce to an integer: %s" % (what, value))
    return int(value)


def count_simple(a, b, c, d):
    """Number of east/north paths from (a,b) to (c,d)."""
    if c < a or d < b:
        return 0
    return binom(c + d - a - b, c - a)


def count_pm(n, a, b, c, d):
    """Walks of length n from (a,b) to (c,d) with steps (+-1,0), (0,+-1).

    Zero when the parity of n does not match the displacement.
    """
    _require(n >= 0, "needs n >= 0, got n=%r" % (n,))
    h = n + c + d - a - b
    if h % 2:
        return 0
    return binom(n, h // 2) * binom(n, (n + c - d - a + b) // 2)


def delannoy(a, b, c, d):
    """Paths from (a,b) to (c,d) with east, north, and diagonal steps."""
    if c < a or d < b:
        return 0
    total = 0
    for k in range(min(c - a, d - b) + 1):
        total += multinomial((k, c - a - k, d - b - k))
    return total


def area_gf(a, b, c, d):
    """Generating polynomial of east/north paths (a,b)->(c,d) by area.

    Area is the number of unit cells below the path and above the x-axis,
    equivalently the sum of heights of the east steps.
    """
    if c < a or d < b:
        return Poly([], ring="int")
    return qbinom(c + d - a - b, c - a).shift(b * (c - a))


def below_diagonal(a, b, c, d):
    """East/north paths (a,b)->(c,d) staying weakly below y = x."""
    _require(a >= b, "needs a >= b, got a=%r, b=%r" % (a, b))
    _require(c >= d, "needs c >= d, got c=%r, d=%r" % (c, d))
    if c < a or d < b:
        return 0
    n = c + d - a - b
    return binom(n, c - a) - binom(n, c - b + 1)


def catalan(n):
    _require(n >= 0, "needs n >= 0, got n=%r" % (n,))
    return binom(2 * n, n) // (n + 1)


def ballot(c, d):
    """East/north paths (0,0)->(c,d) weakly below y = x (c >= d >= 0)."""
    _require(c >= d, "needs c >= d, got c=%r, d=%r" % (c, d))
    _require(d >= 0, "needs d >= 0, got d=%r" % (d,))
    value = Fraction(c + 1 - d, c + d + 1) * binom(c + d + 1, d)
    return _exact_int(value, "ballot count")


def _check_band(a, b, c, d, s, t):
    _require(a + t >= b, "needs a+t >= b, got a+t=%r, b=%r" % (a + t, b))
    _require(b >= a + s, "needs b >= a+s, got b=%r, a+s=%r" % (b, a + s))
    _require(c + t >= d, "needs c+t >= d, got c+t=%r, d=%r" % (c + t, d))
    _require(d >= c + s, "needs d >= c+s, got d=%r, c+s=%r" % (d, c + s))


def between_diagonals(a, b, c, d, s, t):
    """East/north paths (a,b)->(c,d) with s <= y-x <= t at every vertex.

    Reflection sum over the dihedral group generated by the two band walls;
    the index range is derived from binomial support, so the sum is finite.
    """
    _check_band(a, b, c, d, s, t)
    if c < a or d < b:
        return 0
    n = c + d - a - b
    K = t - s + 2

    # binom(n, j) vanishes outside 0 <= j <= n; solve each residue family
    # for its k-window and take the union
    def ceil_div(p, q):
        return -((-p) // q)

    lo = min(ceil_div(c - a - n, K), ceil_div(c - b + t + 1 - n, K))
    hi = max((c - a) // K, (c - b + t + 1) // K)
    total = 0
    for k in range(lo, hi + 1):
        total += binom(n, c - a - k * K) - binom(n, c - b + t + 1 - k * K)
    return total


def _dec_pi(prec):
    # Machin's arctan identity evaluated with decimal Taylor series
    with localcontext() as ctx:
        ctx.prec = prec + 10

        def atan_inv(x):
            # arctan(1/x) for integer x > 1
            total = term = Decimal(1) / x
            xx = x * x
            n = 1
            while True:
                term = term / xx
                piece = term / (2 * n + 1)
                if not piece:
                    break
                total += -piece if n % 2 else piece
                n += 1
            return total

        return 16 * atan_inv(5) - 4 * atan_inv(239)


def _dec_sin(x, prec):
    with localcontext() as ctx:
        ctx.prec = prec + 10
        total = term = Decimal(x)
        n = 1
        xx = x * x
        while True:
            term = -term * xx / ((2 * n) * (2 * n + 1))
            if not term:
                break
            total += term
            n += 1
        return +total


def _dec_cos(x, prec):
    with localcontext() as ctx:
        ctx.prec = prec + 10
        total = term = Decimal(1)
        n = 1
        xx = x * x
        while True:
            term = -term * xx / ((2 * n - 1) * (2 * n))
            if not term:
                break
            total += term
            n += 1
        return +total


def _band_trig_decimal(n, K, u, v, prec=50):
    pi = _dec_pi(prec)
    with localcontext() as ctx:
        ctx.prec = prec
        total = Decimal(0)
        for k in range(1, K):
            # reduce the sine arguments mod 2K before multiplying by pi/K,
            # so the Taylor series only ever sees arguments below 2*pi
            c = 2 * _dec_cos(pi * k / K, prec)
            su = _dec_sin(pi * ((k * u) % (2 * K)) / K, prec)
            sv = _dec_sin(pi * ((k * v) % (2 * K)) / K, prec)
            total += (c ** n) * su * sv
        total = total * 2 / K
    return total


def between_diagonals_trig(a, b, c, d, s, t):
    """Same count as between_diagonals, via the eigenvalue expansion.

    The band transfer matrix has eigenvalues 2cos(pi k/(t-s+2)) with sine
    eigenvectors; summing the spectral expansion gives the path count as a
    finite trigonometric sum.  Evaluated in double precision, rounded, and
    re-evaluated in decimal arithmetic (precision growing with n, since
    the sum is of size up to 2^n) if the float result cannot be trusted.
    """
    _check_band(a, b, c, d, s, t)
    if c < a or d < b:
        return 0
    n = c + d - a - b
    K = t - s + 2
    u = b - a - s + 1
    v = d - c - s + 1
    value = 0.0
    for k in range(1, K):
        value += (
            (2.0 * math.cos(math.pi * k / K)) ** n
            * math.sin(math.pi * k * u / K)
            * math.sin(math.pi * k * v / K)
        )
    value *= 2.0 / K
    nearest = round(value)
    # beyond 1e12 a double cannot pin an integer to 1e-6, so the residual
    # test alone would accept garbage
    if abs(value) <= 1e12 and abs(value - nearest) <= 1e-6:
        return int(nearest)
    prec = 50 + (31 * n) // 100
    refined = _band_trig_decimal(n, K, u, v, prec)
    nearest = int(refined.to_integral_value(rounding="ROUND_HALF_EVEN"))
    if abs(refined - nearest) > Decimal("1e-6"):
        raise NumericGuardError(
            "trigonometric band count failed to round: %s" % (refined,)
        )
    return nearest


def rational_catalan(r, s):
    """Paths (0,0)->(r,s) weakly below the line s*x = r*y, gcd(r,s)=1."""
    _require(r >= 1, "needs r >= 1, got r=%r" % (r,))
    _require(s >= 1, "needs s >= 1, got s=%r" % (s,))
    _require(math.gcd(r, s) == 1, "needs gcd(r,s) = 1, got gcd=%r" % (math.gcd(r, s),))
    return binom(r + s, r) // (r + s)


def below_slope_mu(c, d, mu):
    """Paths (0,0)->(c,d) weakly below x = mu*y (i.e. x >= mu*y throughout)."""
    _require(mu >= 0, "needs mu >= 0, got mu=%r" % (mu,))
    _require(c >= mu * d, "needs c >= mu*d, got c=%r, mu*d=%r" % (c, mu * d))
    if c < 0 or d < 0:
        return 0
    value = Fraction(c - mu * d + 1, c + d + 1) * binom(c + d + 1, d)
    return _exact_int(value, "slope count")


VARIANT_LAST_TOUCH = "last-touch"
VARIANT_INCL_EXCL = "inclusion-exclusion"


def below_slope_mu_general(a, b, c, d, mu, variant=VARIANT_INCL_EXCL):
    """Paths (a,b)->(c,d) weakly below x = mu*y, from either of two formulas.

    "last-touch" subtracts, over the last visit to x = mu*y - 1, paths that
    cross the boundary; "inclusion-exclusion" alternates over reflections.
    Both return the same integer.
    """
    _require(mu >= 0, "needs mu >= 0, got mu=%r" % (mu,))
    _require(a >= mu * b, "needs a >= mu*b, got a=%r, mu*b=%r" % (a, mu * b))
    _require(c >= mu * d, "needs c >= mu*d, got c=%r, mu*d=%r" % (c, mu * d))
    if c < a or d < b:
        return 0
    if mu == 0:
        # the boundary x >= 0 is implied by monotonicity from a >= 0
        return count_simple(a, b, c, d)
    if variant == VARIANT_LAST_TOUCH:
        total = Fraction(binom(c + d - a - b, c - a))
        for i in range(a // mu + 1, d + 1):
            w = c + d - i * (mu + 1) + 1
            total -= (
                binom(i * (mu + 1) - a - b - 1, i - b)
                * Fraction(c - mu * d + 1, w)
                * binom(w, d - i)
            )
        return _exact_int(total, "slope count")
    if variant == VARIANT_INCL_EXCL:
        total = Fraction(0)
        for i in range(a // mu - b + 1):
            if d - b - i < 0:
                break
            w = c + d - (mu + 1) * (b + i) + 1
            total += (
                (-1) ** i
                * binom(a - mu * (b + i), i)
                * Fraction(c - mu * d + 1, w)
                * binom(w, d - b - i)
            )
        return _exact_int(total, "slope count")
    raise ValueError("unknown variant %r" % (variant,))


def _touch_poly(lead, offset, m):
    """(x + lead) * prod_{t=0}^{m-2} (x + offset - t) / m!  as a Poly (m >= 1).

    This is the polynomial form of (x - lead') / (x + offset + 1)
    * binom(x + offset + 1, m) with the leading factor cancelled, so it is
    defined for every integer x, not just in the combinatorial range.
    """
    if m == 0:
        return Poly([Fraction(1)], ring="frac")
    out = Poly([Fraction(lead), Fraction(1)], ring="frac")
    for t in range(m - 1):
        out = out * Poly([Fraction(offset - t), Fraction(1)], ring="frac")
    return out * Fraction(1, math.factorial(m))


def _slope_count_poly(mu, nu, height):
    """Count of paths (0,0)->(x, height) weakly below x = mu*y + nu, as a
    polynomial in the end abscissa x.

    The polynomial agrees with the path count for all integers x where the
    count is defined and continues it elsewhere; the piecewise recursion
    evaluates it at points outside the combinatorial range.
    """
    if nu > 0:
        return Poly([], ring="frac")  # the origin already violates x >= nu
    if mu == 0:
        # unconstrained: binom(x + height, height) in falling-factorial form
        out = Poly([Fraction(1)], ring="frac")
        for j in range(height):
            out = out * Poly([Fraction(height - j), Fraction(1)], ring="frac")
        return out * Fraction(1, math.factorial(height))
    shift = -nu  # translate so the boundary passes through the origin
    total = Poly([], ring="frac")
    for k in range(shift // mu + 1):
        m = height - k
        if m < 0:
            break
        sign = -1 if k % 2 else 1
        coeff = sign * binom(shift - mu * k, k)
        if coeff == 0:
            continue
        term = _touch_poly(
            shift - mu * height + 1, shift + height - (mu + 1) * k, m
        )
        total = total + coeff * term
    return total


def _segment_polys(segments):
    """Table P[j][i] = count polynomial at height i under the first j+1
    boundary pieces, for the piecewise recursion."""
    breaks = [y for (_, _, y) in segments]
    polys = []
    mu1, nu1, y1 = segments[0]
    polys.append([_slope_count_poly(mu1, nu1, i) for i in range(y1 + 1)])
    for j in range(1, len(segments)):
        mu, nu, yj = segments[j]
        prev = polys[j - 1]
        prev_top = breaks[j - 1]
        # values of the lower table at the entry abscissa of this segment
        entry = [prev[h](Fraction(mu * h + nu - 1)) for h in range(prev_top + 1)]
        rows = list(prev)
        for i in range(prev_top + 1, yj + 1):
            acc = Poly([], ring="frac")
            for h in range(prev_top + 1):
                if entry[h] == 0:
                    continue
                term = _touch_poly(
                    -mu * i - nu + 1, i - h * (mu + 1) - nu, i - h
                )
                acc = acc + entry[h] * term
            rows.append(acc)
        polys.append(rows)
    return polys


def piecewise_boundary(segments, c, d):
    """Paths (0,0)->(c,d) weakly below a piecewise linear boundary.

    segments: list of (mu_i, nu_i, y_i); piece i enforces x >= mu_i*y + nu_i
    for y in (y_{i-1}, y_i], with y_0 = 0 and the first piece also covering
    y = 0.  Requires 0 < y_1 < ... < y_m = d and mu_i >= 0.

    Intermediate counts are carried as polynomials in the horizontal
    coordinate, so the recursion stays correct for non-convex boundaries
    where the transfer evaluates them outside the combinatorial range.
    The segment list is read as one boundary curve; lists whose bound
    profile jumps downward across a break while the earlier piece was
    binding describe no such curve and are outside the recursion's domain.
    """
    segments = [tuple(seg) for seg in segments]
    _require(segments, "needs a non-empty segment list")
    _require(
        all(len(seg) == 3 for seg in segments),
        "each segment must be a (mu, nu, y) triple",
    )
    prev_y = 0
    for mu, nu, y in segments:
        _require(mu >= 0, "needs mu >= 0 in every segment, got mu=%r" % (mu,))
        _require(
            y > prev_y,
            "needs strictly increasing segment tops, got %r after %r" % (y, prev_y),
        )
        prev_y = y
    _require(
        prev_y == d,
        "needs last segment top = d, got top=%r, d=%r" % (prev_y, d),
    )
    polys = _segment_polys(segments)
    value = polys[-1][d](Fraction(c))
    return _exact_int(value, "piecewise boundary count")


def _sato_coeff(m):
    # m-th coefficient of the slope-3/2 fundamental series
    return Fraction(1, 1 + 5 * m) * gen_binom(Fraction(1 + 5 * m, 2), m)


def sato_example_23(n):
    """Paths weakly below 2x = 3y (n even, endpoint (3n/2, n)) or below
    2x = 3y - 1 (n odd, endpoint ((3n-1)/2, n)).

    Closed form from the slope-3/2 generating-function factorization; the
    result of the rational arithmetic must be an integer, anything else
    signals a transcription bug.
    """
    _require(n >= 0, "needs n >= 0, got n=%r" % (n,))
    if n % 2 == 0:
        total = Fraction(0)
        for l in range(n + 1):
            sign = -1 if l % 2 else 1
            total += sign * _sato_coeff(l) * _sato_coeff(n - l)
    else:
        total = 2 * _sato_coeff(n)
    if total.denominator != 1:
        raise ArithmeticError("slope-3/2 count did not reduce to an integer: %s" % (total,))
    return int(total)


def kreweras(e1, e2, e3, product_form=False):
    """Simple paths in Z^3 from the origin to (e1,e2,e3) with
    x1 >= max(x2, x3) at every vertex.

    The default is the double-sum formula; product_form=True uses the
    closed product, which is only valid when e1 == e2.
    """
    _require(e2 >= 0, "needs e2 >= 0, got e2=%r" % (e2,))
    _require(e3 >= 0, "needs e3 >= 0, got e3=%r" % (e3,))
    _require(
        e1 >= max(e2, e3),
        "needs e1 >= max(e2,e3), got e1=%r, max=%r" % (e1, max(e2, e3)),
    )
    if product_form:
        _require(e1 == e2, "product form needs e1 == e2, got e1=%r, e2=%r" % (e1, e2))
        value = (
            Fraction(2 ** (2 * e3 + 1))
            * math.factorial(2 * e1 + e3)
            * math.factorial(2 * e1 - 2 * e3 + 1)
            / (
                math.factorial(2 * e1 + 2)
                * math.factorial(e3)
                * math.factorial(e1 - e3) ** 2
            )
        )
        return _exact_int(value, "three-candidate count")
    total_steps = e1 + e2 + e3
    m = multinomial((e1, e2, e3))
    value = Fraction(m) - Fraction(e2 + e3, 1 + e1) * m
    for i in range(1, e3 + 1):
        for j in range(1, e2 + 1):
            sign = -1 if (i + j) % 2 else 1
            value += sign * Fraction(
                math.factorial(total_steps)
                * math.factorial(2 * i + 2 * j - 2)
                * math.factorial(i + j - 2),
                math.factorial(i)
                * math.factorial(e3 - i)
                * math.factorial(j)
                * math.factorial(e2 - j)
                * math.factorial(2 * i - 1)
                * math.factorial(2 * j - 1)
                * math.factorial(i + j + e1),
            )
    return _exact_int(value, "three-candidate count")
