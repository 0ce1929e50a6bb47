"""Motzkin and Schroeder path counting.

Closed-form step sums for paths above the x-axis, Motzkin/Schroeder
number sequences and their algebraic generating functions, continued
fractions for weighted paths, and three ways to count paths confined to
a horizontal strip: transfer-matrix iteration, a rational generating
function built from orthogonal-polynomial reciprocals, and a
trigonometric eigenvalue sum.

Weight convention throughout: an up-step weighs 1, a level-step at
height h weighs b_h, a down-step from height h weighs lam_h.
"""

from fractions import Fraction
from functools import lru_cache
from math import cos, pi, sin
from decimal import Decimal, localcontext

from .algebra import NumericGuardError, Poly, TruncSeries, binom
from .plane import _dec_cos, _dec_pi, _dec_sin, catalan
from .plane import _require


def _half_binom(n, half):
    # binomial whose lower index may be a half-integer; zero by convention
    # when it is not integral
    if half % 2:
        return 0
    return binom(n, half // 2)


def motzkin_count(a, b, c, d):
    """Paths (a,b) -> (c,d) with steps (1,1), (1,-1), (1,0) staying
    weakly above the x-axis, summed over the number of level steps."""
    _require(b >= 0, "needs b >= 0")
    _require(d >= 0, "needs d >= 0")
    total = 0
    for k in range(c - a + 1):
        total += binom(c - a, k) * (
            _half_binom(c - a - k, c + d - k - a - b)
            - _half_binom(c - a - k, c + d - k - a + b + 2)
        )
    return total


def schroeder_count(a, b, c, d):
    """Paths (a,b) -> (c,d) with steps (1,1), (1,-1), (2,0) staying
    weakly above the x-axis."""
    _require(b >= 0, "needs b >= 0")
    _require(d >= 0, "needs d >= 0")
    total = 0
    for k in range((c - a) // 2 + 1):
        total += binom(c - a - k, k) * (
            _half_binom(c - a - 2 * k, c + d - 2 * k - a - b)
            - _half_binom(c - a - 2 * k, c + d - 2 * k - a + b + 2)
        )
    return total


def motzkin_number(n):
    """Motzkin paths (0,0) -> (n,0)."""
    _require(n >= 0, "needs n >= 0")
    return sum(binom(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def schroeder_number(n):
    """Large Schroeder numbers: Schroeder paths (0,0) -> (2n,0)."""
    _require(n >= 0, "needs n >= 0")
    return sum(binom(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def little_schroeder(n):
    """Half the large Schroeder number for n >= 1; each path pairs with a
    partner under swapping the first level step with an up-down peak."""
    _require(n >= 0, "needs n >= 0")
    if n == 0:
        return 1
    return schroeder_number(n) // 2


def motzkin_gf(N):
    """Series of Motzkin numbers to order N, bootstrapped from
    M = 1 + z M + z^2 M^2 coefficient by coefficient."""
    _require(N >= 0, "needs N >= 0")
    m = [1]
    for n in range(1, N + 1):
        conv = sum(m[i] * m[n - 2 - i] for i in range(n - 1))
        m.append(m[n - 1] + conv)
    return TruncSeries(m, N)


def schroeder_gf(N):
    """Series of large Schroeder numbers to order N, bootstrapped from
    S = 1 + z S + z S^2."""
    _require(N >= 0, "needs N >= 0")
    s = [1]
    for n in range(1, N + 1):
        conv = sum(s[i] * s[n - 1 - i] for i in range(n))
        s.append(s[n - 1] + conv)
    return TruncSeries(s, N)


class MotzkinWeighting:
    """Step weights for paths in a strip: b[h] weighs a level step at
    height h, lam[h] weighs a down step from height h+1 to h... stored as
    lam = [weight of down step from height 1, from height 2, ...].

    Entries are ring elements: ints, Fractions, polynomials, or symbolic
    multivariate polynomials.
    """

    __slots__ = ("b", "lam")

    def __init__(self, b, lam):
        b = tuple(b)
        lam = tuple(lam)
        if not b or len(lam) != len(b) - 1:
            raise ValueError(
                "weighting needs level weights b_0..b_k and down weights "
                "lam_1..lam_k"
            )
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "lam", lam)

    def __setattr__(self, name, value):
        raise AttributeError("MotzkinWeighting is immutable")

    @property
    def depth(self):
        return len(self.b) - 1

    @staticmethod
    def constant(b_value, lam_value, depth):
        """The same level weight and down weight at every height."""
        return MotzkinWeighting([b_value] * (depth + 1), [lam_value] * depth)

    def __repr__(self):
        return "MotzkinWeighting(b=%r, lam=%r)" % (list(self.b), list(self.lam))


def _as_series(x, N):
    if isinstance(x, TruncSeries):
        return x.truncate(N)
    if isinstance(x, Poly):
        return TruncSeries(list(x.coeffs), N)
    return TruncSeries([x], N)


def _const_term(x):
    if isinstance(x, TruncSeries):
        return x.coeff(0)
    if isinstance(x, Poly):
        return x.coeff(0)
    return x


def cf_series(w, k, N):
    """Weighted Motzkin paths (0,0) -> (*,0) of height at most k, as the
    finite continued fraction 1/(1 - b_0 - lam_1/(1 - b_1 - ...)).

    k=None counts unbounded paths; the fraction is then cut at depth N,
    which is safe because a path contributing to a coefficient <= N has
    at most N down steps and every weight has zero constant term (that
    last condition is enforced).  Dividing by a series whose constant
    term vanishes raises ZeroDivisionError.
    """
    _require(N >= 0, "needs N >= 0")
    if k is None:
        if w.depth < N:
            raise ValueError("unbounded evaluation to order %d needs weights "
                             "up to height %d" % (N, N))
        k = N
        for x in w.b[: k + 1] + w.lam[:k]:
            if _const_term(x) != 0:
                raise ValueError(
                    "unbounded evaluation needs zero-constant-term weights")
    else:
        _require(0 <= k <= w.depth, "needs 0 <= k <= weighting depth")
    f = (TruncSeries.one(N) - _as_series(w.b[k], N)).reciprocal()
    for h in range(k - 1, -1, -1):
        den = TruncSeries.one(N) - _as_series(w.b[h], N) - _as_series(w.lam[h], N) * f
        f = den.reciprocal()
    return f


def rv_peak_cf(nu, lam, N):
    """Dyck paths weighted by peaks: a down step from height h weighs
    nu_h when it closes a peak and lam_h otherwise; up steps weigh 1.
    Continued fraction 1/(1 - (nu_1-lam_1) - lam_1/(1 - (nu_2-lam_2) - ...)).
    """
    _require(N >= 0, "needs N >= 0")
    nu = list(nu)
    lam = list(lam)
    if len(nu) != len(lam) or not nu:
        raise ValueError("need equal-length nonempty weight lists")
    if len(nu) < N:
        # a path touching height h carries h down-step weights, each of
        # degree >= 1, so heights above N cannot reach coefficients <= N
        raise ValueError("order %d needs weights up to height %d" % (N, N))
    for x in nu + lam:
        if _const_term(x) != 0:
            raise ValueError("peak fraction needs zero-constant-term weights")
    f = TruncSeries.one(N)
    for h in range(len(nu) - 1, -1, -1):
        den = (TruncSeries.one(N)
               - (_as_series(nu[h], N) - _as_series(lam[h], N))
               - _as_series(lam[h], N) * f)
        f = den.reciprocal()
    return f


def strip_count_transfer(r, s, k, n, w):
    """Weighted count of strip paths (0,r) -> (n,s) with 0 <= y <= k, by
    n products with the tridiagonal transfer matrix."""
    _require(0 <= r <= k, "needs 0 <= r <= k")
    _require(0 <= s <= k, "needs 0 <= s <= k")
    _require(n >= 0, "needs n >= 0")
    _require(w.depth >= k, "weighting too shallow for the strip")
    vec = [0] * (k + 1)
    vec[r] = 1
    for _ in range(n):
        new = []
        for h in range(k + 1):
            acc = vec[h] * w.b[h]
            if h > 0:
                acc = acc + vec[h - 1]
            if h < k:
                acc = acc + vec[h + 1] * w.lam[h]
            new.append(acc)
        vec = new
    return vec[s]


def _recurrence_coeff_lists(b, lam, n):
    """Coefficient lists (constant first) of the monic polynomials p_0..p_n
    from p_{m+1} = (x - b_m) p_m - lam_m p_{m-1}, p_0 = 1, p_1 = x - b_0.

    b[m] is b_m and lam[m] is lam_{m+1}, matching MotzkinWeighting; the
    entries may be any ring elements.
    """
    ps = [[1]]
    if n >= 1:
        ps.append([0 - b[0], 1])
    for m in range(1, n):
        cur, prev = ps[m], ps[m - 1]
        nxt = [0] * (m + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - b[m] * c
        for i, c in enumerate(prev):
            nxt[i] = nxt[i] - lam[m - 1] * c
        ps.append(nxt)
    return ps


def _reciprocal_series(coeffs, N):
    # reciprocal polynomial of a monic one: reverse the coefficients, so
    # the constant term becomes 1 and series division is well defined
    return TruncSeries(list(reversed(coeffs)), N)


@lru_cache(maxsize=128)
def _denominator_inverse(coeffs, N):
    # the strip denominator depends only on the weighting and the strip
    # height, not on the endpoints, and its series inverse dominates the
    # cost of strip_gf; ring elements are hashable, so memoize it
    return _reciprocal_series(coeffs, N).reciprocal()


def strip_gf(r, s, k, w, N):
    """Series in z whose coefficient at z^n is the weighted count of
    strip paths (0,r) -> (n,s) with 0 <= y <= k.

    Rational form: reciprocals of the three-term-recurrence polynomials
    for the weights, the denominator being the reciprocal of p_{k+1};
    crossing downward multiplies by the skipped down-step weights.
    """
    _require(0 <= r <= k, "needs 0 <= r <= k")
    _require(0 <= s <= k, "needs 0 <= s <= k")
    _require(N >= 0, "needs N >= 0")
    _require(w.depth >= k, "weighting too shallow for the strip")
    lo, hi = min(r, s), max(r, s)
    base = _recurrence_coeff_lists(w.b, w.lam, k + 1)
    shifted = _recurrence_coeff_lists(w.b[hi + 1:], w.lam[hi + 1:], k - hi)
    num = (_reciprocal_series(base[lo], N)
           * _reciprocal_series(shifted[k - hi], N)).shift(hi - lo)
    gf = num * _denominator_inverse(tuple(base[k + 1]), N)
    if r > s:
        factor = 1
        for h in range(s + 1, r + 1):
            factor = factor * w.lam[h - 1]
        gf = _as_series(factor, N) * gf
    return gf


def _strip_trig_float(r, s, k, n):
    K = k + 2
    total = 0.0
    for j in range(1, K):
        total += ((2 * cos(pi * j / K) + 1) ** n
                  * sin(pi * j * (r + 1) / K)
                  * sin(pi * j * (s + 1) / K))
    return 2 * total / K


def _strip_trig_decimal(r, s, k, n, prec=50):
    K = k + 2
    pi_d = _dec_pi(prec)
    u, v = r + 1, s + 1
    with localcontext() as ctx:
        ctx.prec = prec
        total = Decimal(0)
        for j in range(1, K):
            c = 2 * _dec_cos(pi_d * j / K, prec) + 1
            su = _dec_sin(pi_d * ((j * u) % (2 * K)) / K, prec)
            sv = _dec_sin(pi_d * ((j * v) % (2 * K)) / K, prec)
            total += (c ** n) * su * sv
        total = total * 2 / K
    return total


def strip_count_trig(r, s, k, n):
    """Unweighted strip paths (0,r) -> (n,s) with 0 <= y <= k, by the
    eigenvalue expansion of the transfer matrix (eigenvalues
    2cos(pi j/(k+2)) + 1 with sine eigenvectors).

    Double precision first; if the result cannot be trusted the sum is
    re-evaluated in decimals at a precision growing with n (the sum is of
    size up to 3^n), and a result that still fails to round raises
    NumericGuardError.
    """
    _require(0 <= r <= k, "needs 0 <= r <= k")
    _require(0 <= s <= k, "needs 0 <= s <= k")
    _require(n >= 0, "needs n >= 0")
    approx = _strip_trig_float(r, s, k, n)
    nearest = round(approx)
    # beyond 1e12 a double cannot pin an integer to 1e-6, so the residual
    # test alone would accept garbage
    if abs(approx) <= 1e12 and abs(approx - nearest) <= 1e-6:
        return nearest
    refined = _strip_trig_decimal(r, s, k, n, prec=50 + (48 * n) // 100)
    nearest = int(refined.to_integral_value(rounding="ROUND_HALF_EVEN"))
    if abs(refined - nearest) > Decimal("1e-6"):
        raise NumericGuardError(
            "trigonometric strip count failed to round: %s" % (refined,))
    return nearest


def gambler_ruin(a, R, N, pA, pB):
    """Probability that a player starting with a dollars (opponent holds
    R - a) is bankrupted in exactly N rounds, winning each round with
    probability pA, losing with pB, tying otherwise.

    The first N-1 rounds walk the bankroll-minus-one between 0 and R-2
    (hitting either boundary of [0, R] would end the game early) and the
    last round is a loss, so the answer is pB times a weighted strip
    count.
    """
    if not (isinstance(a, int) and isinstance(R, int) and 0 < a < R):
        raise ValueError("needs integer stakes 0 < a < R")
    _require(N >= 1, "needs N >= 1")
    pA = Fraction(pA)
    pB = Fraction(pB)
    if pA < 0 or pB < 0 or pA + pB > 1:
        raise ValueError("needs probabilities pA, pB >= 0 with pA + pB <= 1")
    pT = 1 - pA - pB
    top = R - 2
    vec = [Fraction(0)] * (top + 1)
    vec[a - 1] = Fraction(1)
    for _ in range(N - 1):
        new = []
        for h in range(top + 1):
            acc = vec[h] * pT
            if h > 0:
                acc += vec[h - 1] * pA
            if h < top:
                acc += vec[h + 1] * pB
            new.append(acc)
        vec = new
    return pB * vec[0]
