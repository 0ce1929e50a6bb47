"""Orthogonal polynomials as path-counting devices.

A monic polynomial family p_{n+1} = (x - b_n) p_n - lam_n p_{n-1} with
nonzero lam_n pairs with a linear functional L fixed by L(1) = 1 and
L(p_n) = 0 for n >= 1.  Its moments mu_n = L(x^n) are weighted Motzkin
path counts: a level step at height h weighs b_h, a down step from
height h weighs lam_h, an up step weighs 1.  This module takes the path
model as the definition and derives the rest from it: the polynomials,
moments and generalized moments, Hankel determinants, recovery of the
recurrence coefficients from a moment list, the moment-determinant
formula for the polynomials, and the J-fraction form of the moment
generating function.
"""

from fractions import Fraction

from .algebra import Poly, TruncSeries, binom, det, _num
from .motzkin import (MotzkinWeighting, cf_series, strip_count_transfer,
                      _recurrence_coeff_lists)
from .plane import _require


class ThreeTermSpec:
    """Recurrence data: level weights b = (b_0, b_1, ...) and down
    weights lam = (lam_1, lam_2, ...), one entry shorter.

    Every lam entry must be nonzero; that is exactly the condition for
    the polynomial family to have an orthogonality functional.  Entries
    may be any exact ring elements (int, Fraction, MPoly).
    """

    __slots__ = ("b", "lam")

    def __init__(self, b, lam):
        b = tuple(b)
        lam = tuple(lam)
        if len(lam) != len(b) - 1:
            raise ValueError(
                "need down weights lam_1..lam_k for level weights b_0..b_k")
        for i, v in enumerate(lam):
            if v == 0:
                raise ValueError("down weight lam_%d is zero" % (i + 1))
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "lam", lam)

    def __setattr__(self, name, value):
        raise AttributeError("ThreeTermSpec is immutable")

    @property
    def depth(self):
        return len(self.b) - 1

    @staticmethod
    def constant(b_value, lam_value, depth):
        """The same level weight and down weight at every height."""
        return ThreeTermSpec([b_value] * (depth + 1), [lam_value] * depth)

    def weighting(self, k):
        """The Motzkin weighting of this spec cut to heights 0..k."""
        _require(0 <= k <= self.depth, "needs 0 <= k <= depth")
        return MotzkinWeighting(list(self.b[:k + 1]), list(self.lam[:k]))

    def __eq__(self, other):
        if not isinstance(other, ThreeTermSpec):
            return NotImplemented
        return self.b == other.b and self.lam == other.lam

    def __hash__(self):
        return hash((self.b, self.lam))

    def __repr__(self):
        return "ThreeTermSpec(b=%r, lam=%r)" % (list(self.b), list(self.lam))


def _check_moments(seq):
    seq = tuple(seq)
    if not seq or seq[0] != 1:
        raise ValueError("moment list must be nonempty with mu_0 = 1")
    return seq


class MomentSequence:
    """Moments mu_0, mu_1, ... of a linear functional, with mu_0 = 1."""

    __slots__ = ("mu",)

    def __init__(self, mu):
        object.__setattr__(self, "mu", _check_moments(mu))

    def __setattr__(self, name, value):
        raise AttributeError("MomentSequence is immutable")

    @staticmethod
    def from_spec(s, count):
        """The first `count` moments of the functional attached to s."""
        return MomentSequence([moment(s, n) for n in range(count)])

    def __len__(self):
        return len(self.mu)

    def __getitem__(self, n):
        return self.mu[n]

    def __eq__(self, other):
        if not isinstance(other, MomentSequence):
            return NotImplemented
        return self.mu == other.mu

    def __hash__(self):
        return hash(self.mu)

    def __repr__(self):
        return "MomentSequence(%r)" % (list(self.mu),)


def _as_moments(mu):
    if isinstance(mu, MomentSequence):
        return mu.mu
    return _check_moments(mu)


def _numeric_entries(s):
    return all(isinstance(v, (int, Fraction)) for v in s.b + s.lam)


def poly_from_recurrence(s, n):
    """Monic degree-n member of the polynomial family attached to s."""
    _require(n >= 0, "needs n >= 0")
    _require(s.depth >= n - 1, "spec too shallow for degree %d" % n)
    if not _numeric_entries(s):
        raise TypeError("polynomials need int or Fraction recurrence entries")
    return Poly(_recurrence_coeff_lists(s.b, s.lam, n)[n])


def chebyshev_u(n):
    """Chebyshev polynomial of the second kind, via its alternating
    binomial sum; satisfies 2x U_n = U_{n+1} + U_{n-1}."""
    _require(n >= 0, "needs n >= 0")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        term = binom(n - k, k) * 2 ** (n - 2 * k)
        coeffs[n - 2 * k] = -term if k % 2 else term
    return Poly(coeffs)


def moment(s, n):
    """n-th moment of the functional attached to s: the weighted count
    of Motzkin paths (0,0) -> (n,0) staying weakly above the x-axis."""
    _require(n >= 0, "needs n >= 0")
    k = n // 2
    _require(s.depth >= k,
             "spec too shallow: moment %d reaches height %d" % (n, k))
    return strip_count_transfer(0, 0, k, n, s.weighting(k))


def generalized_moment(s, n, k, l):
    """L(x^n p_k p_l), by expanding the product against the moments.

    Equals lam_1 ... lam_l times the weighted count of Motzkin paths
    from height k to height l in n steps; in particular it vanishes for
    n = 0 and k != l.
    """
    _require(n >= 0, "needs n >= 0")
    _require(k >= 0, "needs k >= 0")
    _require(l >= 0, "needs l >= 0")
    pk = poly_from_recurrence(s, k)
    pl = poly_from_recurrence(s, l)
    if pk.ring != pl.ring:
        pk, pl = pk.to_frac(), pl.to_frac()
    prod = pk * pl
    total = 0
    for j, c in enumerate(prod.coeffs):
        if c != 0:
            total = total + c * moment(s, n + j)
    return total


def hankel_det(mu, n):
    """Determinant of the (n+1) x (n+1) matrix with entry mu_{i+j}.

    When the moments come from a spec, this equals
    lam_1^n lam_2^(n-1) ... lam_n.
    """
    m = _as_moments(mu)
    _require(n >= 0, "needs n >= 0")
    if len(m) < 2 * n + 1:
        raise ValueError("needs moments through index %d, got %d"
                         % (2 * n, len(m) - 1))
    return det([[m[i + j] for j in range(n + 1)] for i in range(n + 1)])


def _shifted_hankel_det(m, n):
    # same matrix as hankel_det but with the last row pushed one moment
    # further, so it reads mu_{n+1} .. mu_{2n+1}
    rows = [[m[i + j] for j in range(n + 1)] for i in range(n)]
    rows.append([m[n + 1 + j] for j in range(n + 1)])
    return det(rows)


def recover_recurrence(mu, n_max):
    """Recurrence data (b_0..b_{n_max}, lam_1..lam_{n_max}) from moments.

    Ratios of Hankel determinants invert moment(); a vanishing Hankel
    determinant means no such recurrence exists, and the error names the
    offending index.
    """
    m = _as_moments(mu)
    _require(n_max >= 0, "needs n_max >= 0")
    if len(m) < 2 * n_max + 2:
        raise ValueError("needs moments through index %d, got %d"
                         % (2 * n_max + 1, len(m) - 1))
    deltas = []
    for i in range(n_max + 1):
        d = det([[m[r + c] for c in range(i + 1)] for r in range(i + 1)])
        if d == 0:
            raise ValueError(
                "Hankel determinant at index %d vanishes; the moments admit "
                "no three-term recurrence" % i)
        deltas.append(d)
    b = []
    prev = Fraction(0)
    for i in range(n_max + 1):
        ratio = Fraction(_shifted_hankel_det(m, i)) / Fraction(deltas[i])
        b.append(_num(ratio - prev))
        prev = ratio
    lam = []
    for i in range(1, n_max + 1):
        below = deltas[i - 2] if i >= 2 else 1
        lam.append(_num(Fraction(deltas[i]) * Fraction(below)
                        / Fraction(deltas[i - 1]) ** 2))
    return ThreeTermSpec(b, lam)


def poly_from_moments(mu, n):
    """Monic degree-n polynomial straight from the moments: the moment
    matrix bordered by the row (1, x, ..., x^n), divided by the Hankel
    determinant one size down.  Agrees with poly_from_recurrence of the
    recovered spec."""
    m = _as_moments(mu)
    _require(n >= 0, "needs n >= 0")
    if n == 0:
        return Poly([1])
    if len(m) < 2 * n:
        raise ValueError("needs moments through index %d, got %d"
                         % (2 * n - 1, len(m) - 1))
    dprev = hankel_det(m, n - 1)
    if dprev == 0:
        raise ValueError("Hankel determinant at index %d vanishes" % (n - 1))
    rows = [[m[i + j] for j in range(n + 1)] for i in range(n)]
    coeffs = []
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1:] for row in rows]
        cof = det(minor)
        if (n + j) % 2:
            cof = -cof
        coeffs.append(_num(Fraction(cof) / Fraction(dprev)))
    return Poly(coeffs)


def moment_jfraction(s, N):
    """Moment generating function of s to order N, evaluated as the
    continued fraction 1/(1 - b_0 z - lam_1 z^2/(1 - b_1 z - ...)).

    Coefficient n equals moment(s, n); heights above N//2 cannot touch
    coefficients up to N, so the fraction is cut there.
    """
    _require(N >= 0, "needs N >= 0")
    k = N // 2
    _require(s.depth >= k,
             "spec too shallow: order %d reaches height %d" % (N, k))
    b_series = [TruncSeries([0, v], N) for v in s.b[:k + 1]]
    lam_series = [TruncSeries([0, 0, v], N) for v in s.lam[:k]]
    return cf_series(MotzkinWeighting(b_series, lam_series), k, N)
