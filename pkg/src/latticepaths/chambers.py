"""Walks in chambers cut out by mirror hyperplanes.

Multidimensional walks whose coordinates must stay strictly ordered,
strictly positive, or confined to a periodic band.  Every closed form
here follows one recipe: start a free walk from each mirror image of the
source and sum the counts signed by the parity of the image.  A walk
that touches a wall cancels against its reflection, so the signed sum
counts exactly the walks that stay strictly inside.  For the finite
mirror groups the sum collapses into a single determinant of factorials
or binomials; the affine (banded) groups add a lattice of translated
images, summed over the finite window outside which every term dies.
"""

import math
from fractions import Fraction
from itertools import permutations, product

from .algebra import (
    NumericGuardError,
    Poly,
    binom,
    det,
    inv_factorial,
    multinomial,
)
from .plane import _exact_int, _require

STEPS_UNIT = "unit"            # one coordinate gains 1 per step
STEPS_UNIT_PM = "pm-unit"      # one coordinate moves by +-1 per step
STEPS_DIAG_PM = "pm-diagonal"  # every coordinate moves by +-1 per step

_STEP_FAMILIES = (STEPS_UNIT, STEPS_UNIT_PM, STEPS_DIAG_PM)


def multinomial_count(a, e):
    """Unit-step walks from a to e with no region constraint.

    Zero when e is not componentwise at or above a.
    """
    return multinomial([ei - ai for ai, ei in zip(a, e)])


def hyperplane_bound(mu, c):
    """Unit-step walks from the origin to c = (c0, c1, ..., cd) keeping
    x0 >= mu1*x1 + ... + mud*xd at every lattice point.

    A cycle-lemma product: the fraction of free walks surviving the
    bound, times the free multinomial count.
    """
    mu = tuple(mu)
    c = tuple(c)
    _require(len(c) == len(mu) + 1,
             "c must carry one more coordinate than mu, got %d vs %d"
             % (len(c), len(mu)))
    _require(all(v >= 0 for v in mu),
             "mu must be componentwise nonnegative, got %r" % (mu,))
    load = sum(m * ci for m, ci in zip(mu, c[1:]))
    _require(c[0] >= load,
             "needs c0 >= mu.c, got c0=%r, mu.c=%r" % (c[0], load))
    value = Fraction(c[0] - load + 1, 1 + sum(c)) * multinomial((c[0] + 1,) + c[1:])
    return _exact_int(value, "hyperplane-bounded count")


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        size = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            size += 1
        if size % 2 == 0:
            sign = -sign
    return sign


def _check_decreasing(vals, what, strict):
    for i in range(len(vals) - 1):
        bad = vals[i] < vals[i + 1] or (strict and vals[i] == vals[i + 1])
        if bad:
            raise ValueError("%s must be %s decreasing, got %r"
                             % (what, "strictly" if strict else "weakly",
                                tuple(vals)))


def _check_uniform_parity(vals, what):
    if len({v % 2 for v in vals}) > 1:
        raise ValueError("%s needs all coordinates of one parity, got %r"
                         % (what, tuple(vals)))


def _check_pair(a, e):
    _require(len(a) == len(e) and len(a) >= 1,
             "endpoints must share a positive dimension, got %r and %r"
             % (a, e))


class ChamberSpec:
    """Which mirror group acts, in what dimension, with which step family.

    family "A" keeps the coordinates strictly decreasing; family "C"
    keeps them strictly decreasing and strictly positive.  A period N
    makes the group affine and adds the far wall: x1 - xd < N for family
    A, x1 < N for family C.
    """

    __slots__ = ("family", "dim", "steps", "period")

    def __init__(self, family, dim, steps, period=None):
        _require(family in ("A", "C"),
                 "family must be 'A' or 'C', got %r" % (family,))
        _require(isinstance(dim, int) and dim >= 1,
                 "dimension must be a positive integer, got %r" % (dim,))
        _require(steps in _STEP_FAMILIES,
                 "unknown step family %r (one of %r)" % (steps, _STEP_FAMILIES))
        if family == "C" and steps == STEPS_UNIT:
            raise ValueError("unit steps are not closed under sign flips, "
                             "so the signed mirror group cannot act on them")
        if period is not None:
            _require(isinstance(period, int) and period >= 1,
                     "period must be a positive integer, got %r" % (period,))
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "period", period)

    def __setattr__(self, name, value):
        raise AttributeError("ChamberSpec is immutable")

    @property
    def is_affine(self):
        return self.period is not None

    def contains(self, point):
        """Strict chamber membership."""
        point = tuple(point)
        if len(point) != self.dim:
            return False
        for i in range(self.dim - 1):
            if point[i] <= point[i + 1]:
                return False
        if self.family == "C" and point[-1] <= 0:
            return False
        if self.is_affine:
            if self.family == "A" and point[0] - point[-1] >= self.period:
                return False
            if self.family == "C" and point[0] >= self.period:
                return False
        return True

    def halfspaces(self):
        """The chamber as (normal, bound, strict) triples meaning
        normal.x >= bound (or > when strict)."""
        d = self.dim
        out = []
        for i in range(d - 1):
            r = [0] * d
            r[i] = 1
            r[i + 1] = -1
            out.append((tuple(r), 0, True))
        if self.family == "C":
            r = [0] * d
            r[-1] = 1
            out.append((tuple(r), 0, True))
        if self.is_affine:
            r = [0] * d
            if self.family == "A":
                r[0] = -1
                r[-1] += 1
            else:
                r[0] = -1
            out.append((tuple(r), -self.period, True))
        return out

    def step_vectors(self):
        d = self.dim
        if self.steps == STEPS_UNIT:
            return tuple(tuple(1 if i == j else 0 for j in range(d))
                         for i in range(d))
        if self.steps == STEPS_UNIT_PM:
            vecs = []
            for i in range(d):
                for s in (1, -1):
                    vecs.append(tuple(s if i == j else 0 for j in range(d)))
            return tuple(vecs)
        return tuple(product((1, -1), repeat=d))

    def images(self, point):
        """Yield (sign, image) over the finite mirror group."""
        _require(not self.is_affine,
                 "the affine mirror group is infinite; the banded counters "
                 "sum its translates with derived windows instead")
        point = tuple(point)
        _require(len(point) == self.dim,
                 "point %r does not have dimension %d" % (point, self.dim))
        return self._images(point)

    def _images(self, point):
        d = self.dim
        for perm in permutations(range(d)):
            base = tuple(point[perm[i]] for i in range(d))
            ps = _perm_sign(perm)
            if self.family == "A":
                yield ps, base
                continue
            for flips in product((1, -1), repeat=d):
                s = ps
                for f in flips:
                    s *= f
                yield s, tuple(f * v for f, v in zip(flips, base))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _free_count(steps, start, end, m):
    """m-step walks from start to end with no region constraint."""
    diffs = [ei - si for si, ei in zip(start, end)]
    if steps == STEPS_UNIT:
        if sum(diffs) != m:
            return 0
        return multinomial(diffs)
    if steps == STEPS_DIAG_PM:
        out = 1
        for v in diffs:
            if (m + v) % 2:
                return 0
            out *= binom(m, (m + v) // 2)
        return out
    # one coordinate moves at a time: split the clock among the axes,
    # then pick the up-moves within each axis's share
    total = 0
    for alloc in _compositions(m, len(diffs)):
        ways = multinomial(alloc)
        for mi, v in zip(alloc, diffs):
            if (mi + v) % 2:
                ways = 0
                break
            ways *= binom(mi, (mi + v) // 2)
        total += ways
    return total


def signed_reflection_sum(spec, start, end, m):
    """m-step walks from start to end staying strictly inside the chamber.

    Computed as the signed sum of free counts over all mirror images of
    the source.  Needs a finite group; the walk may not be able to jump a
    wall, which holds for all three step families in families A and C.
    """
    _require(isinstance(spec, ChamberSpec), "spec must be a ChamberSpec")
    _require(not spec.is_affine,
             "signed image sums need a finite mirror group")
    start = tuple(start)
    end = tuple(end)
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    _require(spec.contains(start),
             "start %r is not strictly inside the chamber" % (start,))
    _require(spec.contains(end),
             "end %r is not strictly inside the chamber" % (end,))
    if spec.steps == STEPS_DIAG_PM:
        _check_uniform_parity(start, "start")
        _check_uniform_parity(end, "end")
    total = 0
    for sign, image in spec.images(start):
        total += sign * _free_count(spec.steps, image, end, m)
    return total


def typeA_det(a, e):
    """Unit-step walks a -> e keeping x1 >= x2 >= ... >= xd throughout.

    (total gain)! times a determinant of reciprocal factorials; the
    reciprocal factorial of a negative number is zero, which silently
    drops unreachable targets.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    _check_decreasing(a, "a", strict=False)
    _check_decreasing(e, "e", strict=False)
    total = sum(e) - sum(a)
    if total < 0:
        return 0
    d = len(a)
    M = [[inv_factorial(e[i] - a[j] + j - i) for j in range(d)]
         for i in range(d)]
    return _exact_int(math.factorial(total) * det(M),
                      "ordered-walk determinant")


def hook_formula(lam):
    """Standard fillings of a partition shape: cells labeled 1..n,
    increasing along rows and down columns.

    n! over the product of hook lengths, guarded to be an integer.
    """
    lam = tuple(lam)
    _check_decreasing(lam, "shape", strict=False)
    _require(all(v >= 0 for v in lam),
             "shape parts must be nonnegative, got %r" % (lam,))
    n = sum(lam)
    width = lam[0] if lam else 0
    conj = [sum(1 for row in lam if row > j) for j in range(width)]
    value = Fraction(math.factorial(n))
    for i, row in enumerate(lam):
        for j in range(row):
            value /= row - j + conj[j] - i - 1
    return _exact_int(value, "hook-length product")


def lock_step_det(a, e, m):
    """Walks a -> e of m ticks, every coordinate moving +-1 each tick,
    coordinates strictly decreasing throughout.

    Zero when m and the displacement disagree in parity.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    _check_decreasing(a, "a", strict=True)
    _check_decreasing(e, "e", strict=True)
    _check_uniform_parity(a, "a")
    _check_uniform_parity(e, "e")
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    if (m + e[0] - a[0]) % 2:
        return 0
    d = len(a)
    return det([[binom(m, (m + e[i] - a[j]) // 2) for j in range(d)]
                for i in range(d)])


def typeC_det(a, e, m):
    """Same walk as lock_step_det but also pinned strictly above zero.

    Each entry subtracts the count from the sign-flipped image, which
    kills walks touching the zero wall.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    _check_decreasing(a, "a", strict=True)
    _check_decreasing(e, "e", strict=True)
    _require(a[-1] > 0, "needs a strictly positive, got %r" % (a,))
    _require(e[-1] > 0, "needs e strictly positive, got %r" % (e,))
    _check_uniform_parity(a, "a")
    _check_uniform_parity(e, "e")
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    if (m + e[0] - a[0]) % 2:
        return 0
    d = len(a)
    return det([[binom(m, (m + e[i] - a[j]) // 2)
                 - binom(m, (m + e[i] + a[j]) // 2)
                 for j in range(d)] for i in range(d)])


def _ceil_div(p, q):
    return -((-p) // q)


def affineA_count(a, e, N):
    """Unit-step walks a -> e with x1 > x2 > ... > xd > x1 - N throughout.

    Signed sum over row translates by multiples of N summing to zero; the
    factorial support bounds each row's translate window, and the bounds
    are asserted before use.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    d = len(a)
    spec = ChamberSpec("A", d, STEPS_UNIT, period=N)
    _require(spec.contains(a), "start %r is not strictly inside the band" % (a,))
    _require(spec.contains(e), "end %r is not strictly inside the band" % (e,))
    total = sum(e) - sum(a)
    if total < 0:
        return 0
    los = []
    his = []
    for i in range(d):
        lo = _ceil_div(a[-1] - e[i], N)
        hi = (total + a[0] - e[i]) // N
        # outside the window the row dies: below it every factorial
        # argument is negative; above it every argument overshoots the
        # step budget, forcing a negative argument in some other row
        assert all(e[i] - aj + (lo - 1) * N < 0 for aj in a)
        assert all(e[i] - aj + (hi + 1) * N > total for aj in a)
        los.append(lo)
        his.append(hi)
    ksum = Fraction(0)
    for head in product(*(range(los[i], his[i] + 1) for i in range(d - 1))):
        last = -sum(head)
        if last < los[-1] or last > his[-1]:
            continue
        k = head + (last,)
        M = [[inv_factorial(e[i] - a[j] + k[i] * N) for j in range(d)]
             for i in range(d)]
        ksum += det(M)
    return _exact_int(math.factorial(total) * ksum,
                      "banded ordered-walk sum")


def _bessel_series(alpha, deg):
    """Truncated series sum_j x^(2j+alpha) / (j! (j+alpha)!).

    Exponential count of free one-dimensional +-1 walks with drift
    alpha; terms with a negative factorial argument vanish.
    """
    coeffs = [Fraction(0)] * (deg + 1)
    j = max(0, -alpha)
    while 2 * j + alpha <= deg:
        coeffs[2 * j + alpha] = inv_factorial(j) * inv_factorial(j + alpha)
        j += 1
    return Poly(coeffs)


def affineA_pm_egf(a, e, N, m):
    """Walks a -> e of m steps, one coordinate moving +-1 per step,
    staying in x1 > x2 > ... > xd > x1 - N.

    Exact rational route: each matrix entry is a truncated exponential
    series, the determinant is expanded as a polynomial, and the x^m
    coefficient is scaled by m!.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    d = len(a)
    spec = ChamberSpec("A", d, STEPS_UNIT_PM, period=N)
    _require(spec.contains(a), "start %r is not strictly inside the band" % (a,))
    _require(spec.contains(e), "end %r is not strictly inside the band" % (e,))
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    los = []
    his = []
    for i in range(d):
        # row i carries a[i]; its entries survive truncation at degree m
        # only while some |e[j] - a[i] + k*N| stays at most m
        lo = _ceil_div(a[i] - e[0] - m, N)
        hi = (a[i] - e[-1] + m) // N
        assert all(abs(ej - a[i] + (lo - 1) * N) > m for ej in e)
        assert all(abs(ej - a[i] + (hi + 1) * N) > m for ej in e)
        los.append(lo)
        his.append(hi)
    coeff = Fraction(0)
    for head in product(*(range(los[i], his[i] + 1) for i in range(d - 1))):
        last = -sum(head)
        if last < los[-1] or last > his[-1]:
            continue
        k = head + (last,)
        M = [[_bessel_series(e[j] - a[i] + k[i] * N, m) for j in range(d)]
             for i in range(d)]
        value = det(M)
        if isinstance(value, Poly):
            coeff += value.coeff(m)
        elif m == 0:
            coeff += value
    return _exact_int(math.factorial(m) * coeff, "banded walk series")


def affineA_lockstep(a, e, N, m):
    """Walks a -> e of m ticks, every coordinate moving +-1 together,
    staying in x1 > x2 > ... > xd > x1 - N.

    The pairwise gaps keep their parity, so an odd band width leaves the
    far wall untouchable; widening it by one gives the same region on the
    reachable sublattice and restores the even translation step the
    signed images need.  Column translates then shift the binomial index
    by half the (even) width.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    d = len(a)
    spec = ChamberSpec("A", d, STEPS_DIAG_PM, period=N)
    _require(spec.contains(a), "start %r is not strictly inside the band" % (a,))
    _require(spec.contains(e), "end %r is not strictly inside the band" % (e,))
    _check_uniform_parity(a, "a")
    _check_uniform_parity(e, "e")
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    if (m + e[0] - a[0]) % 2:
        return 0
    shift = N // 2 if N % 2 == 0 else (N + 1) // 2
    los = []
    his = []
    for j in range(d):
        lo = _ceil_div(a[j] - e[0] - m, 2 * shift)
        hi = (m + a[j] - e[-1]) // (2 * shift)
        # outside the window the whole column vanishes
        assert all((m + ei - a[j]) // 2 + (lo - 1) * shift < 0 for ei in e)
        assert all((m + ei - a[j]) // 2 + (hi + 1) * shift > m for ei in e)
        los.append(lo)
        his.append(hi)
    total = 0
    for head in product(*(range(los[j], his[j] + 1) for j in range(d - 1))):
        last = -sum(head)
        if last < los[-1] or last > his[-1]:
            continue
        k = head + (last,)
        total += det([[binom(m, (m + e[i] - a[j]) // 2 + shift * k[j])
                       for j in range(d)] for i in range(d)])
    return total


def strip_walk_count(a, e, width, m):
    """+-1 walks a -> e of m steps staying strictly inside (0, width).

    Signed images of the source under reflections in both walls are
    a + 2k*width and -a + 2k*width, so the binomial index shifts by
    k*width within each of the two families.
    """
    _require(width >= 1, "needs width >= 1, got %r" % (width,))
    _require(0 < a < width, "start %r is not strictly inside (0, %d)" % (a, width))
    _require(0 < e < width, "end %r is not strictly inside (0, %d)" % (e, width))
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    if (m + e - a) % 2:
        return 0
    total = 0
    for pivot, sign in (((m + e - a) // 2, 1), ((m + e + a) // 2, -1)):
        lo = _ceil_div(-pivot, width)
        hi = (m - pivot) // width
        for k in range(lo, hi + 1):
            total += sign * binom(m, pivot + k * width)
    return total


def _strip_trig(a, e, width, m):
    """Spectral float evaluation of strip_walk_count."""
    total = 0.0
    for r in range(1, width):
        total += (math.sin(math.pi * r * a / width)
                  * math.sin(math.pi * r * e / width)
                  * (2.0 * math.cos(math.pi * r / width)) ** m)
    return total * 2.0 / width


def _float_det(M):
    d = len(M)
    total = 0.0
    for perm in permutations(range(d)):
        term = float(_perm_sign(perm))
        for i in range(d):
            term *= M[i][perm[i]]
        total += term
    return total


def _series_mul(p, q, deg):
    out = [0.0] * (deg + 1)
    for t1, c1 in enumerate(p):
        if c1 == 0.0:
            continue
        for t2 in range(deg + 1 - t1):
            out[t1 + t2] += c1 * q[t2]
    return out


def _egf_det_coeff(entries, m):
    """Coefficient of x^m in a determinant of truncated float series,
    scaled by m!."""
    d = len(entries)
    total = 0.0
    for perm in permutations(range(d)):
        prod_ = [1.0] + [0.0] * m
        for i in range(d):
            prod_ = _series_mul(prod_, entries[i][perm[i]], m)
        total += _perm_sign(perm) * prod_[m]
    return total * math.factorial(m)


def affineC_pm(a, e, N, m):
    """Walks a -> e of m steps, one coordinate moving +-1 per step,
    staying in N > x1 > x2 > ... > xd > 0.

    Exact route: entry (i, j) is the exponential series of single
    coordinate wall-to-wall walks a_j -> e_i; the determinant's x^m
    coefficient times m! is the count.  The same determinant is also
    evaluated through its sine/cosine spectral form in floating point
    and must land within 1e-6 of the exact integer.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    d = len(a)
    spec = ChamberSpec("C", d, STEPS_UNIT_PM, period=N)
    _require(spec.contains(a), "start %r is not strictly inside the box" % (a,))
    _require(spec.contains(e), "end %r is not strictly inside the box" % (e,))
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    fact = [math.factorial(t) for t in range(m + 1)]
    M = [[Poly([Fraction(strip_walk_count(a[j], e[i], N, t), fact[t])
                for t in range(m + 1)])
          for j in range(d)] for i in range(d)]
    value = det(M)
    coeff = value.coeff(m) if isinstance(value, Poly) else (value if m == 0 else 0)
    exact = _exact_int(fact[m] * coeff, "boxed walk series")

    entries = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            coeffs = [0.0] * (m + 1)
            for r in range(2 * N):
                w = (math.sin(math.pi * r * e[i] / N)
                     * math.sin(math.pi * r * a[j] / N))
                lam = 2.0 * math.cos(math.pi * r / N)
                p = 1.0
                for t in range(m + 1):
                    coeffs[t] += w * p / fact[t]
                    p *= lam
            entries[i][j] = [c / N for c in coeffs]
    raw = _egf_det_coeff(entries, m)
    if abs(raw - exact) > 1e-6:
        raise NumericGuardError(
            "spectral evaluation %r drifted from the exact count %d"
            % (raw, exact))
    return exact


def affineC_lockstep(a, e, N, m):
    """Walks a -> e of m ticks, every coordinate moving +-1 together,
    staying in N > x1 > x2 > ... > xd > 0.

    Entry (i, j) is the m-tick wall-to-wall walk count a_j -> e_i; the
    trigonometric spectral evaluation of the same determinant must land
    within 1e-6 of the exact integer.
    """
    a = tuple(a)
    e = tuple(e)
    _check_pair(a, e)
    d = len(a)
    spec = ChamberSpec("C", d, STEPS_DIAG_PM, period=N)
    _require(spec.contains(a), "start %r is not strictly inside the box" % (a,))
    _require(spec.contains(e), "end %r is not strictly inside the box" % (e,))
    _check_uniform_parity(a, "a")
    _check_uniform_parity(e, "e")
    _require(m >= 0, "needs m >= 0, got m=%r" % (m,))
    if (m + e[0] - a[0]) % 2:
        return 0
    exact = det([[strip_walk_count(a[j], e[i], N, m) for j in range(d)]
                 for i in range(d)])
    raw = _float_det([[_strip_trig(a[j], e[i], N, m) for j in range(d)]
                      for i in range(d)])
    if abs(raw - exact) > 1e-6:
        raise NumericGuardError(
            "spectral evaluation %r drifted from the exact count %d"
            % (raw, exact))
    return exact
