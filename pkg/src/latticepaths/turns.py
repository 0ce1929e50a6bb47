"""Counting monotone plane paths by their corners.

A north-east corner is a vertex entered by a north step and left by an
east step; an east-north corner the other way around.  Paths biject
with two-rowed arrays of corner coordinates (both rows strictly
increasing), so corner-counting reduces to subset counting, and the
boundary restrictions become row-interchange arguments on the arrays:
the analogue of the reflection principle that survives the corner
statistic.  The module covers the unrestricted product formula, one
and two diagonal boundaries, slope-mu boundaries, the run-statistic
generating polynomial assembled from shifted-endpoint corner
polynomials, and corner-refined non-intersecting family counts as
composition sums of determinants.
"""

from .algebra import Poly, binom, det
from .plane import _require


def _norm_kind(kind):
    k = str(kind).upper()
    if k not in ("NE", "EN"):
        raise ValueError("kind must be NE or EN, got %r" % (kind,))
    return k


def turns_unrestricted(a, b, c, d, l, kind="NE"):
    """Paths (a, b) -> (c, d) with exactly l corners of the given kind.

    Corner positions form two strictly increasing rows with fixed
    bounds, so the count is a product of two binomials; it is the same
    for both corner kinds.
    """
    _norm_kind(kind)
    _require(l >= 0, "corner count must be nonnegative")
    return binom(c - a, l) * binom(d - b, l)


def turns_below_diagonal(a, b, c, d, l, kind="NE"):
    """Paths (a, b) -> (c, d) weakly below y = x with exactly l corners.

    Product formula minus the count of arrays violating the diagonal
    condition, which a row-interchange bijection turns into arrays with
    row lengths l - 1 and l + 1.
    """
    kind = _norm_kind(kind)
    _require(l >= 0, "corner count must be nonnegative")
    _require(a >= b and c >= d, "endpoints must lie weakly below y = x")
    main = binom(c - a, l) * binom(d - b, l)
    if kind == "NE":
        return main - binom(c - b - 1, l - 1) * binom(d - a + 1, l + 1)
    return main - binom(c - b + 1, l) * binom(d - a - 1, l)


def turns_two_boundaries(a, b, c, d, s, t, l):
    """Paths (a, b) -> (c, d) with x + s <= y <= x + t and exactly l
    north-east corners, as an alternating sum of shifted products over
    the reflection group of the strip."""
    _require(l >= 0, "corner count must be nonnegative")
    _require(s <= t, "needs s <= t")
    _require(a + t >= b >= a + s, "start outside the band")
    _require(c + t >= d >= c + s, "end outside the band")
    width = t - s
    total = 0
    for k in range(-l - 1, l + 2):
        total += (binom(c - a - k * width, l + k)
                  * binom(d - b + k * width, l - k)
                  - binom(c - b - k * width + s - 1, l + k)
                  * binom(d - a + k * width - s + 1, l - k))
    return total


def turns_slope_mu(c, d, mu, l, kind="NE"):
    """Paths (0, 0) -> (c, d) weakly below x = mu y with exactly l
    corners; the violating arrays come in mu interchangeable flavors."""
    kind = _norm_kind(kind)
    _require(l >= 0, "corner count must be nonnegative")
    _require(mu >= 1, "slope must be a positive integer")
    _require(c >= mu * d, "endpoint must lie weakly below x = mu y")
    if d == 0:
        # the shifted binomials miss the cornerless all-east path
        return 1 if l == 0 else 0
    if kind == "NE":
        return (binom(c, l) * binom(d, l)
                - mu * binom(c - 1, l - 1) * binom(d + 1, l + 1))
    return (binom(c + 1, l) * binom(d - 1, l - 1)
            - mu * binom(c, l - 1) * binom(d, l))


RESTRICTION_NONE = "none"
RESTRICTION_BELOW = "below-diagonal"


def _ne_corner_poly(a, b, c, d, restriction):
    # polynomial in x with coefficient l = number of paths with l
    # north-east corners under the restriction; zero when no path fits
    if c < a or d < b:
        return Poly([])
    if restriction == RESTRICTION_NONE:
        count = lambda l: turns_unrestricted(a, b, c, d, l)
    elif restriction == RESTRICTION_BELOW:
        if not (a >= b and c >= d):
            return Poly([])
        count = lambda l: turns_below_diagonal(a, b, c, d, l)
    elif isinstance(restriction, tuple) and restriction[0] == "band":
        _, s, t = restriction
        if not (a + t >= b >= a + s and c + t >= d >= c + s):
            return Poly([])
        count = lambda l: turns_two_boundaries(a, b, c, d, s, t, l)
    else:
        raise ValueError("unknown restriction %r" % (restriction,))
    return Poly([count(l) for l in range(min(c - a, d - b) + 1)])


def run_gf(a, b, c, d, restriction=RESTRICTION_NONE):
    """Generating polynomial of paths (a, b) -> (c, d) by the number
    of maximal straight runs.

    Assembled from the north-east corner polynomials of the four
    first-step/last-step classes, each of which is a difference of
    corner polynomials with the start shifted east or the end shifted
    south.  restriction is "none", "below-diagonal", or ("band", s, t).
    """
    f = _ne_corner_poly(a, b, c, d, restriction)
    f_east = _ne_corner_poly(a + 1, b, c, d, restriction)
    f_south = _ne_corner_poly(a, b, c, d - 1, restriction)
    f_both = _ne_corner_poly(a + 1, b, c, d - 1, restriction)

    hh = f_east - f_both
    hv = f_both
    vh = f + f_both - f_east - f_south
    vv = f_south - f_both

    def spread(p, shift):
        # p(x^2), then shift
        out = [0] * (2 * max(len(p.coeffs), 1) + shift)
        for i, cf in enumerate(p.coeffs):
            out[2 * i + shift] = cf
        return Poly(out)

    return (spread(hh, 1) + spread(hv, 2) + spread(vh, 0)
            + spread(vv, 1))


def _check_order(vals, strict, decreasing, what):
    for u, v in zip(vals, vals[1:]):
        if decreasing:
            u, v = v, u
        ok = u < v if strict else u <= v
        _require(ok, "%s endpoints are out of order" % what)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def nonint_turns(A, E, l, boundary=RESTRICTION_NONE, kind="NE"):
    """Families of vertex-disjoint monotone paths A_i -> E_i with l
    corners in total, as a sum of determinants over the compositions
    of l.

    boundary "none" supports north-east corners; "below-diagonal"
    (weakly below y = x) supports both kinds.  The start/end sequences
    must be ordered the way the determinant expects: starts going
    weakly right and strictly down, ends strictly right and weakly
    down (the two strictness conditions swap for kind EN).
    """
    kind = _norm_kind(kind)
    A = [tuple(p) for p in A]
    E = [tuple(p) for p in E]
    _require(len(A) == len(E) and A, "needs matching nonempty sequences")
    n = len(A)
    a1 = [p[0] for p in A]
    a2 = [p[1] for p in A]
    e1 = [p[0] for p in E]
    e2 = [p[1] for p in E]
    if boundary == RESTRICTION_NONE:
        if kind == "EN":
            raise ValueError(
                "corner kind EN has no unrestricted determinant here; "
                "rotate the system and count NE corners")
        _check_order(a1, False, False, "start")
        _check_order(a2, True, True, "start")
        _check_order(e1, True, False, "end")
        _check_order(e2, False, True, "end")
    elif boundary == RESTRICTION_BELOW:
        if kind == "NE":
            _check_order(a1, False, False, "start")
            _check_order(a2, True, True, "start")
            _check_order(e1, True, False, "end")
            _check_order(e2, False, True, "end")
        else:
            _check_order(a1, True, False, "start")
            _check_order(a2, False, True, "start")
            _check_order(e1, False, False, "end")
            _check_order(e2, True, True, "end")
        for i in range(n):
            _require(a1[i] >= a2[i] and e1[i] >= e2[i],
                     "endpoints must lie weakly below y = x")
    else:
        raise ValueError("unknown boundary %r" % (boundary,))

    total = 0
    for comp in _compositions(l, n):
        rows = []
        for i in range(n):
            li = comp[i]
            row = []
            for j in range(n):
                main = (binom(e1[j] - a1[i] + i - j, li + i - j)
                        * binom(e2[j] - a2[i] - i + j, li))
                if boundary == RESTRICTION_BELOW:
                    if kind == "NE":
                        main -= (binom(e1[j] - a2[i] - i - j - 1, li - j - 1)
                                 * binom(e2[j] - a1[i] + i + j + 1, li + i + 1))
                    else:
                        main -= (binom(e1[j] - a2[i] - i - j + 1, li - j)
                                 * binom(e2[j] - a1[i] + i + j - 1, li + i))
                row.append(main)
            rows.append(row)
        total += det(rows)
    return total


def reflect_array(p, q):
    """Row-interchange a two-rowed array at its last diagonal
    violation (largest index with p_i < q_i).

    Input rows have equal length l; the image has a top row of length
    l - 1 and a bottom row of length l + 1, both strictly increasing.
    Raises when no violation exists.
    """
    p = tuple(p)
    q = tuple(q)
    _require(len(p) == len(q), "rows must have equal length")
    last = None
    for i in range(len(p)):
        if p[i] < q[i]:
            last = i
    if last is None:
        raise ValueError("array has no diagonal violation to reflect")
    top = q[:last] + p[last + 1:]
    bottom = p[:last + 1] + q[last:]
    return top, bottom


def unreflect_array(top, bottom):
    """Inverse of reflect_array: rebuild the equal-length violating
    array from an (l - 1, l + 1) pair."""
    top = tuple(top)
    bottom = tuple(bottom)
    _require(len(bottom) == len(top) + 2, "rows must have lengths l-1, l+1")
    ell = len(top) + 1
    cross = 0
    for i in range(2, ell + 1):
        if top[i - 2] < bottom[i]:
            cross = i
    if cross == 0:
        cross = 1
    p = bottom[:cross] + top[cross - 1:]
    q = top[:cross - 1] + bottom[cross:]
    return p, q
