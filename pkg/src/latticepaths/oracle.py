"""Brute-force path oracle.

Ground truth for every closed-form formula in the package: exact counting,
statistic generating polynomials, and ring-weighted sums over admissible
paths.  Counting uses dynamic programming (compiled kernels where they
apply); statistics enumerate paths outright, which keeps the ground truth
independent of any cleverness being tested.
"""

import sys

from .algebra import Poly
from .paths import Path, Restriction, StepSet, dot, ne_turns, en_turns, vec_add
from . import _kernel

sys.setrecursionlimit(100000)


class UnboundedSearchError(ValueError):
    """Raised when a query admits arbitrarily long paths."""


class PathQuery:
    """A counting problem: start, end, step set, restriction, optional
    exact path length."""

    __slots__ = ("start", "end", "steps", "restriction", "length")

    def __init__(self, start, end, steps, restriction=None, length=None):
        if restriction is None:
            restriction = Restriction.none()
        start = tuple(start)
        end = tuple(end)
        if len(start) != len(end) or len(start) != steps.dim:
            raise ValueError("dimension mismatch between endpoints and steps")
        if length is not None and length < 0:
            raise ValueError("length must be nonnegative")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "restriction", restriction)
        object.__setattr__(self, "length", length)

    def __setattr__(self, name, value):
        raise AttributeError("PathQuery is immutable")


def _progress_functional(vectors, d):
    """A vector w with w.s > 0 for every step s, or None."""
    candidates = [tuple([1] * d)]
    for i in range(d):
        u = [0] * d
        u[i] = 1
        candidates.append(tuple(u))
        u[i] = -1
        candidates.append(tuple(u))
    total = [sum(v[i] for v in vectors) for i in range(d)]
    candidates.append(tuple(1 if t > 0 else (-1 if t < 0 else 0) for t in total))
    for w in candidates:
        if all(dot(w, s) > 0 for s in vectors):
            return w
    return None


def _box_fixed(q):
    d = len(q.start)
    lo, hi = [], []
    for i in range(d):
        reach = q.length * max(abs(s[i]) for s in q.steps.vectors())
        lo.append(min(q.start[i] - reach, q.end[i]))
        hi.append(max(q.start[i] + reach, q.end[i]))
    return lo, hi


def _blocked_mask(lo, hi, allows):
    """Row-major admissibility mask for the closed box [lo, hi]."""
    d = len(lo)
    widths = [hi[i] - lo[i] + 1 for i in range(d)]
    mask = bytearray(1)
    if d == 1:
        mask = bytearray(
            0 if allows((x,)) else 1 for x in range(lo[0], hi[0] + 1))
    elif d == 2:
        mask = bytearray(widths[0] * widths[1])
        i = 0
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                if not allows((x, y)):
                    mask[i] = 1
                i += 1
    elif d == 3:
        mask = bytearray(widths[0] * widths[1] * widths[2])
        i = 0
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                for z in range(lo[2], hi[2] + 1):
                    if not allows((x, y, z)):
                        mask[i] = 1
                    i += 1
    else:
        raise ValueError("mask construction handles d <= 3")
    return mask, widths


def oracle_count(q):
    """Exact number of admissible paths for the query."""
    d = len(q.start)
    allows = q.restriction.allows
    vectors = q.steps.vectors()

    if q.steps.simple and q.length is None:
        diff = [e - s for s, e in zip(q.start, q.end)]
        if any(x < 0 for x in diff):
            return 0
        if d == 2:
            mask, widths = _blocked_mask(list(q.start), list(q.end), allows)
            return _kernel.count_monotone_2d(widths[0], widths[1], mask)
        if d == 3:
            mask, widths = _blocked_mask(list(q.start), list(q.end), allows)
            return _kernel.count_monotone_3d(widths[0], widths[1], widths[2], mask)
        return _count_generic(q)

    if q.length is not None:
        if d <= 3:
            lo, hi = _box_fixed(q)
            mask, widths = _blocked_mask(lo, hi, allows)
            dx = [[s[i] - 0 for s in vectors] for i in range(d)]
            if d == 1:
                return _kernel.count_fixed_1d(
                    widths[0], q.start[0] - lo[0], q.end[0] - lo[0],
                    dx[0], q.length, mask)
            if d == 2:
                return _kernel.count_fixed_2d(
                    widths[0], widths[1],
                    q.start[0] - lo[0], q.start[1] - lo[1],
                    q.end[0] - lo[0], q.end[1] - lo[1],
                    dx[0], dx[1], q.length, mask)
            return _kernel.count_fixed_3d(
                widths[0], widths[1], widths[2],
                tuple(q.start[i] - lo[i] for i in range(3)),
                tuple(q.end[i] - lo[i] for i in range(3)),
                dx[0], dx[1], dx[2], q.length, mask)
        return _count_generic(q)

    return _count_generic(q)


def _count_generic(q):
    """Memoized recursion; needs a progress functional when no length bound."""
    allows = q.restriction.allows
    vectors = q.steps.vectors()
    end = q.end
    if q.length is None:
        w = _progress_functional(vectors, len(q.start))
        if w is None:
            raise UnboundedSearchError(
                "no length bound and the step set admits arbitrarily long paths")
        target = dot(w, end)
        memo = {}

        def walk(p):
            if dot(w, p) > target:
                return 0
            if p in memo:
                return memo[p]
            out = 1 if p == end else 0
            for s in vectors:
                np = vec_add(p, s)
                if allows(np):
                    out += walk(np)
            memo[p] = out
            return out

        if not allows(q.start):
            return 0
        return walk(q.start)

    memo = {}

    def walk_len(p, r):
        if r == 0:
            return 1 if p == end else 0
        key = (p, r)
        if key in memo:
            return memo[key]
        out = 0
        for s in vectors:
            np = vec_add(p, s)
            if allows(np):
                out += walk_len(np, r - 1)
        memo[key] = out
        return out

    if not allows(q.start):
        return 0
    return walk_len(q.start, q.length)


def iter_paths(q):
    """Yield every admissible path for the query (depth first)."""
    allows = q.restriction.allows
    vectors = q.steps.vectors()
    if not allows(q.start):
        return
    if q.length is None:
        w = _progress_functional(vectors, len(q.start))
        if w is None:
            raise UnboundedSearchError(
                "no length bound and the step set admits arbitrarily long paths")
        target = dot(w, q.end)
        progress = True
    else:
        target = q.length
        progress = False

    stack = []

    def rec(p, depth):
        if progress:
            if dot(w, p) > target:
                return
            if p == q.end:
                yield Path(q.start, list(stack))
        else:
            if depth == target:
                if p == q.end:
                    yield Path(q.start, list(stack))
                return
        for s in vectors:
            np = vec_add(p, s)
            if allows(np):
                stack.append(s)
                yield from rec(np, depth + 1)
                stack.pop()

    yield from rec(q.start, 0)


def oracle_gf(q, stat):
    """Generating polynomial sum of q^{stat(path)} over admissible paths."""
    if isinstance(stat, str):
        stat = STATISTICS[stat]
    coeffs = {}
    for path in iter_paths(q):
        v = stat(path)
        coeffs[v] = coeffs.get(v, 0) + 1
    if not coeffs:
        return Poly([])
    out = [0] * (max(coeffs) + 1)
    for v, c in coeffs.items():
        out[v] = c
    return Poly(out)


def oracle_weighted(q, weight_fn=None):
    """Sum over admissible paths of the product of step weights.

    weight_fn(point, step, next_point) overrides the step-set weights; the
    result lives in whatever ring the weights live in.
    """
    if weight_fn is None:
        table = dict(q.steps.steps)

        def weight_fn(p, s, np):
            return table[s]

    allows = q.restriction.allows
    vectors = q.steps.vectors()
    end = q.end
    if not allows(q.start):
        return 0
    if q.length is None:
        w = _progress_functional(vectors, len(q.start))
        if w is None:
            raise UnboundedSearchError(
                "no length bound and the step set admits arbitrarily long paths")
        target = dot(w, end)
        memo = {}

        def walk(p):
            if dot(w, p) > target:
                return 0
            if p in memo:
                return memo[p]
            out = 1 if p == end else 0
            for s in vectors:
                np = vec_add(p, s)
                if allows(np):
                    sub = walk(np)
                    if not (isinstance(sub, int) and sub == 0):
                        out = weight_fn(p, s, np) * sub + out
            memo[p] = out
            return out

        return walk(q.start)

    memo = {}

    def walk_len(p, r):
        if r == 0:
            return 1 if p == end else 0
        key = (p, r)
        if key in memo:
            return memo[key]
        out = 0
        for s in vectors:
            np = vec_add(p, s)
            if allows(np):
                sub = walk_len(np, r - 1)
                if not (isinstance(sub, int) and sub == 0):
                    out = weight_fn(p, s, np) * sub + out
        memo[key] = out
        return out

    return walk_len(q.start, q.length)


# ---------------------------------------------------------------------------
# path statistics

def stat_area(path):
    """Sum of the heights of the east steps of a 2D monotone path."""
    total = 0
    p = path.start
    for s in path.steps:
        if s == (1, 0):
            total += p[1]
        p = vec_add(p, s)
    return total


def stat_ne_turns(path):
    return len(ne_turns(path))


def stat_en_turns(path):
    return len(en_turns(path))


def stat_runs(path):
    """Number of maximal runs of equal steps."""
    if not path.steps:
        return 0
    runs = 1
    for a, b in zip(path.steps, path.steps[1:]):
        if a != b:
            runs += 1
    return runs


STATISTICS = {
    "area": stat_area,
    "ne-turns": stat_ne_turns,
    "en-turns": stat_en_turns,
    "runs": stat_runs,
}
