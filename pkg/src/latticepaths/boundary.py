"""Determinant counts for paths against arbitrary monotone boundaries.

A ladder region (per-step height interval in 2D) is counted by an n x n
determinant of binomials; a handful of forbidden points is handled by a
bordered determinant over dummy start/end points; and the d-dimensional
generalization of the ladder count is a determinant indexed by the points
of an integer box.

The box determinant's source statement is ambiguous in dimension > 1 (its
index bookkeeping only works in the 2D shadow), so the reading implemented
here was calibrated against the brute-force oracle before freezing:
entries are slack multinomials m!/(v_1!...v_d!(m-sum v)!), the index set
is every box point in lexicographic order except that rows stop one short
of the maximum, and the sign is (-1)**(sum(n) + detsize).  The first call
re-checks that frozen reading against three stored oracle values.
"""

from .algebra import SquareMatrix, binom, det, multinomial
from .plane import count_simple


def _nondecreasing(seq):
    return all(x <= y for x, y in zip(seq, seq[1:]))


class LadderBounds:
    """Per-step height bounds b_i <= y_i <= a_i for a 2D monotone path.

    The i-th east step of a counted path has height y_i; a path runs from
    (0, b[0]) to (n, a[-1]) and the y_i form a nondecreasing sequence.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = tuple(a)
        b = tuple(b)
        if not a or len(a) != len(b):
            raise ValueError("ladder bounds need two equal-length nonempty lists")
        if not _nondecreasing(a) or not _nondecreasing(b):
            raise ValueError("ladder bounds must be nondecreasing")
        if any(x < y for x, y in zip(a, b)):
            raise ValueError("ladder upper bounds must dominate lower bounds")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("LadderBounds is immutable")

    @property
    def n(self):
        return len(self.a)

    def __repr__(self):
        return "LadderBounds(a=%r, b=%r)" % (self.a, self.b)


def ladder_count(ladder):
    """Paths (0, b_1) -> (n, a_n) whose i-th east step has height in
    [b_i, a_i], as an n x n binomial determinant."""
    a, b, n = ladder.a, ladder.b, ladder.n
    rows = [
        [binom(a[i] - b[j] + 1, j - i + 1) for j in range(n)]
        for i in range(n)
    ]
    return det(SquareMatrix(rows))


def avoid_points_count(start, end, forbidden):
    """East/north paths start -> end through none of the forbidden points.

    Bordered determinant: each forbidden point contributes a dummy
    zero-length path, and vertex-disjointness of the path family is
    exactly avoidance.
    """
    start = tuple(start)
    end = tuple(end)
    forbidden = [tuple(p) for p in forbidden]
    if len(set(forbidden)) != len(forbidden):
        raise ValueError("forbidden points must be distinct")
    sources = [start] + forbidden
    targets = [end] + forbidden
    rows = [
        [count_simple(*src, *tgt) for src in sources]
        for tgt in targets
    ]
    return det(SquareMatrix(rows))


def _box_points(n):
    points = [()]
    for size in n:
        points = [p + (v,) for p in points for v in range(size + 1)]
    return sorted(points)


class BoxBoundary:
    """Height bounds b(u) <= y <= a(u) over an integer box, for monotone
    paths in one dimension higher.

    n is the box shape; a and b map every box point (tuple) to an integer,
    are monotone for the product order, and satisfy a >= b pointwise.
    Counted paths run from (0,...,0, b(0)) to (*n, a(n)) with the height
    bound checked at every vertex.
    """

    __slots__ = ("n", "a", "b")

    def __init__(self, n, a, b):
        n = tuple(n)
        if not n or any(k < 0 for k in n):
            raise ValueError("box shape must be nonempty with sizes >= 0")
        a = dict(a)
        b = dict(b)
        points = _box_points(n)
        for f, name in ((a, "a"), (b, "b")):
            if set(f) != set(points):
                raise ValueError("%s must be defined on exactly the box points" % name)
        for u in points:
            if a[u] < b[u]:
                raise ValueError("needs a >= b pointwise, fails at %r" % (u,))
            for axis in range(len(n)):
                if u[axis] == 0:
                    continue
                v = u[:axis] + (u[axis] - 1,) + u[axis + 1 :]
                if a[v] > a[u] or b[v] > b[u]:
                    raise ValueError("bounds must be monotone, fail at %r" % (u,))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("BoxBoundary is immutable")

    def points(self):
        return _box_points(self.n)

    @staticmethod
    def from_ladder(ladder):
        """The 1-dimensional box equivalent of a per-step ladder."""
        n = ladder.n
        a = {(x,): ladder.a[min(x, n - 1)] for x in range(n + 1)}
        b = {(x,): ladder.b[max(x - 1, 0)] for x in range(n + 1)}
        return BoxBoundary((n,), a, b)


def _slack_multinomial(m, v):
    if any(t < 0 for t in v) or m < 0 or sum(v) > m:
        return 0
    return multinomial(tuple(v) + (m - sum(v),))


def _box_det(box):
    us = box.points()
    p = len(us) - 1
    rows = []
    for i in range(p):
        row = []
        for j in range(p):
            m = box.a[us[i]] - box.b[us[j + 1]] + 1
            v = tuple(x - y for x, y in zip(us[j + 1], us[i]))
            row.append(_slack_multinomial(m, v))
        rows.append(row)
    sign = -1 if (sum(box.n) + p) % 2 else 1
    return sign * det(SquareMatrix(rows))


# oracle-derived anchors guarding the frozen determinant reading: shape,
# upper bound table, lower bound table, path count
_CALIBRATION = (
    ((1, 1), {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1},
     {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}, 6),
    ((2, 1), {(0, 0): 1, (0, 1): 2, (1, 0): 1, (1, 1): 2, (2, 0): 2, (2, 1): 3},
     {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 1, (2, 0): 1, (2, 1): 2}, 8),
    ((1, 1), {(0, 0): 1, (0, 1): 2, (1, 0): 1, (1, 1): 2},
     {(0, 0): 0, (0, 1): 1, (1, 0): 0, (1, 1): 1}, 4),
)
_calibrated = False


def box_boundary_count(box):
    """Monotone paths through the region a >= y >= b over the box, by the
    frozen determinant reading (see the module docstring)."""
    global _calibrated
    if not _calibrated:
        _calibrated = True
        for shape, a, b, expected in _CALIBRATION:
            got = _box_det(BoxBoundary(shape, a, b))
            if got != expected:
                _calibrated = False
                raise ArithmeticError(
                    "box determinant reading drifted: shape %r gave %r, want %r"
                    % (shape, got, expected)
                )
    return _box_det(box)
