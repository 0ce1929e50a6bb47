"""Lattice-path data model: step sets, restrictions, paths, turn arrays,
and the cycle-lemma style rotation procedures.

Points are plain tuples of ints.  A restriction is a pointwise-decidable
predicate on lattice points; it is checked at every vertex a path visits,
endpoints included.
"""

from fractions import Fraction


EAST = (1, 0)
NORTH = (0, 1)


def vec_add(p, s):
    return tuple(a + b for a, b in zip(p, s))


def vec_sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def dot(r, p):
    return sum(a * b for a, b in zip(r, p))


class StepSet:
    """A finite set of allowed steps, each an integer vector with a weight.

    The `simple` flag marks the positive-unit-step case (one step per
    coordinate direction), for which monotone-grid counting applies.
    """

    __slots__ = ("steps", "simple")

    def __init__(self, steps, simple=False):
        norm = []
        for s in steps:
            if len(s) == 2 and isinstance(s[0], (tuple, list)):
                norm.append((tuple(s[0]), s[1]))
            else:
                norm.append((tuple(s), 1))
        steps = norm
        if not steps:
            raise ValueError("step set must be nonempty")
        d = len(steps[0][0])
        if any(len(v) != d for v, _ in steps):
            raise ValueError("steps have inconsistent dimension")
        object.__setattr__(self, "steps", tuple(steps))
        object.__setattr__(self, "simple", simple)

    def __setattr__(self, name, value):
        raise AttributeError("StepSet is immutable")

    @property
    def dim(self):
        return len(self.steps[0][0])

    def vectors(self):
        return [v for v, _ in self.steps]

    @staticmethod
    def simple_steps(d=2):
        units = []
        for i in range(d):
            v = [0] * d
            v[i] = 1
            units.append((tuple(v), 1))
        return StepSet(units, simple=True)

    @staticmethod
    def unit_pm(d=2):
        steps = []
        for i in range(d):
            v = [0] * d
            v[i] = 1
            steps.append((tuple(v), 1))
            steps.append((tuple(-x for x in v), 1))
        return StepSet(steps)

    @staticmethod
    def from_heights(jumps, weights=None):
        """Directed 1D-height walk steps (1, j) for j in jumps."""
        jumps = list(jumps)
        if weights is None:
            weights = [1] * len(jumps)
        return StepSet([((1, j), w) for j, w in zip(jumps, weights)])


class Restriction:
    """Pointwise region restriction.  Kinds: none, halfspaces, band,
    column-bounds (per-x height bounds in 2D), forbidden points."""

    __slots__ = ("kind", "data")

    def __init__(self, kind, data):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Restriction is immutable")

    @staticmethod
    def none():
        return Restriction("none", None)

    @staticmethod
    def halfspaces(constraints):
        """constraints: list of (r, c, strict) meaning r.x >= c (or > if strict)."""
        data = tuple((tuple(r), c, bool(strict)) for r, c, strict in constraints)
        return Restriction("halfspaces", data)

    @staticmethod
    def halfspace(r, c, strict=False):
        return Restriction.halfspaces([(r, c, strict)])

    @staticmethod
    def band(r, lo, hi):
        """lo <= r.x <= hi, both weak."""
        return Restriction("band", (tuple(r), lo, hi))

    @staticmethod
    def column_bounds(lower, upper):
        """2D: for a point (x, y), require lower[x] <= y <= upper[x] whenever
        x is a key; missing columns are unconstrained on that side."""
        return Restriction("columns", (dict(lower), dict(upper)))

    @staticmethod
    def avoid(points):
        return Restriction("avoid", frozenset(tuple(p) for p in points))

    def allows(self, p):
        k = self.kind
        if k == "none":
            return True
        if k == "halfspaces":
            for r, c, strict in self.data:
                v = dot(r, p)
                if v < c or (strict and v == c):
                    return False
            return True
        if k == "band":
            r, lo, hi = self.data
            return lo <= dot(r, p) <= hi
        if k == "columns":
            lower, upper = self.data
            x, y = p
            if x in lower and y < lower[x]:
                return False
            if x in upper and y > upper[x]:
                return False
            return True
        if k == "avoid":
            return tuple(p) not in self.data
        raise ValueError("unknown restriction kind %r" % (k,))


class Path:
    """A starting point plus an ordered list of steps."""

    __slots__ = ("start", "steps")

    def __init__(self, start, steps):
        object.__setattr__(self, "start", tuple(start))
        object.__setattr__(self, "steps", tuple(tuple(s) for s in steps))

    def __setattr__(self, name, value):
        raise AttributeError("Path is immutable")

    def points(self):
        pts = [self.start]
        for s in self.steps:
            pts.append(vec_add(pts[-1], s))
        return pts

    @property
    def end(self):
        p = self.start
        for s in self.steps:
            p = vec_add(p, s)
        return p

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.start == other.start and self.steps == other.steps

    def __hash__(self):
        return hash((self.start, self.steps))

    def __repr__(self):
        return "Path(%r, %r)" % (self.start, list(self.steps))


class TurnArray:
    """Two strictly increasing integer rows (p | q) of equal length."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        p = tuple(p)
        q = tuple(q)
        if len(p) != len(q):
            raise ValueError("turn rows must have equal length")
        for row in (p, q):
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("turn rows must be strictly increasing")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("TurnArray is immutable")

    def __len__(self):
        return len(self.p)

    def pairs(self):
        return list(zip(self.p, self.q))

    def __eq__(self, other):
        if not isinstance(other, TurnArray):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "TurnArray(p=%r, q=%r)" % (list(self.p), list(self.q))


def _require_simple_2d(path):
    for s in path.steps:
        if s not in (EAST, NORTH):
            raise ValueError("turn scan needs a 2D path of unit east/north steps, got step %r" % (s,))


def ne_turns(path):
    """Vertices entered by a north step and left by an east step."""
    _require_simple_2d(path)
    pts = path.points()
    p, q = [], []
    for i in range(1, len(path.steps)):
        if path.steps[i - 1] == NORTH and path.steps[i] == EAST:
            x, y = pts[i]
            p.append(x)
            q.append(y)
    return TurnArray(p, q)


def en_turns(path):
    """Vertices entered by an east step and left by a north step."""
    _require_simple_2d(path)
    pts = path.points()
    p, q = [], []
    for i in range(1, len(path.steps)):
        if path.steps[i - 1] == EAST and path.steps[i] == NORTH:
            x, y = pts[i]
            p.append(x)
            q.append(y)
    return TurnArray(p, q)


def turns_to_path(turns, start, end, kind="NE"):
    """Rebuild the unique monotone path with the given turn set.

    For kind NE the path runs east to p_1, north to q_1, east to p_2, and so
    on, finishing east to the final x and north to the final y.  Raises if
    the turn data cannot come from a monotone path between the endpoints.
    """
    a, b = start
    c, d = end
    steps = []
    x, y = a, b
    if kind == "NE":
        # east-first segments; each (p_i, q_i) is a north-to-east corner
        for px, qy in zip(turns.p, turns.q):
            if px < x or qy < y:
                raise ValueError("turns out of order for these endpoints")
            steps += [EAST] * (px - x)
            steps += [NORTH] * (qy - y)
            x, y = px, qy
        steps += [EAST] * (c - x)
        steps += [NORTH] * (d - y)
    elif kind == "EN":
        for px, qy in zip(turns.p, turns.q):
            if px < x or qy < y:
                raise ValueError("turns out of order for these endpoints")
            steps += [NORTH] * (qy - y)
            steps += [EAST] * (px - x)
            x, y = px, qy
        steps += [NORTH] * (d - y)
        steps += [EAST] * (c - x)
    else:
        raise ValueError("kind must be NE or EN")
    if x > c or y > d:
        raise ValueError("turns overshoot the endpoint")
    path = Path(start, steps)
    if path.end != tuple(end):
        raise ValueError("turn data does not reach the endpoint")
    return path


def spitzer_shift(a):
    """Index r such that the rotation a[r:] + a[:r] has all prefix sums >= 0.

    Requires total sum zero and no vanishing proper cyclic consecutive
    subsum; under that hypothesis the rotation is unique.
    """
    n = len(a)
    if n == 0:
        raise ValueError("empty sequence")
    vals = [Fraction(x) for x in a]
    total = sum(vals)
    if total != 0:
        raise ValueError("total sum must be zero, got %s" % (total,))
    # every proper cyclic consecutive subsum must be nonzero
    doubled = vals + vals
    for i in range(n):
        acc = Fraction(0)
        for length in range(1, n):
            acc += doubled[i + length - 1]
            if acc == 0:
                chunk = [str(x) for x in doubled[i:i + length]]
                raise ValueError(
                    "vanishing cyclic subsum a[%d..%d] = (%s)"
                    % (i, (i + length - 1) % n, ", ".join(chunk)))
    best = None
    for r in range(n):
        acc = Fraction(0)
        ok = True
        for x in vals[r:] + vals[:r]:
            acc += x
            if acc < 0:
                ok = False
                break
        if ok:
            if best is not None:
                raise AssertionError("rotation not unique; precondition check is broken")
            best = r
    assert best is not None, "a zero-sum sequence always has a valid rotation"
    return best


def cycle_lemma_valid_shifts(word, mu):
    """All cyclic shifts of a word over {1, 2} whose every nonempty prefix
    has strictly more ones than mu times its twos."""
    n = len(word)
    out = []
    for r in range(n):
        ones = twos = 0
        ok = True
        for i in range(n):
            c = word[(r + i) % n]
            if c == 1:
                ones += 1
            elif c == 2:
                twos += 1
            else:
                raise ValueError("word must be over {1, 2}, got %r" % (c,))
            if ones <= mu * twos:
                ok = False
                break
        if ok:
            out.append(r)
    return out
