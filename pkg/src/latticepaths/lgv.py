"""Non-intersecting path systems on finite acyclic digraphs.

Families of paths are non-intersecting when no two paths share a
vertex.  The determinant of the pairwise path generating functions
equals the permutation-signed count of non-intersecting families; with
free endpoints drawn from an ordered pool the determinant becomes a
Pfaffian, with blocks for mixed fixed/free endpoints and a polynomial
refinement when both ends range over pools.  Tableau counting falls
out of the determinant form: semistandard tableaux with row bounds are
non-intersecting families of unit right/up paths, giving a binomial
determinant, its q-analogue, and the hook-content product.

Pairwise entries Q(i, j) are computed by exhaustive enumeration of
vertex-disjoint path pairs, which is exponential but exact: these
entries are verification-grade, and the determinant/Pfaffian built
from them is the production-grade computation.  Q is stored in the
antisymmetrized form D(i, j) - D(j, i), where D(i, j) counts pairs
whose pool indices ascend with the start order; on systems where the
pool order forces ascending endpoints, D(j, i) = 0 and Q is exactly
the ascending-pair count.
"""

from fractions import Fraction
from itertools import combinations

from .algebra import Poly, UpperTriArray, binom, det, pfaffian, qbinom
from .plane import _require


class DagPathSystem:
    """A finite weighted acyclic digraph plus the endpoint data to
    enumerate between.

    edges: dict {(u, v): weight} or iterable of (u, v) or (u, v, weight)
    pairs; parallel edges merge by adding weights.  starts is the
    ordered sequence of path sources; ends the ordered endpoint pool;
    fixed_ends an optional sequence of forced endpoints, paired with
    the leading starts by the mixed Pfaffian.
    """

    def __init__(self, edges, starts, ends=(), fixed_ends=()):
        adj = {}
        if isinstance(edges, dict):
            edges = [(u, v, w) for (u, v), w in edges.items()]
        for e in edges:
            if len(e) == 2:
                (u, v), w = e, 1
            else:
                u, v, w = e
            adj.setdefault(u, {})
            adj[u][v] = adj[u].get(v, 0) + w
        self.starts = tuple(starts)
        self.ends = tuple(ends)
        self.fixed_ends = tuple(fixed_ends)
        if len(set(self.ends)) != len(self.ends):
            raise ValueError("endpoint pool has repeated vertices")
        vertices = set(self.starts) | set(self.ends) | set(self.fixed_ends)
        for u, out in adj.items():
            vertices.add(u)
            vertices.update(out)
        self.vertices = vertices
        self._adj = {u: tuple(sorted(adj.get(u, {}).items(), key=repr))
                     for u in vertices}
        self._check_acyclic()
        self._gf_cache = {}
        self._pool_cache = {}

    def _check_acyclic(self):
        state = {}

        def visit(u):
            state[u] = 1
            for v, _ in self._adj[u]:
                mark = state.get(v)
                if mark == 1:
                    raise ValueError("graph has a cycle through %r" % (v,))
                if mark is None:
                    visit(v)
            state[u] = 2

        for u in self.vertices:
            if u not in state:
                visit(u)

    def path_gf(self, u, v):
        """Total weight of all directed paths u -> v (1 if u == v)."""
        key = (u, v)
        if key in self._gf_cache:
            return self._gf_cache[key]
        total = 1 if u == v else 0
        for x, w in self._adj.get(u, ()):
            total = total + w * self.path_gf(x, v)
        self._gf_cache[key] = total
        return total

    def all_paths(self, u, v):
        """Every directed path u -> v as (vertex tuple, weight)."""
        if u not in self.vertices or v not in self.vertices:
            return []
        out = []

        def walk(x, trail, weight):
            if x == v:
                out.append((tuple(trail), weight))
            for y, w in self._adj[x]:
                trail.append(y)
                walk(y, trail, weight * w)
                trail.pop()

        walk(u, [u], 1)
        return out

    def _pool_paths(self, i):
        # every path from start i into the pool, tagged with its pool
        # index and vertex set
        if i in self._pool_cache:
            return self._pool_cache[i]
        out = []
        for k, e in enumerate(self.ends):
            for trail, w in self.all_paths(self.starts[i], e):
                out.append((k, frozenset(trail), w))
        self._pool_cache[i] = out
        return out


def lgv_det(sys):
    """Determinant of the start-to-end path generating functions.

    Entry (i, j) is the path weight sum from starts[j] to ends[i].  The
    value is the permutation-signed count of non-intersecting families,
    so it is the plain count whenever crossing assignments force an
    intersection.
    """
    n = len(sys.starts)
    _require(len(sys.ends) == n, "needs as many ends as starts")
    return det([[sys.path_gf(sys.starts[j], sys.ends[i]) for j in range(n)]
                for i in range(n)])


def _pair_gf(sys, i, j):
    # antisymmetrized vertex-disjoint pair weight: ascending pool pairs
    # minus descending ones
    total = 0
    for k, vi, wi in sys._pool_paths(i):
        for l, vj, wj in sys._pool_paths(j):
            if k == l or (vi & vj):
                continue
            if k < l:
                total = total + wi * wj
            else:
                total = total - wi * wj
    return total


def _row_gf(sys, i):
    # weight of all paths from start i anywhere into the pool
    total = 0
    for _, _, w in sys._pool_paths(i):
        total = total + w
    return total


def pf_free_endpoints(sys):
    """Pfaffian count of non-intersecting families whose endpoints are
    drawn from the ordered pool with ascending pool indices.

    The value is the permutation-signed sum over start orders; on
    systems where the pool order forces the ascending assignment it is
    the plain count.  An odd number of starts is handled by a phantom
    index whose column holds the single-path pool sums.
    """
    n = len(sys.starts)
    dim = n if n % 2 == 0 else n + 1

    def entry(i, j):
        if j < n:
            return _pair_gf(sys, i, j)
        return _row_gf(sys, i)

    return pfaffian(UpperTriArray(dim, entry))


def pf_mixed(sys):
    """Mixed-endpoint count: every fixed end is hit by exactly one
    path and the remaining starts run into the pool with ascending
    pool indices.

    Block Pfaffian of the pairwise pool entries against the start-to-
    fixed-end path sums, signed so that on pool orders that force the
    ascending assignment it is the plain non-intersecting family
    count.  With an empty pool and as many fixed ends as starts it
    collapses to the determinant of lgv_det.
    """
    n = len(sys.starts)
    m = len(sys.fixed_ends)
    _require(m <= n, "more fixed ends than starts")
    if (m + n) % 2:
        raise ValueError("needs m + n even; pad with a phantom start")

    def entry(i, j):
        if j < n:
            return _pair_gf(sys, i, j)
        return sys.path_gf(sys.starts[i], sys.fixed_ends[j - n]) if i < n else 0

    value = pfaffian(UpperTriArray(n + m, entry))
    return -value if (m * (m - 1) // 2) % 2 else value


def pf_both_free(sys, case):
    """Polynomial in t refining non-intersecting families whose starts
    AND ends are subsequences of the respective pools.

    case "a" (even number of starts): coefficient of t^s counts
    families of 2s paths.  case "b" (odd) and case "c" (even, one more
    phantom pair): coefficient of t^s counts families of s paths.
    Identity-paired subsequences, exact on pool orders that force the
    ascending assignment.
    """
    n = len(sys.starts)
    if case == "a":
        _require(n % 2 == 0, "case a needs an even number of starts")
        dim = n
    elif case == "b":
        _require(n % 2 == 1, "case b needs an odd number of starts")
        dim = n + 1
    elif case == "c":
        _require(n % 2 == 0, "case c needs an even number of starts")
        dim = n + 2
    else:
        raise ValueError("case must be one of 'a', 'b', 'c'")

    def entry(i, j):
        sign = 1 if (i + j + 1) % 2 == 0 else -1
        if j < n:
            q = _pair_gf(sys, i, j)
            return Poly([sign, q]) if case == "a" else Poly([sign, 0, q])
        if i < n and j == n and case in ("b", "c"):
            return Poly([sign, _row_gf(sys, i)])
        return Poly([sign])

    return pfaffian(UpperTriArray(dim, entry))


def _submatrix_pf(A, K):
    return pfaffian(UpperTriArray(len(K), lambda a, b: A[K[a]][K[b]]))


def minor_summation_check(M, H, A):
    """Evaluate both sides of the minor summation identity and compare.

    M is n x p, H is n x m, A is a p x p skew-symmetric matrix.  The
    left side sums Pf(A restricted to K) times det(columns K of M
    next to H) over all (n-m)-subsets K; the right side is the signed
    block Pfaffian of M A M^t against H.  Returns their equality.
    """
    n = len(M)
    p = len(M[0]) if n else 0
    m = len(H[0]) if (n and H) else 0
    _require(len(H) == n or m == 0, "H needs one row per row of M")
    if (n + m) % 2:
        raise ValueError("needs n + m even")
    if not 0 <= n - m <= p:
        raise ValueError("needs 0 <= n - m <= p")
    for i in range(p):
        if A[i][i] != 0:
            raise ValueError("skew matrix needs a zero diagonal")
        for j in range(p):
            if A[i][j] != -A[j][i]:
                raise ValueError("matrix is not skew-symmetric")

    lhs = 0
    for K in combinations(range(p), n - m):
        block = [[M[i][k] for k in K] + list(H[i] if m else ())
                 for i in range(n)]
        lhs = lhs + _submatrix_pf(A, K) * det(block)

    mam = [[sum(M[i][s] * A[s][t] * M[j][t]
                for s in range(p) for t in range(p))
            for j in range(n)] for i in range(n)]

    def entry(i, j):
        if j < n:
            return mam[i][j]
        return H[i][j - n] if i < n else 0

    rhs = pfaffian(UpperTriArray(n + m, entry))
    if (m * (m - 1) // 2) % 2:
        rhs = -rhs
    return lhs == rhs


class Shape:
    """A skew tableau shape with per-row entry bounds.

    lam and mu are weakly decreasing integer vectors with lam_i >= mu_i
    (mu defaults to zeros); row i holds lam_i - mu_i cells whose entries
    lie in [b_i, a_i], with both bound vectors weakly increasing and
    a_i >= b_i.
    """

    __slots__ = ("lam", "mu", "a", "b")

    def __init__(self, lam, a, b, mu=None):
        lam = tuple(lam)
        mu = tuple(mu) if mu is not None else (0,) * len(lam)
        a = tuple(a)
        b = tuple(b)
        n = len(lam)
        if not (len(mu) == len(a) == len(b) == n):
            raise ValueError("shape vectors must share one length")
        for name, vec, down in (("lam", lam, True), ("mu", mu, True),
                                ("a", a, False), ("b", b, False)):
            for i in range(n - 1):
                if down and vec[i] < vec[i + 1]:
                    raise ValueError("%s must be weakly decreasing" % name)
                if not down and vec[i] > vec[i + 1]:
                    raise ValueError("%s must be weakly increasing" % name)
        for i in range(n):
            if lam[i] < mu[i]:
                raise ValueError("row %d has negative length" % i)
            if a[i] < b[i]:
                raise ValueError("row %d has empty entry range" % i)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Shape is immutable")

    @property
    def rows(self):
        return len(self.lam)

    def cells(self):
        return sum(l - m for l, m in zip(self.lam, self.mu))

    def __repr__(self):
        return ("Shape(lam=%r, a=%r, b=%r, mu=%r)"
                % (list(self.lam), list(self.a), list(self.b), list(self.mu)))


def ssyt_count(sh):
    """Number of semistandard tableaux of the shape: rows weakly
    increase, columns strictly increase, row i entries in [b_i, a_i].

    Binomial determinant from the bijection with non-intersecting
    unit-step path families.
    """
    n = sh.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = sh.lam[i] - sh.mu[j] - i + j
            row.append(binom(sh.a[i] - sh.b[j] + e, e))
        rows.append(row)
    return det(rows)


def ssyt_gf(sh):
    """Entry-sum generating function of the same tableaux: the
    coefficient of q^s is the number of tableaux whose entries sum
    to s.  q-binomial determinant; needs nonnegative lower bounds."""
    if sh.rows and min(sh.b) < 0:
        raise ValueError("q-version needs nonnegative lower bounds")
    n = sh.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = sh.lam[i] - sh.mu[j] - i + j
            entry = qbinom(sh.a[i] - sh.b[j] + e, e)
            if e > 0:
                entry = entry.shift(sh.b[j] * e)
            row.append(entry)
        rows.append(row)
    out = det(rows)
    return out if isinstance(out, Poly) else Poly([out])


def _partition_cells(lam):
    for i, l in enumerate(lam):
        for j in range(l):
            yield i, j


def hook_content(lam, a):
    """Tableau count for a straight shape with entries in [1, a], as
    the product over cells of (a + content) / hook length."""
    lam = tuple(lam)
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise ValueError("lam must be weakly decreasing")
    if lam and lam[-1] < 0:
        raise ValueError("lam must be nonnegative")
    rows = sum(1 for l in lam if l > 0)
    _require(a >= rows, "needs at least as many entry values as rows")
    conj = [sum(1 for l in lam if l > j) for j in range(lam[0] if lam else 0)]
    out = Fraction(1)
    for i, j in _partition_cells(lam):
        content = j - i
        hook = (lam[i] - j) + (conj[j] - i) - 1
        out *= Fraction(a + content, hook)
    if out.denominator != 1:
        raise ArithmeticError("hook-content product is not an integer")
    return int(out)


def hook_content_gf(lam, a):
    """Entry-sum generating function of the same tableaux: prefactor
    q^(sum of i * lam_i) times the product of cyclotomic-style ratios
    (1 - q^(a + content)) / (1 - q^hook)."""
    lam = tuple(lam)
    rows = sum(1 for l in lam if l > 0)
    _require(a >= rows, "needs at least as many entry values as rows")
    conj = [sum(1 for l in lam if l > j) for j in range(lam[0] if lam else 0)]
    num = Poly([1])
    den = Poly([1])
    for i, j in _partition_cells(lam):
        content = j - i
        hook = (lam[i] - j) + (conj[j] - i) - 1
        num = num * _one_minus_q(a + content)
        den = den * _one_minus_q(hook)
    shift = sum((i + 1) * l for i, l in enumerate(lam))
    return num.exact_div(den).shift(shift)


def _one_minus_q(e):
    return Poly([1] + [0] * (e - 1) + [-1])


def grid_edges(xmax, ymax, right_weight=None):
    """Unit right/up edges on the [0, xmax] x [0, ymax] grid; the grid
    is shifted to cover negative coordinates by passing tuples
    (xmin, xmax), (ymin, ymax).  right_weight(x, y), when given,
    supplies the weight of the step (x, y) -> (x + 1, y)."""
    x0, x1 = xmax if isinstance(xmax, tuple) else (0, xmax)
    y0, y1 = ymax if isinstance(ymax, tuple) else (0, ymax)
    edges = []
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if x < x1:
                w = right_weight(x, y) if right_weight else 1
                edges.append(((x, y), (x + 1, y), w))
            if y < y1:
                edges.append(((x, y), (x, y + 1), 1))
    return edges
