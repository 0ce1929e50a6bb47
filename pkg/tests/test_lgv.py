import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from latticepaths import lgv as L
from latticepaths.algebra import Poly


def pool_paths(sys, i):
    # (pool index, vertex set, weight) for every path from start i
    out = []
    for k, e in enumerate(sys.ends):
        for trail, w in sys.all_paths(sys.starts[i], e):
            out.append((k, frozenset(trail), w))
    return out


def brute_signed_det(sys):
    # signed sum over endpoint assignments of vertex-disjoint families
    n = len(sys.starts)
    paths = [[sys.all_paths(a, e) for e in sys.ends] for a in sys.starts]
    total = 0
    for perm in permutations(range(n)):
        sign = perm_sign(perm)

        def rec(i, used):
            if i == n:
                return 1
            sub = 0
            for trail, w in paths[i][perm[i]]:
                vs = frozenset(trail)
                if not (vs & used):
                    sub += w * rec(i + 1, used | vs)
            return sub

        total += sign * rec(0, frozenset())
    return total


def perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def brute_free(sys):
    # disjoint families with strictly ascending pool indices
    n = len(sys.starts)
    opts = [pool_paths(sys, i) for i in range(n)]
    total = 0

    def rec(i, used, kprev, acc):
        nonlocal total
        if i == n:
            total += acc
            return
        for k, vs, w in opts[i]:
            if k > kprev and not (vs & used):
                rec(i + 1, used | vs, k, acc * w)

    rec(0, frozenset(), -1, 1)
    return total


def brute_mixed(sys):
    # each fixed end hit exactly once, the rest ascending into the pool
    n = len(sys.starts)
    m = len(sys.fixed_ends)
    fixed_paths = [[sys.all_paths(a, f) for f in sys.fixed_ends]
                   for a in sys.starts]
    opts = [pool_paths(sys, i) for i in range(n)]
    total = 0

    def rec(i, used, kprev, taken, acc):
        nonlocal total
        if i == n:
            if len(taken) == m:
                total += acc
            return
        for j in range(m):
            if j in taken:
                continue
            for trail, w in fixed_paths[i][j]:
                vs = frozenset(trail)
                if not (vs & used):
                    rec(i + 1, used | vs, kprev, taken | {j}, acc * w)
        for k, vs, w in opts[i]:
            if k > kprev and not (vs & used):
                rec(i + 1, used | vs, k, taken, acc * w)

    rec(0, frozenset(), -1, frozenset(), 1)
    return total


def brute_subseq(sys, r):
    # families of r paths over identity-paired subsequences of the
    # start list and the pool
    n = len(sys.starts)
    opts = [pool_paths(sys, i) for i in range(n)]
    total = 0
    for idx in combinations(range(n), r):

        def rec(pos, used, kprev, acc):
            nonlocal total
            if pos == r:
                total += acc
                return
            for k, vs, w in opts[idx[pos]]:
                if k > kprev and not (vs & used):
                    rec(pos + 1, used | vs, k, acc * w)

        rec(0, frozenset(), -1, 1)
    return total


def ssyt_fill(sh):
    # all semistandard fillings: rows weakly increase, columns strictly
    # increase, row i entries within [b_i, a_i]
    rows = []

    def rec(i, filled):
        if i == sh.rows:
            rows.append(tuple(filled))
            return
        width = sh.lam[i] - sh.mu[i]
        prev = filled[i - 1] if i else None

        def fill(j, row):
            if j == width:
                rec(i + 1, filled + [tuple(row)])
                return
            col = sh.mu[i] + j
            lo = sh.b[i] if not row else max(sh.b[i], row[-1])
            if i and sh.mu[i - 1] <= col < sh.lam[i - 1]:
                above = prev[col - sh.mu[i - 1]]
                lo = max(lo, above + 1)
            for v in range(lo, sh.a[i] + 1):
                row.append(v)
                fill(j + 1, row)
                row.pop()

        fill(0, [])

    rec(0, [])
    return rows


GRID3 = L.grid_edges(3, 3)
POOL22 = ((0, 2), (1, 2), (2, 2), (2, 1), (2, 0))


def test_system_validation():
    with pytest.raises(ValueError):
        L.DagPathSystem([("a", "b"), ("b", "a")], starts=("a",), ends=("b",))
    with pytest.raises(ValueError):
        L.DagPathSystem([("a", "a")], starts=("a",), ends=("a",))
    with pytest.raises(ValueError):
        L.DagPathSystem([("a", "b")], starts=("a",), ends=("b", "b"))


def test_edge_weight_merging():
    sys = L.DagPathSystem([("a", "b", 1), ("a", "b", 2)], starts=("a",),
                          ends=("b",))
    assert sys.path_gf("a", "b") == 3
    sys = L.DagPathSystem({("a", "b"): Fraction(1, 2), ("b", "c"): 4},
                          starts=("a",), ends=("c",))
    assert sys.path_gf("a", "c") == 2
    assert sys.path_gf("c", "a") == 0
    assert sys.path_gf("b", "b") == 1


def test_lgv_grid_example():
    sys = L.DagPathSystem(GRID3, starts=((0, 1), (1, 0)),
                          ends=((2, 3), (3, 2)))
    assert sys.path_gf((0, 1), (2, 3)) == 6
    assert sys.path_gf((1, 0), (2, 3)) == 4
    assert L.lgv_det(sys) == 20
    assert brute_signed_det(sys) == 20


def test_lgv_single_path():
    sys = L.DagPathSystem(GRID3, starts=((0, 0),), ends=((2, 3),))
    assert L.lgv_det(sys) == 10


def test_lgv_crossing_forced():
    # swapped start order: only the transposition connects disjointly
    sys = L.DagPathSystem(GRID3, starts=((1, 0), (0, 1)),
                          ends=((2, 3), (3, 2)))
    assert L.lgv_det(sys) == -20
    assert brute_signed_det(sys) == -20


def test_lgv_needs_matching_lengths():
    sys = L.DagPathSystem(GRID3, starts=((0, 0),), ends=((1, 1), (2, 2)))
    with pytest.raises(ValueError):
        L.lgv_det(sys)


def test_lgv_matches_signed_enumeration_on_random_boxes():
    rng = random.Random(2741)
    box = [(x, y) for x in range(4) for y in range(4)]
    edges = L.grid_edges(3, 3)
    done = 0
    while done < 25:
        n = rng.randrange(1, 4)
        pts = rng.sample(box, 2 * n)
        starts, ends = pts[:n], pts[n:]
        sys = L.DagPathSystem(edges, starts=starts, ends=ends)
        if max(sys.path_gf(a, e) for a in starts for e in ends) > 25:
            continue
        assert L.lgv_det(sys) == brute_signed_det(sys)
        done += 1


def test_pf_free_endpoints_examples():
    sys = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 1), (1, 0)),
                          ends=POOL22)
    assert L.pf_free_endpoints(sys) == 22
    assert brute_free(sys) == 22
    single = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 0),),
                             ends=POOL22)
    assert L.pf_free_endpoints(single) == sum(
        single.path_gf((0, 0), e) for e in POOL22)
    assert L.pf_free_endpoints(single) == 14


def test_pf_free_endpoints_sign_flip():
    fwd = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 1), (1, 0)),
                          ends=POOL22)
    rev = L.DagPathSystem(L.grid_edges(2, 2), starts=((1, 0), (0, 1)),
                          ends=POOL22)
    assert L.pf_free_endpoints(rev) == -L.pf_free_endpoints(fwd)


def test_pf_free_endpoints_random_grids():
    rng = random.Random(6310)
    for _ in range(8):
        n = rng.choice((1, 2, 3))
        starts = sorted(rng.sample([(0, y) for y in range(3)]
                                   + [(x, 0) for x in range(1, 3)], n),
                        key=lambda p: (-p[1], p[0]))
        sys = L.DagPathSystem(L.grid_edges(2, 2), starts=starts, ends=POOL22)
        assert L.pf_free_endpoints(sys) == brute_free(sys)


def test_pf_forced_pool_reduces_to_lgv_det():
    sys = L.DagPathSystem(GRID3, starts=((0, 1), (1, 0)),
                          ends=((2, 3), (3, 2)))
    assert L.pf_free_endpoints(sys) == L.lgv_det(sys) == 20


def test_pf_mixed_examples():
    # all ends fixed: collapses to the determinant
    fixed = L.DagPathSystem(GRID3, starts=((0, 1), (1, 0)),
                            fixed_ends=((2, 3), (3, 2)))
    det = L.lgv_det(L.DagPathSystem(GRID3, starts=((0, 1), (1, 0)),
                                    ends=((2, 3), (3, 2))))
    assert L.pf_mixed(fixed) == det == 20
    # no fixed ends: collapses to the free-endpoint Pfaffian
    free = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 1), (1, 0)),
                           ends=POOL22)
    assert L.pf_mixed(free) == L.pf_free_endpoints(free) == 22


def test_pf_mixed_grid_m1_n3():
    sys = L.DagPathSystem(L.grid_edges(2, 2),
                          starts=((0, 2), (0, 1), (1, 0)),
                          ends=((2, 2), (2, 1), (2, 0)),
                          fixed_ends=((1, 2),))
    assert L.pf_mixed(sys) == brute_mixed(sys)
    assert L.pf_mixed(sys) > 0


def test_pf_mixed_parity_error():
    sys = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 1), (1, 0)),
                          ends=POOL22, fixed_ends=((2, 2),))
    with pytest.raises(ValueError):
        L.pf_mixed(sys)
    with pytest.raises(ValueError):
        L.pf_mixed(L.DagPathSystem(GRID3, starts=((0, 0),),
                                   fixed_ends=((1, 1), (2, 2))))


def test_pf_both_free_case_a():
    sys = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 1), (1, 0)),
                          ends=POOL22)
    out = L.pf_both_free(sys, "a")
    assert out.coeff(0) == 1
    for s in range(3):
        assert out.coeff(s) == brute_subseq(sys, 2 * s)


def test_pf_both_free_case_b():
    sys = L.DagPathSystem(L.grid_edges(2, 2),
                          starts=((0, 2), (0, 1), (1, 0)),
                          ends=((1, 2), (2, 2), (2, 1), (2, 0)))
    out = L.pf_both_free(sys, "b")
    assert out.coeff(0) == 1
    for s in range(5):
        assert out.coeff(s) == brute_subseq(sys, s)


def test_pf_both_free_case_c():
    sys = L.DagPathSystem(L.grid_edges(2, 2), starts=((0, 1), (1, 0)),
                          ends=POOL22)
    out = L.pf_both_free(sys, "c")
    assert out.coeff(0) == 1
    for s in range(4):
        assert out.coeff(s) == brute_subseq(sys, s)


def test_pf_both_free_case_validation():
    even = L.DagPathSystem(L.grid_edges(1, 1), starts=((0, 1), (1, 0)),
                           ends=((1, 1),))
    odd = L.DagPathSystem(L.grid_edges(1, 1), starts=((0, 0),),
                          ends=((1, 1),))
    with pytest.raises(ValueError):
        L.pf_both_free(even, "b")
    with pytest.raises(ValueError):
        L.pf_both_free(odd, "a")
    with pytest.raises(ValueError):
        L.pf_both_free(odd, "c")
    with pytest.raises(ValueError):
        L.pf_both_free(even, "d")


def test_minor_summation_random_instances():
    rng = random.Random(4470)
    for n, m, p in ((2, 0, 2), (2, 0, 3), (3, 1, 4), (4, 2, 4)):
        for _ in range(50):
            M = [[rng.randint(-3, 3) for _ in range(p)] for _ in range(n)]
            H = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)]
            A = [[0] * p for _ in range(p)]
            for i in range(p):
                for j in range(i + 1, p):
                    A[i][j] = rng.randint(-3, 3)
                    A[j][i] = -A[i][j]
            assert L.minor_summation_check(M, H, A)


def test_minor_summation_all_ones_skew():
    rng = random.Random(831)
    for n, m, p in ((2, 0, 3), (3, 1, 3), (4, 2, 4)):
        A = [[0 if i == j else (1 if j > i else -1) for j in range(p)]
             for i in range(p)]
        M = [[rng.randint(-2, 2) for _ in range(p)] for _ in range(n)]
        H = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(n)]
        assert L.minor_summation_check(M, H, A)


def test_minor_summation_m_equals_n():
    # single K = empty set: both sides reduce to the det/Pf relation
    rng = random.Random(15)
    for n, p in ((2, 2), (2, 3), (3, 3)):
        if (n + n) % 2:
            continue
        M = [[rng.randint(-2, 2) for _ in range(p)] for _ in range(n)]
        H = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        A = [[0] * p for _ in range(p)]
        for i in range(p):
            for j in range(i + 1, p):
                A[i][j] = rng.randint(-2, 2)
                A[j][i] = -A[i][j]
        assert L.minor_summation_check(M, H, A)


def test_minor_summation_validation():
    with pytest.raises(ValueError):
        L.minor_summation_check([[1, 2]], [], [[0, 1], [-1, 0]])
    with pytest.raises(ValueError):
        L.minor_summation_check([[1], [2]], [], [[0]])
    with pytest.raises(ValueError):
        L.minor_summation_check([[1, 2], [3, 4]], [],
                                [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        L.minor_summation_check([[1, 2], [3, 4]], [],
                                [[1, 1], [-1, 0]])


def test_shape_validation():
    with pytest.raises(ValueError):
        L.Shape((1, 2), a=(3, 3), b=(1, 1))
    with pytest.raises(ValueError):
        L.Shape((2, 1), a=(3, 2), b=(1, 1))
    with pytest.raises(ValueError):
        L.Shape((2, 1), a=(3, 3), b=(2, 1))
    with pytest.raises(ValueError):
        L.Shape((2, 1), a=(0, 3), b=(1, 1))
    with pytest.raises(ValueError):
        L.Shape((2, 1), a=(3, 3), b=(1, 1), mu=(0, 1))
    with pytest.raises(ValueError):
        L.Shape((2, 1), a=(3,), b=(1, 1))
    sh = L.Shape((3, 1), a=(2, 4), b=(1, 2), mu=(1, 0))
    assert sh.rows == 2 and sh.cells() == 3
    with pytest.raises(AttributeError):
        sh.lam = (1,)


def test_ssyt_count_examples():
    assert L.ssyt_count(L.Shape((2, 1), a=(3, 3), b=(1, 1))) == 8
    assert len(ssyt_fill(L.Shape((2, 1), a=(3, 3), b=(1, 1)))) == 8
    for a in range(1, 6):
        assert L.ssyt_count(L.Shape((1,), a=(a,), b=(1,))) == a


def test_ssyt_count_matches_enumeration():
    shapes = [
        L.Shape((2, 2), a=(2, 2), b=(1, 1)),
        L.Shape((3, 1), a=(3, 3), b=(1, 1)),
        L.Shape((2, 2, 1), a=(3, 3, 3), b=(1, 1, 1)),
        L.Shape((3, 2), a=(2, 4), b=(1, 2)),
        L.Shape((3, 2), a=(3, 3), b=(1, 1), mu=(1, 0)),
        L.Shape((3, 3), a=(4, 4), b=(1, 2), mu=(2, 1)),
        L.Shape((2, 1), a=(4, 4), b=(0, 0)),
    ]
    for sh in shapes:
        assert L.ssyt_count(sh) == len(ssyt_fill(sh))


def test_ssyt_gf_matches_enumeration():
    shapes = [
        L.Shape((2, 1), a=(3, 3), b=(1, 1)),
        L.Shape((2, 2), a=(3, 3), b=(1, 1)),
        L.Shape((3, 2), a=(3, 3), b=(1, 1), mu=(1, 0)),
        L.Shape((2, 1, 1), a=(3, 4, 4), b=(1, 1, 2)),
    ]
    for sh in shapes:
        gf = L.ssyt_gf(sh)
        assert gf(1) == L.ssyt_count(sh)
        by_sum = {}
        for filling in ssyt_fill(sh):
            s = sum(sum(row) for row in filling)
            by_sum[s] = by_sum.get(s, 0) + 1
        for s, cnt in by_sum.items():
            assert gf.coeff(s) == cnt
        assert sum(by_sum.values()) == gf(1)
    with pytest.raises(ValueError):
        L.ssyt_gf(L.Shape((2,), a=(2,), b=(-1,)))


def test_ssyt_path_bijection_round_trip():
    # row i of a tableau lists the heights of the horizontal steps of a
    # lattice path from (mu_i - i, b_i) to (lam_i - i, a_i); tableaux
    # correspond to vertex-disjoint families
    shapes = [
        L.Shape((2, 1), a=(3, 3), b=(1, 1)),
        L.Shape((2, 2), a=(2, 3), b=(1, 1)),
        L.Shape((3, 2), a=(3, 3), b=(1, 1), mu=(1, 0)),
        L.Shape((4, 2), a=(2, 3), b=(1, 1)),
    ]
    for sh in shapes:
        n = sh.rows
        xs = [c for i in range(n) for c in (sh.mu[i] - i, sh.lam[i] - i)]
        edges = L.grid_edges((min(xs), max(xs)), (0, max(sh.a)))
        starts = [(sh.mu[i] - i, sh.b[i]) for i in range(n)]
        ends = [(sh.lam[i] - i, sh.a[i]) for i in range(n)]
        sys = L.DagPathSystem(edges, starts=starts, ends=ends)

        def decode(trails):
            rows = []
            for trail in trails:
                heights = [u[1] for u, v in zip(trail, trail[1:])
                           if v[0] == u[0] + 1]
                rows.append(tuple(heights))
            return tuple(rows)

        families = []

        def rec(i, used, acc):
            if i == n:
                families.append(decode(acc))
                return
            for trail, _ in sys.all_paths(starts[i], ends[i]):
                vs = frozenset(trail)
                if not (vs & used):
                    rec(i + 1, used | vs, acc + [trail])

        rec(0, frozenset(), [])
        assert sorted(families) == sorted(ssyt_fill(sh))
        assert len(families) == L.ssyt_count(sh)


def test_hook_content_examples():
    assert L.hook_content((2, 1), 3) == 8
    assert L.hook_content((2, 2), 2) == 1
    for a in range(1, 7):
        assert L.hook_content((1,), a) == a
    assert L.hook_content((), 0) == 1
    with pytest.raises(ValueError):
        L.hook_content((1, 2), 3)
    with pytest.raises(ValueError):
        L.hook_content((2, 2), 1)


def test_hook_content_triple_agreement():
    shapes = [(1,), (2,), (2, 1), (2, 2), (3, 1), (3, 2, 1), (2, 2, 1)]
    for lam in shapes:
        rows = len(lam)
        for a in range(rows, rows + 3):
            sh = L.Shape(lam, a=(a,) * rows, b=(1,) * rows)
            direct = len(ssyt_fill(sh))
            assert L.hook_content(lam, a) == L.ssyt_count(sh) == direct


def test_hook_content_gf_examples():
    assert L.hook_content_gf((1,), 2) == Poly([0, 1, 1])
    for lam, a in (((2, 1), 3), ((2, 2), 3), ((3, 1), 4)):
        rows = len(lam)
        sh = L.Shape(lam, a=(a,) * rows, b=(1,) * rows)
        assert L.hook_content_gf(lam, a) == L.ssyt_gf(sh)
        assert L.hook_content_gf(lam, a)(1) == L.hook_content(lam, a)
