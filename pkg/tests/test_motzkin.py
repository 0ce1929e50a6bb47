import random
from fractions import Fraction
from itertools import product

import pytest

from latticepaths import motzkin as M
from latticepaths.algebra import MPoly, Poly
from latticepaths.oracle import PathQuery, oracle_count
from latticepaths.paths import Restriction, StepSet

MSTEPS = StepSet([(1, 1), (1, -1), (1, 0)])
SSTEPS = StepSet([(1, 1), (1, -1), (2, 0)])
UPPER = Restriction.halfspaces([((0, 1), 0, False)])

Z = Poly([0, 1])
Z2 = Poly([0, 0, 1])


def axis_count(steps, a, b, c, d):
    return oracle_count(PathQuery((a, b), (c, d), steps, UPPER, None))


def strip_oracle(r, s, k, n):
    band = Restriction.halfspaces([((0, 1), 0, False), ((0, -1), -k, False)])
    return oracle_count(PathQuery((0, r), (n, s), MSTEPS, band, n))


def test_count_examples():
    assert M.motzkin_count(0, 0, 4, 0) == 9
    assert M.schroeder_count(0, 0, 4, 0) == 6
    assert M.motzkin_count(0, 0, 0, 0) == 1
    assert M.schroeder_count(0, 0, 0, 0) == 1


def test_counts_match_oracle():
    for a in range(4):
        for c in range(a, 7):
            for b, d in product(range(5), repeat=2):
                assert M.motzkin_count(a, b, c, d) == axis_count(MSTEPS, a, b, c, d)
                assert M.schroeder_count(a, b, c, d) == axis_count(SSTEPS, a, b, c, d)


def test_count_preconditions():
    with pytest.raises(ValueError):
        M.motzkin_count(0, -1, 3, 0)
    with pytest.raises(ValueError):
        M.schroeder_count(0, 0, 3, -2)


def test_number_sequences():
    assert [M.motzkin_number(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert [M.schroeder_number(n) for n in range(5)] == [1, 2, 6, 22, 90]
    assert [M.little_schroeder(n) for n in range(5)] == [1, 1, 3, 11, 45]
    assert M.little_schroeder(0) == 1
    for n in range(12):
        assert M.motzkin_number(n) == axis_count(MSTEPS, 0, 0, n, 0)
    for n in range(7):
        assert M.schroeder_number(n) == axis_count(SSTEPS, 0, 0, 2 * n, 0)
        if n >= 1:
            assert M.schroeder_number(n) == 2 * M.little_schroeder(n)


def test_gf_bootstrap():
    assert list(M.motzkin_gf(5).coeffs) == [1, 1, 2, 4, 9, 21]
    assert list(M.schroeder_gf(4).coeffs) == [1, 2, 6, 22, 90]
    assert list(M.motzkin_gf(0).coeffs) == [1]
    assert list(M.schroeder_gf(0).coeffs) == [1]
    g = M.motzkin_gf(12)
    for n in range(13):
        assert g.coeff(n) == M.motzkin_number(n)
    g = M.schroeder_gf(10)
    for n in range(11):
        assert g.coeff(n) == M.schroeder_number(n)


def test_cf_series_counting_weights():
    w = M.MotzkinWeighting.constant(Z, Z2, 8)
    assert list(M.cf_series(w, None, 8).coeffs) == [1, 1, 2, 4, 9, 21, 51, 127, 323]
    ws = M.MotzkinWeighting.constant(Z2, Z2, 8)
    got = M.cf_series(ws, None, 8)
    for n in range(5):
        assert got.coeff(2 * n) == M.schroeder_number(n)
        if 2 * n + 1 <= 8:
            assert got.coeff(2 * n + 1) == 0


def test_cf_series_level_only():
    w = M.MotzkinWeighting([Z], [])
    assert list(M.cf_series(w, 0, 6).coeffs) == [1] * 7


def test_cf_series_truncation_stability():
    N = 7
    rng = random.Random(417)
    base = M.MotzkinWeighting.constant(Z, Z2, N)
    ref = M.cf_series(base, N, N)
    # junk weights above height N must not reach coefficients <= N
    junk_b = list(base.b) + [Poly([0, rng.randrange(1, 9)]) for _ in range(4)]
    junk_l = list(base.lam) + [Poly([0, 0, rng.randrange(1, 9)]) for _ in range(4)]
    ext = M.MotzkinWeighting(junk_b, junk_l)
    assert M.cf_series(ext, N + 4, N) == ref


def test_cf_series_errors():
    w = M.MotzkinWeighting.constant(Poly([1]), Z2, 4)
    with pytest.raises(ValueError):
        M.cf_series(w, None, 4)
    # constant level weight 1 at the bottom makes 1 - b_0 non invertible
    with pytest.raises(ZeroDivisionError):
        M.cf_series(w, 0, 4)
    with pytest.raises(ValueError):
        M.cf_series(M.MotzkinWeighting.constant(Z, Z2, 2), None, 5)


def _dyck_paths(m):
    paths = [[]]
    for _ in range(2 * m):
        grown = []
        for p in paths:
            h = sum(p)
            grown.append(p + [1])
            if h >= 1:
                grown.append(p + [-1])
        paths = grown
    return [p for p in paths if sum(p) == 0]


def test_rv_peak_cf_counts_peaks():
    for qv in (1, 2, 3):
        got = M.rv_peak_cf([qv * Z2] * 6, [Z2] * 6, 6)
        for m in range(4):
            want = 0
            for p in _dyck_paths(m):
                peaks = sum(1 for i in range(len(p) - 1)
                            if p[i] == 1 and p[i + 1] == -1)
                want += qv ** peaks
            assert got.coeff(2 * m) == want, (qv, m)


def test_rv_peak_cf_degenerate_forms():
    same = M.rv_peak_cf([Z2] * 6, [Z2] * 6, 6)
    plain = M.cf_series(M.MotzkinWeighting.constant(Poly([0]), Z2, 6), None, 6)
    assert same == plain
    zero = Poly([0])
    assert list(M.rv_peak_cf([zero] * 4, [zero] * 4, 4).coeffs) == [1, 0, 0, 0, 0]


def test_strip_transfer_examples():
    one = M.MotzkinWeighting.constant(1, 1, 4)
    assert M.strip_count_transfer(0, 0, 3, 0, one) == 1
    assert M.strip_count_transfer(1, 2, 3, 0, one) == 0
    assert M.strip_count_transfer(0, 0, 2, 4, one) == strip_oracle(0, 0, 2, 4)


def test_strip_transfer_matches_oracle():
    one = M.MotzkinWeighting.constant(1, 1, 4)
    for k in range(5):
        for r, s in product(range(k + 1), repeat=2):
            for n in range(9):
                assert M.strip_count_transfer(r, s, k, n, one) == strip_oracle(r, s, k, n)


def test_strip_gf_symbolic_identity():
    # strongest form: independent indeterminates at every height
    N = 10
    for k in range(5):
        b = [MPoly.var("b%d" % h) for h in range(k + 1)]
        lam = [MPoly.var("l%d" % h) for h in range(1, k + 1)]
        w = M.MotzkinWeighting(b, lam)
        gfs = {(r, s): M.strip_gf(r, s, k, w, N)
               for r, s in product(range(k + 1), repeat=2)}
        for r in range(k + 1):
            # one transfer iteration per start height covers every (s, n)
            vec = [0] * (k + 1)
            vec[r] = 1
            for n in range(N + 1):
                for s in range(k + 1):
                    assert gfs[(r, s)].coeff(n) == vec[s], (k, r, s, n)
                vec = [vec[h] * w.b[h]
                       + (vec[h - 1] if h > 0 else 0)
                       + (vec[h + 1] * w.lam[h] if h < k else 0)
                       for h in range(k + 1)]


def test_strip_gf_examples():
    cat = M.strip_gf(0, 0, 8, M.MotzkinWeighting.constant(0, 1, 8), 8)
    assert list(cat.coeffs) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    capped = M.strip_gf(0, 0, 1, M.MotzkinWeighting.constant(1, 1, 1), 6)
    assert list(capped.coeffs) == [1, 1, 2, 4, 8, 16, 32]


def test_strip_gf_transposition_factor():
    rng = random.Random(92)
    for _ in range(40):
        k = rng.randrange(1, 5)
        s = rng.randrange(k)
        r = rng.randrange(s + 1, k + 1)
        b = [rng.randrange(4) for _ in range(k + 1)]
        lam = [rng.randrange(1, 4) for _ in range(k)]
        w = M.MotzkinWeighting(b, lam)
        factor = 1
        for h in range(s + 1, r + 1):
            factor *= lam[h - 1]
        lhs = M.strip_gf(r, s, k, w, 8)
        rhs = M.strip_gf(s, r, k, w, 8)
        for n in range(9):
            assert lhs.coeff(n) == factor * rhs.coeff(n)


def test_strip_gf_agrees_with_unbounded_cf():
    # a strip taller than the order cannot constrain the paths
    N = 8
    w = M.MotzkinWeighting.constant(2, 3, N)
    gf = M.strip_gf(0, 0, N, w, N)
    cf = M.cf_series(M.MotzkinWeighting.constant(2 * Z, 3 * Z2, N), None, N)
    assert gf == cf


def test_strip_trig_examples_and_sweep():
    assert M.strip_count_trig(0, 0, 1, 2) == 2
    for k in range(5):
        assert M.strip_count_trig(0, 0, k, 0) == 1
    one = M.MotzkinWeighting.constant(1, 1, 4)
    for k in range(5):
        for r, s in product(range(k + 1), repeat=2):
            for n in range(11):
                assert M.strip_count_trig(r, s, k, n) == \
                    M.strip_count_transfer(r, s, k, n, one), (r, s, k, n)


def test_strip_trig_large_n_uses_decimals():
    w = M.MotzkinWeighting.constant(1, 1, 3)
    for n in (50, 200):
        assert M.strip_count_trig(0, 0, 3, n) == M.strip_count_transfer(0, 0, 3, n, w)


def _ruin_sim(a, R, N, pA, pB):
    # exhaustive game tree: play rounds until someone is bankrupt
    pT = 1 - pA - pB
    total = Fraction(0)
    stack = [(a, 0, Fraction(1))]
    while stack:
        bank, played, prob = stack.pop()
        if bank == 0:
            if played == N:
                total += prob
            continue
        if bank == R or played == N:
            continue
        stack.append((bank + 1, played + 1, prob * pA))
        stack.append((bank - 1, played + 1, prob * pB))
        if pT:
            stack.append((bank, played + 1, prob * pT))
    return total


def test_gambler_ruin_single_round():
    assert M.gambler_ruin(1, 2, 1, Fraction(1, 4), Fraction(1, 2)) == Fraction(1, 2)


def test_gambler_ruin_paper_play():
    # the play TATBTTAABBBB bankrupts a=2 against R-a=4 in exactly 12 rounds
    pA, pB = Fraction(1, 5), Fraction(1, 4)
    pT = 1 - pA - pB
    bank = 2
    for move in "TATBTTAABBBB":
        assert 0 < bank < 6
        bank += {"A": 1, "B": -1, "T": 0}[move]
    assert bank == 0
    play_prob = pT ** 4 * pA ** 3 * pB ** 5
    got = M.gambler_ruin(2, 6, 12, pA, pB)
    assert got == _ruin_sim(2, 6, 12, pA, pB)
    assert got >= play_prob


def test_gambler_ruin_matches_simulation():
    cases = [(1, 3, 3), (2, 4, 4), (2, 3, 5), (1, 4, 6), (3, 5, 7)]
    probs = [(Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 3), Fraction(1, 3)),
             (Fraction(1, 5), Fraction(2, 5))]
    for a, R, N in cases:
        for pA, pB in probs:
            assert M.gambler_ruin(a, R, N, pA, pB) == _ruin_sim(a, R, N, pA, pB)


def test_gambler_ruin_total_probability():
    tot = sum(M.gambler_ruin(2, 4, n, Fraction(1, 2), Fraction(1, 2))
              for n in range(1, 40))
    assert tot <= 1


def test_gambler_ruin_validation():
    with pytest.raises(ValueError):
        M.gambler_ruin(0, 3, 2, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        M.gambler_ruin(1, 3, 2, Fraction(2, 3), Fraction(1, 2))
    with pytest.raises(ValueError):
        M.gambler_ruin(1, 3, 0, Fraction(1, 3), Fraction(1, 2))
