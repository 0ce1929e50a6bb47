import random
from fractions import Fraction

import pytest

from latticepaths import motzkin as M
from latticepaths import orthopoly as O
from latticepaths.algebra import MPoly, Poly


def weighted_axis_oracle(n, b, lam):
    # sum of weight products over Motzkin paths (0,0) -> (n,0), y >= 0;
    # down from height y picks up lam[y - 1]
    def rec(i, y):
        if y > n - i:
            return 0
        if i == n:
            return 1 if y == 0 else 0
        total = b[y] * rec(i + 1, y) + rec(i + 1, y + 1)
        if y > 0:
            total = total + lam[y - 1] * rec(i + 1, y - 1)
        return total

    return rec(0, 0)


def random_spec(rng, depth):
    b = [rng.randrange(-2, 3) for _ in range(depth + 1)]
    lam = [rng.randrange(1, 4) for _ in range(depth)]
    return O.ThreeTermSpec(b, lam)


CAT = O.ThreeTermSpec.constant(0, 1, 8)
MOT = O.ThreeTermSpec.constant(1, 1, 8)


def test_spec_validation():
    with pytest.raises(ValueError):
        O.ThreeTermSpec([1, 2], [0])
    with pytest.raises(ValueError):
        O.ThreeTermSpec([1, 2], [1, 1])
    with pytest.raises(ValueError):
        O.MomentSequence([2, 1])
    with pytest.raises(ValueError):
        O.MomentSequence([])
    assert O.ThreeTermSpec.constant(1, 1, 3).depth == 3
    assert CAT == O.ThreeTermSpec([0] * 9, [1] * 8)
    assert CAT != MOT


def test_poly_from_recurrence_examples():
    assert O.poly_from_recurrence(CAT, 0) == Poly([1])
    assert O.poly_from_recurrence(CAT, 1) == Poly([0, 1])
    assert O.poly_from_recurrence(CAT, 2) == Poly([-1, 0, 1])
    assert O.poly_from_recurrence(CAT, 3) == Poly([0, -2, 0, 1])
    assert O.poly_from_recurrence(MOT, 2) == Poly([0, -2, 1])
    with pytest.raises(ValueError):
        O.poly_from_recurrence(CAT, -1)
    with pytest.raises(ValueError):
        O.poly_from_recurrence(O.ThreeTermSpec.constant(0, 1, 2), 5)


def test_poly_recurrence_identity():
    # x p_n == p_{n+1} + b_n p_n + lam_n p_{n-1}, as exact polynomials
    rng = random.Random(4021)
    x = Poly([0, 1])
    for _ in range(6):
        s = random_spec(rng, 7)
        ps = [O.poly_from_recurrence(s, n) for n in range(8)]
        for n in range(1, 7):
            assert ps[n].degree == n and ps[n].coeff(n) == 1
            lhs = x * ps[n]
            rhs = ps[n + 1] + s.b[n] * ps[n] + s.lam[n - 1] * ps[n - 1]
            assert lhs == rhs


def test_chebyshev_examples():
    assert O.chebyshev_u(0) == Poly([1])
    assert O.chebyshev_u(1) == Poly([0, 2])
    assert O.chebyshev_u(2) == Poly([-1, 0, 4])
    with pytest.raises(ValueError):
        O.chebyshev_u(-1)


def test_chebyshev_recurrence():
    two_x = Poly([0, 2])
    for n in range(1, 11):
        lhs = two_x * O.chebyshev_u(n)
        rhs = O.chebyshev_u(n + 1) + O.chebyshev_u(n - 1)
        assert lhs == rhs


def test_chebyshev_rescales_catalan_family():
    # the b=0, lam=1 family evaluated at 2x gives the classical U_n,
    # i.e. the x^j coefficient gains a factor 2^j
    for n in range(9):
        small = O.poly_from_recurrence(CAT, n)
        big = O.chebyshev_u(n)
        for j in range(n + 1):
            assert big.coeff(j) == small.coeff(j) * 2 ** j


def test_moment_examples():
    assert O.moment(CAT, 0) == 1
    assert O.moment(CAT, 4) == 2
    for n in (1, 3, 5, 7):
        assert O.moment(CAT, n) == 0
        assert O.moment(O.ThreeTermSpec.constant(0, 5, 8), n) == 0
    for n in range(11):
        assert O.moment(MOT, n) == M.motzkin_number(n)
    with pytest.raises(ValueError):
        O.moment(CAT, -1)
    with pytest.raises(ValueError):
        O.moment(O.ThreeTermSpec.constant(1, 1, 2), 6)


def test_moment_matches_weighted_oracle():
    rng = random.Random(917)
    for _ in range(8):
        s = random_spec(rng, 4)
        for n in range(8):
            assert O.moment(s, n) == weighted_axis_oracle(n, s.b, s.lam)


def test_generalized_moment_examples():
    assert O.generalized_moment(CAT, 0, 1, 2) == 0
    assert O.generalized_moment(CAT, 0, 3, 0) == 0
    assert O.generalized_moment(CAT, 0, 2, 2) == 1
    assert O.generalized_moment(MOT, 2, 0, 0) == 2


def test_orthogonality():
    # L(p_k p_l) is zero off the diagonal and the lam product on it
    rng = random.Random(5318)
    for _ in range(5):
        s = random_spec(rng, 6)
        for k in range(6):
            for l in range(6):
                got = O.generalized_moment(s, 0, k, l)
                if k != l:
                    assert got == 0
                else:
                    want = 1
                    for v in s.lam[:k]:
                        want *= v
                    assert got == want


def test_generalized_moment_is_weighted_strip_count():
    # L(x^n p_k p_l) == lam_1...lam_l * (weighted paths k -> l in n steps)
    rng = random.Random(2204)
    for _ in range(4):
        s = random_spec(rng, 10)
        for k in range(5):
            for l in range(5):
                for n in range(6):
                    cap = max(k, l) + n
                    paths = M.strip_count_transfer(k, l, cap, n,
                                                   s.weighting(cap))
                    factor = 1
                    for v in s.lam[:l]:
                        factor *= v
                    assert O.generalized_moment(s, n, k, l) == factor * paths


def test_hankel_det_examples():
    cat_mu = O.MomentSequence.from_spec(CAT, 14)
    mot_mu = O.MomentSequence.from_spec(MOT, 14)
    assert O.hankel_det(cat_mu, 0) == 1
    for n in range(7):
        assert O.hankel_det(cat_mu, n) == 1
        assert O.hankel_det(mot_mu, n) == 1
    with pytest.raises(ValueError):
        O.hankel_det(cat_mu, 7)


def test_hankel_det_is_lam_product():
    rng = random.Random(6644)
    for _ in range(5):
        s = random_spec(rng, 5)
        mu = O.MomentSequence.from_spec(s, 11)
        for n in range(5):
            want = 1
            for i, v in enumerate(s.lam[:n]):
                want *= v ** (n - i)
            assert O.hankel_det(mu, n) == want


def test_recover_recurrence_round_trip():
    rng = random.Random(7103)
    for s in [CAT, MOT] + [random_spec(rng, 5) for _ in range(6)]:
        d = s.depth
        mu = O.MomentSequence.from_spec(s, 2 * d + 2)
        assert O.recover_recurrence(mu, d) == s


def test_recover_recurrence_flat_moments_fail():
    with pytest.raises(ValueError) as info:
        O.recover_recurrence([1] * 8, 3)
    assert "index 1" in str(info.value)
    with pytest.raises(ValueError):
        O.recover_recurrence([1, 2], 3)


def test_poly_from_moments():
    cat_mu = O.MomentSequence.from_spec(CAT, 12)
    mot_mu = O.MomentSequence.from_spec(MOT, 12)
    assert O.poly_from_moments(cat_mu, 0) == Poly([1])
    assert O.poly_from_moments(cat_mu, 2) == Poly([-1, 0, 1])
    assert O.poly_from_moments(mot_mu, 2) == Poly([0, -2, 1])
    rng = random.Random(880)
    for _ in range(4):
        s = random_spec(rng, 5)
        mu = O.MomentSequence.from_spec(s, 12)
        for n in range(6):
            assert O.poly_from_moments(mu, n) == \
                O.poly_from_recurrence(s, n).to_frac()
    with pytest.raises(ValueError):
        O.poly_from_moments([1, 1, 1, 1], 2)


def test_moment_jfraction_examples():
    jf = O.moment_jfraction(CAT, 10)
    catalan = [1, 1, 2, 5, 14, 42]
    for n in range(11):
        assert jf.coeff(n) == (catalan[n // 2] if n % 2 == 0 else 0)
    jf = O.moment_jfraction(MOT, 10)
    for n in range(11):
        assert jf.coeff(n) == M.motzkin_number(n)
    assert O.moment_jfraction(CAT, 0).coeff(0) == 1


def test_moment_jfraction_matches_moment_symbolically():
    b = [MPoly.var("b%d" % i) for i in range(7)]
    lam = [MPoly.var("l%d" % i) for i in range(1, 7)]
    s = O.ThreeTermSpec(b, lam)
    jf = O.moment_jfraction(s, 12)
    for n in range(13):
        assert jf.coeff(n) == O.moment(s, n)


def test_fraction_spec_round_trip():
    s = O.ThreeTermSpec([Fraction(1, 2)] * 5, [Fraction(3, 2)] * 4)
    mu = O.MomentSequence.from_spec(s, 10)
    assert O.recover_recurrence(mu, 4) == s
    assert O.hankel_det(mu, 3) == Fraction(3, 2) ** 6
    assert O.generalized_moment(s, 0, 0, 2) == 0
