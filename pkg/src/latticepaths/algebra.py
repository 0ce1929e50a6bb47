"""Exact arithmetic substrate.

Arbitrary-precision integers (plain int), rationals (fractions.Fraction),
dense univariate polynomials, truncated power series, square matrices and
upper-triangular arrays with exact determinants and Pfaffians, and the
binomial-coefficient conventions used throughout the package.

Everything here is exact.  Floats never enter; the only numeric types are
int, Fraction, and polynomial/series containers over them.  A small
multivariate polynomial class (MPoly) is provided so that identities can be
checked with fully symbolic weights, not just at sampled integer values.
"""

import math
from fractions import Fraction

Integer = int
Rational = Fraction


class NumericGuardError(ArithmeticError):
    """A floating-point evaluation failed its round-to-integer guard."""


def binom(n, k):
    """Binomial coefficient, zero unless 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def gen_binom(r, k):
    """Generalized binomial r(r-1)...(r-k+1)/k! for rational r, integer k >= 0."""
    if k < 0:
        raise ValueError("gen_binom needs k >= 0, got k=%r" % (k,))
    num = Fraction(1)
    r = Fraction(r)
    for i in range(k):
        num *= r - i
    return num / math.factorial(k)


def inv_factorial(m):
    """1/m! as a Fraction, with the convention 1/m! := 0 for m < 0."""
    if m < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(m))


def multinomial(parts):
    """Multinomial coefficient (sum parts)! / prod(part!).  Zero if any part < 0."""
    if any(p < 0 for p in parts):
        return 0
    total = sum(parts)
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


# ---------------------------------------------------------------------------
# dense univariate polynomials

_RING_INT = "int"
_RING_FRAC = "frac"


def _infer_ring(coeffs):
    for c in coeffs:
        if isinstance(c, Fraction):
            return _RING_FRAC
    return _RING_INT


class Poly:
    """Dense univariate polynomial over int or Fraction coefficients.

    Coefficients are indexed by exponent; trailing zeros are trimmed, so the
    zero polynomial has an empty coefficient tuple and degree -1.  The
    coefficient ring is fixed at construction; combining polynomials over
    different rings raises instead of coercing.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs=(), ring=None):
        coeffs = list(coeffs)
        if ring is None:
            ring = _infer_ring(coeffs)
        if ring == _RING_FRAC:
            coeffs = [Fraction(c) for c in coeffs]
        elif ring == _RING_INT:
            for c in coeffs:
                if isinstance(c, Fraction):
                    raise TypeError("Fraction coefficient in integer-ring Poly")
        else:
            raise ValueError("unknown ring %r" % (ring,))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0) if self.ring == _RING_FRAC else 0

    def is_zero(self):
        return not self.coeffs

    def _coerce(self, other):
        # scalars lift into this poly's ring; int scalars are fine in both
        if isinstance(other, Poly):
            if other.ring != self.ring and not (other.is_zero() or self.is_zero()):
                raise TypeError("mixed coefficient rings (%s vs %s)" % (self.ring, other.ring))
            return other
        if isinstance(other, Fraction):
            if self.ring == _RING_INT and other.denominator != 1:
                raise TypeError("Fraction scalar into integer-ring Poly")
            return Poly([other], ring=self.ring)
        if isinstance(other, int):
            return Poly([other], ring=self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring if not self.is_zero() else other.ring
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.coeff(i) + other.coeff(i) for i in range(n)]
        return Poly(out, ring=ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], ring=self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly([], ring=self.ring)
        ring = self.ring if self.coeffs else other.ring
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, ring=ring)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Poly")
        out = Poly([1], ring=self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return Poly([0] * k + list(self.coeffs), ring=self.ring)

    def exact_div(self, other):
        """Exact polynomial division; raises ValueError if not divisible."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlc = Fraction(other.coeffs[-1])
        dlen = len(other.coeffs)
        while len(rem) >= dlen:
            lead = rem[-1] / dlc
            pos = len(rem) - dlen
            quot[pos] = lead
            for i, c in enumerate(other.coeffs):
                rem[pos + i] -= lead * Fraction(c)
            while rem and rem[-1] == 0:
                rem.pop()
            if rem and len(rem) < dlen:
                break
        if rem:
            raise ValueError("polynomial division leaves a remainder")
        if self.ring == _RING_INT:
            if any(q.denominator != 1 for q in quot):
                raise ValueError("quotient not integral over the integer ring")
            quot = [int(q) for q in quot]
        return Poly(quot, ring=self.ring)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def to_frac(self):
        return Poly(self.coeffs, ring=_RING_FRAC)

    def __eq__(self, other):
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero()
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(tuple(Fraction(c) for c in self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("%s*x" % (c,))
            else:
                terms.append("%s*x^%d" % (c, i))
        return "Poly(%s)" % " + ".join(terms)


def poly_x(ring=_RING_INT):
    return Poly([0, 1], ring=ring)


_QBINOM_CACHE = {}


def qbinom(n, k):
    """Gaussian polynomial in q; zero Poly if k < 0 or k > n."""
    if k < 0 or k > n or n < 0:
        return Poly([])
    key = (n, k)
    if key in _QBINOM_CACHE:
        return _QBINOM_CACHE[key]
    if k == 0 or k == n:
        out = Poly([1])
    else:
        # Pascal-type recurrence keeps everything in integer coefficients
        out = qbinom(n - 1, k - 1) + qbinom(n - 1, k).shift(k)
    _QBINOM_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# multivariate polynomials for symbolic-weight checks

def _num(c):
    # keep integers as machine ints; Fraction arithmetic is far slower
    if isinstance(c, int):
        return c
    c = Fraction(c)
    if c.denominator == 1:
        return int(c)
    return c


class MPoly:
    """Sparse multivariate polynomial over exact rational coefficients.

    Monomials are (variable name, exponent) pairs stored as sorted tuples.
    Supports +, -, *, ** and substitution; enough to state weight
    identities symbolically.  Integer coefficients stay plain ints (int
    and Fraction hash and compare consistently, so representations mix
    freely).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict mapping monomial tuple -> coefficient
        clean = {}
        for mono, c in (terms or {}).items():
            c = _num(c)
            if c != 0:
                clean[tuple(sorted((v, e) for v, e in mono if e))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @staticmethod
    def var(name):
        return MPoly({((name, 1),): 1})

    @staticmethod
    def const(c):
        return MPoly({(): c})

    @staticmethod
    def _lift(x):
        if isinstance(x, MPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MPoly.const(x)
        return None

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = MPoly._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = MPoly._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = MPoly._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                d = dict(m1)
                for v, e in m2:
                    d[v] = d.get(v, 0) + e
                mono = tuple(sorted(d.items()))
                out[mono] = out.get(mono, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of an MPoly")
        out = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def subs(self, values):
        """Substitute variables from a name -> value dict; returns a scalar
        if everything is substituted, else an MPoly."""
        out = None
        for mono, c in self.terms.items():
            term_val = c
            left = []
            for v, e in mono:
                if v in values:
                    term_val = term_val * values[v] ** e
                else:
                    left.append((v, e))
            piece = MPoly({tuple(left): 1}) * term_val if left else term_val
            out = piece if out is None else out + piece
        if out is None:
            return Fraction(0)
        if isinstance(out, MPoly) and not any(m for m in out.terms):
            return out.terms.get((), Fraction(0))
        return out

    def constant(self):
        return self.terms.get((), Fraction(0))

    def __eq__(self, other):
        other = MPoly._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for mono, c in sorted(self.terms.items()):
            vs = "*".join("%s^%d" % (v, e) if e > 1 else v for v, e in mono)
            bits.append("%s*%s" % (c, vs) if vs else str(c))
        return "MPoly(%s)" % " + ".join(bits)


# ---------------------------------------------------------------------------
# truncated power series

def _invert_unit(c):
    """Multiplicative inverse of a coefficient-ring element, or None."""
    if isinstance(c, int):
        if c in (1, -1):
            return c
        return None
    if isinstance(c, Fraction):
        if c != 0:
            return 1 / c
        return None
    if isinstance(c, Poly):
        if c.degree == 0:
            inner = _invert_unit(c.coeffs[0])
            if inner is not None:
                return Poly([inner], ring=c.ring)
        return None
    if isinstance(c, MPoly):
        # constants invert over the rationals; 1 / int would drift to float
        if len(c.terms) == 1 and () in c.terms:
            val = Fraction(c.terms[()])
            if val != 0:
                return MPoly.const(1 / val)
        return None
    return None


class TruncSeries:
    """Power series truncated at a fixed order N (coefficients 0..N kept).

    Coefficients live in any exact ring with +, -, * (int, Fraction, Poly,
    MPoly).  Binary operations on mismatched orders truncate to the minimum.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @staticmethod
    def zero(order):
        return TruncSeries([0], order)

    @staticmethod
    def one(order):
        return TruncSeries([1], order)

    @staticmethod
    def z(order):
        return TruncSeries([0, 1], order)

    def coeff(self, k):
        if k > self.order:
            raise IndexError("coefficient %d beyond truncation order %d" % (k, self.order))
        return self.coeffs[k]

    def truncate(self, order):
        return TruncSeries(self.coeffs[: order + 1], order)

    def _lift(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction, Poly, MPoly)):
            return TruncSeries([other], self.order)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by z^k; keeps the truncation order."""
        return TruncSeries([0] * k + list(self.coeffs), self.order)

    def reciprocal(self):
        c0_inv = _invert_unit(self.coeffs[0])
        if c0_inv is None:
            raise ZeroDivisionError(
                "series constant term %r is not invertible" % (self.coeffs[0],))
        out = [c0_inv]
        for k in range(1, self.order + 1):
            acc = self.coeffs[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-c0_inv * acc)
        return TruncSeries(out, self.order)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def derivative(self):
        if self.order == 0:
            return TruncSeries([0], 0)
        return TruncSeries(
            [self.coeffs[k] * k for k in range(1, self.order + 1)], self.order - 1)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "TruncSeries(%s; O(z^%d))" % (list(self.coeffs), self.order + 1)


# ---------------------------------------------------------------------------
# matrices, determinants, Pfaffians

class SquareMatrix:
    """Immutable n x n matrix of ring elements."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = [tuple(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def mul(self, other):
        n = self.n
        if other.n != n:
            raise ValueError("dimension mismatch")
        return SquareMatrix(
            [[sum_prod(self.rows[i], [other.rows[k][j] for k in range(n)])
              for j in range(n)] for i in range(n)])

    def __repr__(self):
        return "SquareMatrix(%r)" % (list(map(list, self.rows)),)


def sum_prod(xs, ys):
    acc = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        acc = acc + x * y
    return acc


def _rows_of(M):
    if isinstance(M, SquareMatrix):
        return [list(r) for r in M.rows]
    rows = [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return rows


def _det_bareiss(rows):
    # fraction-free elimination; exact over int, and over Fraction the
    # divisions are exact anyway
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    q, r = divmod(num, prev)
                    assert r == 0, "Bareiss division must be exact"
                    rows[i][j] = q
                else:
                    rows[i][j] = num / prev
            rows[i][k] = 0
        prev = rows[k][k]
    out = rows[n - 1][n - 1]
    return out if sign == 1 else -out


def _det_expansion(rows):
    # Laplace expansion memoized over column subsets; used for symbolic
    # entries where division is unavailable
    n = len(rows)
    cache = {}

    def minor(row, cols):
        if row == n:
            return 1
        key = cols
        if key in cache:
            return cache[key]
        acc = None
        sign = 1
        for idx, c in enumerate(cols):
            e = rows[row][c]
            if not (isinstance(e, (int, Fraction)) and e == 0):
                rest = cols[:idx] + cols[idx + 1:]
                term = e * minor(row + 1, rest)
                if sign < 0:
                    term = -term
                acc = term if acc is None else acc + term
            sign = -sign
        if acc is None:
            acc = 0
        cache[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def det(M):
    """Exact determinant of a SquareMatrix or list-of-lists."""
    rows = _rows_of(M)
    if not rows:
        return 1
    flat = [e for r in rows for e in r]
    if all(isinstance(e, (int, Fraction)) for e in flat):
        return _det_bareiss(rows)
    return _det_expansion(rows)


class UpperTriArray:
    """Upper-triangular array a[i][j] for 0 <= i < j < dim (Pfaffian input)."""

    __slots__ = ("dim", "_entries")

    def __init__(self, dim, entries):
        # entries: dict {(i, j): value} with i < j, or callable (i, j) -> value
        data = {}
        for i in range(dim):
            for j in range(i + 1, dim):
                if callable(entries):
                    data[(i, j)] = entries(i, j)
                else:
                    data[(i, j)] = entries.get((i, j), 0)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("UpperTriArray is immutable")

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return 0
        if i < j:
            return self._entries[(i, j)]
        return -self._entries[(j, i)]

    def skew_matrix(self):
        """Full skew-symmetric completion as a SquareMatrix."""
        n = self.dim
        return SquareMatrix([[self[i, j] for j in range(n)] for i in range(n)])


def pfaffian(A):
    """Pfaffian of an UpperTriArray of even dimension.

    Recursive first-row expansion (memoized over index subsets) for
    dimension <= 12; fraction-free skew elimination beyond that.
    """
    if not isinstance(A, UpperTriArray):
        raise TypeError("pfaffian expects an UpperTriArray")
    n = A.dim
    if n % 2 != 0:
        raise ValueError("Pfaffian needs even dimension, got %d" % n)
    if n == 0:
        return 1
    if n <= 12:
        cache = {}

        def pf(indices):
            if not indices:
                return 1
            if indices in cache:
                return cache[indices]
            i = indices[0]
            acc = None
            sign = 1
            for pos in range(1, len(indices)):
                j = indices[pos]
                rest = indices[1:pos] + indices[pos + 1:]
                term = A[i, j] * pf(rest)
                if sign < 0:
                    term = -term
                acc = term if acc is None else acc + term
                sign = -sign
            cache[indices] = acc
            return acc

        return pf(tuple(range(n)))
    return _pfaffian_elimination(A)


def _pfaffian_elimination(A):
    # Gaussian-style skew elimination over Fractions; numeric entries only
    n = A.dim
    m = [[Fraction(A[i, j]) for j in range(n)] for i in range(n)]
    sign = 1
    out = Fraction(1)
    for k in range(0, n, 2):
        pivot_row = None
        for r in range(k + 1, n):
            if m[k][r] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return 0
        if pivot_row != k + 1:
            # swap rows and columns to bring the pivot next to k
            for row in m:
                row[k + 1], row[pivot_row] = row[pivot_row], row[k + 1]
            m[k + 1], m[pivot_row] = m[pivot_row], m[k + 1]
            sign = -sign
        piv = m[k][k + 1]
        out *= piv
        # Schur complement: D'[i][j] = D[i][j] + (b2[i] b1[j] - b1[i] b2[j]) / piv
        b1 = [m[k][i] for i in range(n)]
        b2 = [m[k + 1][i] for i in range(n)]
        for i in range(k + 2, n):
            for j in range(k + 2, n):
                m[i][j] += (b2[i] * b1[j] - b1[i] * b2[j]) / piv
        for i in range(k + 2, n):
            m[k][i] = m[k + 1][i] = Fraction(0)
            m[i][k] = m[i][k + 1] = Fraction(0)
    out = out * sign
    if out.denominator == 1:
        return int(out)
    return out
