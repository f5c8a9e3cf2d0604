"""
Principal specializations of Macdonald's Frobenius-twisted Schur functions.

Everything is specialized at (1, t, ..., t^k), i.e. k + 1 variables, and
functions take the top power k rather than the variable count.  Three
routes are provided for the same object:

* the bialternant product (non-skew shapes only),
* the Jacobi-Trudi determinant in the single-row functions, and its dual
  in the single-column functions,
* the sum over reverse column-strict tableaux of product-form weights.

Negative Frobenius powers in the skew determinant give fractional
exponents of t.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boxes import BoxedPartition, check_partition, conjugate, partition_weight, strip_zeros
from .exprcore import WeightExpr, we_to_poly, weight_product
from .qtnum import _check_q, qt_binomial, gaussian_binomial
from .tpoly import TPoly, det_leibniz, diff_quotient


@dataclass(frozen=True)
class SkewShape:
    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer = strip_zeros(check_partition(self.outer))
        inner = strip_zeros(check_partition(self.inner))
        if len(inner) > len(outer) or any(m > l for l, m in zip(outer, inner)):
            raise ValueError(f"{inner} does not fit inside {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner + (0,) * (len(outer) - len(inner)))

    @classmethod
    def parse(cls, text):
        """'2,2/1,0' or '2,1'."""
        outer, _, inner = text.partition("/")

        def parts(s):
            return tuple(int(x) for x in s.replace(" ", "").split(",") if x)

        return cls(parts(outer), parts(inner))

    @property
    def length(self):
        return len(self.outer)

    def row_lengths(self):
        return tuple(l - m for l, m in zip(self.outer, self.inner))

    def cells(self):
        for i, (l, m) in enumerate(zip(self.outer, self.inner), start=1):
            for j in range(m + 1, l + 1):
                yield i, j

    def conjugate(self):
        outer = conjugate(self.outer)
        inner = conjugate(self.inner)
        return SkewShape(outer, inner)

    def __str__(self):
        body = ",".join(map(str, self.outer))
        if any(self.inner):
            body += "/" + ",".join(map(str, self.inner))
        return body


def as_shape(shape):
    if isinstance(shape, SkewShape):
        return shape
    if isinstance(shape, str):
        return SkewShape.parse(shape)
    return SkewShape(tuple(shape))


# -- product and determinant routes --

def bialternant_spec(parts, n, q):
    """Bialternant quotient at (1, t, ..., t^n), as the Vandermonde product.

    Zero when the partition has more than n + 1 nonzero parts.
    """
    _check_q(q)
    parts = strip_zeros(check_partition(parts))
    size = n + 1
    if len(parts) > size:
        return TPoly.zero()
    lam = parts + (0,) * (size - len(parts))
    num, den = [], []
    for j in range(size):
        for i in range(j):
            # lam is 0-based here, so lambda_{N-j} is lam[size - j - 1]
            num.append((q**(lam[size - j - 1] + j), q**(lam[size - i - 1] + i)))
            den.append((q**j, q**i))
    return diff_quotient(num, den)


def hz(r, k, q):
    """Single-row function HZ_r at (1, t, ..., t^k)."""
    if r < 0:
        return TPoly.zero()
    return qt_binomial(r + k, k, q)


def ez(r, n, q):
    """Single-column function EZ_r at (1, t, ..., t^(n-1)), i.e. n variables."""
    if r < 0 or r > n:
        return TPoly.zero()
    num = [(q**n, q**(n - r + i - 1)) for i in range(1, r + 1)]
    den = [(q**(n - r + i), q**(n - r)) for i in range(1, r + 1)]
    return qt_binomial(n, n - r, q) * diff_quotient(num, den)


def jacobi_trudi_matrix(shape, k, q):
    shape = as_shape(shape)
    lam, mu = shape.outer, shape.inner
    size = shape.length
    return [[hz(lam[i] - mu[j] - i + j, k, q).frobenius(q, mu[j] - j)
             for j in range(size)] for i in range(size)]


def jacobi_trudi_spec(shape, k, q, max_size=8):
    """det(phi^(mu_j - (j-1)) HZ_(lambda_i - mu_j - i + j)) at (1, t, ..., t^k)."""
    _check_q(q)
    shape = as_shape(shape)
    if shape.length == 0:
        return TPoly.one()
    return det_leibniz(jacobi_trudi_matrix(shape, k, q), max_size)


def dual_jacobi_trudi_spec(shape, k, q, max_size=8):
    """det(phi^(-mu'_j + j - 1) EZ_(lambda'_i - mu'_j - i + j)) at (1, t, ..., t^k)."""
    _check_q(q)
    conj = as_shape(shape).conjugate()
    lam, mu = conj.outer, conj.inner
    size = conj.length
    if size == 0:
        return TPoly.one()
    matrix = [[ez(lam[i] - mu[j] - i + j, k + 1, q).frobenius(q, -mu[j] + j)
               for j in range(size)] for i in range(size)]
    return det_leibniz(matrix, max_size)


# -- tableaux --

@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple  # entries of each row, left to right

    def entries(self):
        for row in self.rows:
            yield from row

    def total(self):
        return sum(self.entries())


def _weak_decreasing_rows(length, top, bounds):
    """Weakly decreasing sequences of the given length with row[c] <= min(top, bounds[c])."""
    def rec(pos, cap):
        if pos == length:
            yield ()
            return
        hi = min(cap, bounds[pos])
        for v in range(hi, -1, -1):
            for rest in rec(pos + 1, v):
                yield (v,) + rest

    yield from rec(0, top)


def enumerate_tableaux(shape, k):
    """Reverse column-strict fillings with entries 0..k: rows weakly decrease, columns strictly decrease."""
    shape = as_shape(shape)
    if k < 0:
        raise ValueError("largest entry must be nonnegative")
    lam, mu = shape.outer, shape.inner

    def rec(i, prev):
        if i == shape.length:
            yield ()
            return
        bounds = []
        for j in range(mu[i] + 1, lam[i] + 1):
            above = prev.get(j)
            bounds.append(k if above is None else above - 1)
        if any(b < 0 for b in bounds):
            return
        for row in _weak_decreasing_rows(lam[i] - mu[i], k, bounds):
            cols = {mu[i] + 1 + c: v for c, v in enumerate(row)}
            for rest in rec(i + 1, cols):
                yield (row,) + rest

    for rows in rec(0, {}):
        yield Tableau(shape, rows)


def row_partition(row, k):
    """nu(P) for a single-row filling: the conjugate of the row, in a box of height k."""
    nu = conjugate(tuple(row))
    return BoxedPartition(nu, k)


def tableau_weight(T, k):
    """prod_i phi^(mu_i - (i-1)) wt(nu(P_i), k)."""
    factors = []
    for i, (row, m) in enumerate(zip(T.rows, T.shape.inner)):
        factors.append(partition_weight(row_partition(row, k)).frobenius(m - i))
    return weight_product(factors)


def tableau_sum(shape, k, q):
    _check_q(q)
    total = TPoly.zero()
    for T in enumerate_tableaux(shape, k):
        total = total + we_to_poly(tableau_weight(T, k), q)
    return total


def classical_schur_spec(shape, k):
    """Sum of t^(entry total) over reverse column-strict tableaux with entries 0..k."""
    counts = {}
    for T in enumerate_tableaux(shape, k):
        s = T.total()
        counts[s] = counts.get(s, 0) + 1
    return TPoly(counts)


def classical_jacobi_trudi(shape, k):
    """det(h_(lambda_i - mu_j - i + j)(1, t, ..., t^k)) with h_r = Gaussian [r+k, k]."""
    shape = as_shape(shape)
    lam, mu = shape.outer, shape.inner
    size = shape.length
    if size == 0:
        return TPoly.one()

    def h(r):
        return gaussian_binomial(r + k, k) if r >= 0 else TPoly.zero()

    return det_leibniz([[h(lam[i] - mu[j] - i + j) for j in range(size)] for i in range(size)])


# -- hooks --

def hook_product(m, k, n, q):
    """qbin(m+n, n-k) * phi^(n-k) prod_i (t^(q^(m+k)) - t^(q^i)) / (t^(q^i) - t)."""
    num = [(q**(m + k), q**i) for i in range(1, k + 1)]
    den = [(q**i, 1) for i in range(1, k + 1)]
    return qt_binomial(m + n, n - k, q) * diff_quotient(num, den).frobenius(q, n - k)


def hook_shape(m, k):
    return (m,) + (1,) * k


def hook_sides(m, k, n, q):
    """Pairs (lhs, rhs) for the product formula, the neighbouring-hook sum rule and the ribbon coincidence."""
    from .permstat import ribbon_qt

    _check_q(q)
    if m < 1 or not 0 <= k <= n:
        raise ValueError(f"need m >= 1 and 0 <= k <= n, got m={m}, k={k}, n={n}")
    lhs = bialternant_spec(hook_shape(m, k), n, q)
    pairs = [(lhs, hook_product(m, k, n, q))]
    if k >= 1:
        pair = lhs + bialternant_spec(hook_shape(m + 1, k - 1), n - 1, q)
        pairs.append((pair, hz(m, n, q) * ez(k, n, q)))
    ribbon = ribbon_qt((1,) * k + (m,), q).frobenius(q, n - k)
    pairs.append((lhs, qt_binomial(m + n, n - k, q) * ribbon))
    return pairs


def hook_checks(m, k, n, q):
    """Product formula, the sum rule for neighbouring hooks, and the ribbon coincidence."""
    return all(a == b for a, b in hook_sides(m, k, n, q))
