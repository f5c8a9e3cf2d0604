"""
Subspaces of F_p^n in row-reduced echelon form, the statistic s(U), and the
Dickson product over the dual space.

Echelon convention: pivot columns strictly decrease down the rows, so row 1
has the rightmost pivot.  Columns are 1-based.  Each row's parametrization
entries sit in the non-pivot columns strictly left of its pivot; these
positions match the cells of a partition in the k x (n-k) box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product as cartesian

from .qtnum import qt_binomial
from .tpoly import FpPoly2, TPoly, diff_quotient


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"only prime fields are supported, got p={p!r}")


@dataclass(frozen=True)
class EchelonMatrix:
    p: int
    n: int
    k: int
    pivots: tuple  # pivot column of each row, strictly decreasing
    free_entries: dict = field(default_factory=dict)  # (row, col) -> residue

    def __post_init__(self):
        if len(self.pivots) != self.k:
            raise ValueError(f"need {self.k} pivots, got {self.pivots}")
        if any(a <= b for a, b in zip(self.pivots, self.pivots[1:])):
            raise ValueError(f"pivot columns must strictly decrease: {self.pivots}")
        if any(not 1 <= c <= self.n for c in self.pivots):
            raise ValueError(f"pivot columns must lie in 1..{self.n}")
        allowed = set(parametrization_positions(self.pivots, self.n))
        if set(self.free_entries) != allowed:
            raise ValueError("free entries must fill exactly the parametrization positions")
        if any(not 0 <= a < self.p for a in self.free_entries.values()):
            raise ValueError(f"entries must be residues mod {self.p}")

    def rows(self):
        """The full k x n matrix as lists of residues."""
        out = [[0] * self.n for _ in range(self.k)]
        for i, c in enumerate(self.pivots, start=1):
            out[i - 1][c - 1] = 1
        for (i, j), a in self.free_entries.items():
            out[i - 1][j - 1] = a
        return out

    def shape(self):
        return subspace_partition(self.pivots, self.n)

    def free_vector(self):
        return tuple(self.free_entries[pos] for pos in sorted(self.free_entries))

    def __hash__(self):
        return hash((self.p, self.n, self.k, self.pivots, self.free_vector()))


def parametrization_positions(pivots, n):
    """(row, col) positions of free entries, in row-major order."""
    pivot_set = set(pivots)
    return [(i, j) for i, c in enumerate(pivots, start=1)
            for j in range(1, c) if j not in pivot_set]


def subspace_partition(pivots, n):
    """lambda_i = number of non-pivot columns strictly left of row i's pivot."""
    pivot_set = set(pivots)
    return tuple(sum(1 for j in range(1, c) if j not in pivot_set) for c in pivots)


def pivot_sets(n, k):
    """k-subsets of 1..n in colex order, each returned as a decreasing tuple."""
    subsets = sorted(combinations(range(1, n + 1), k), key=lambda s: tuple(reversed(s)))
    return [tuple(reversed(s)) for s in subsets]


def enumerate_subspaces(n, k, p):
    """Every k-dimensional subspace of F_p^n exactly once."""
    _check_prime(p)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    for pivots in pivot_sets(n, k):
        positions = parametrization_positions(pivots, n)
        # odometer: the last position varies fastest
        for values in cartesian(range(p), repeat=len(positions)):
            yield EchelonMatrix(p, n, k, pivots, dict(zip(positions, values)))


def subspace_distance(U, i, j):
    left = sum(1 for c in U.pivots if c < j)
    return U.k - i + j - left - 1


def lowest_in_column(U):
    """Parametrization positions that are the lowest free entry of their column."""
    lowest = {}
    for i, j in U.free_entries:
        lowest[j] = max(lowest.get(j, 0), i)
    return {(i, j) for j, i in lowest.items()}


def subspace_statistic(U, phi0=None, phi1=None):
    """s(U); phi0 maps residues to 0..p-1 and phi1 to 1..p (defaults a and a+1)."""
    phi0 = phi0 or (lambda a: a)
    phi1 = phi1 or (lambda a: a + 1)
    q = U.p
    bottoms = lowest_in_column(U)
    total = 0
    for (i, j), a in U.free_entries.items():
        d = subspace_distance(U, i, j)
        val = phi1(a) if (i, j) in bottoms else phi0(a)
        total += val * (q**(i + d) - q**d)
    return total


def subspace_sum(n, k, p, phi0=None, phi1=None):
    counts = {}
    for U in enumerate_subspaces(n, k, p):
        s = subspace_statistic(U, phi0, phi1)
        counts[s] = counts.get(s, 0) + 1
    return TPoly(counts)


def subspace_sums_by_shape(n, k, p):
    """Generating function of s(U) grouped by the partition lambda(U)."""
    out = {}
    for U in enumerate_subspaces(n, k, p):
        lam = U.shape()
        out[lam] = out.get(lam, TPoly.zero()) + TPoly.monomial(subspace_statistic(U))
    return out


CSV_HEADER = ("pivots", "free", "lambda", "s")


def csv_row(U):
    """Row for CSV dumps: space-separated pivot set, free vector and lambda, then s(U)."""
    def join(xs):
        return " ".join(str(x) for x in xs)
    return (join(U.pivots), join(U.free_vector()), join(U.shape()), str(subspace_statistic(U)))


# -- Dickson product --

DICKSON_MAX_FACTORS = 729


def dickson_product(n, p, max_factors=DICKSON_MAX_FACTORS):
    """prod over all functionals c of (y + sum_i c_i t^(i-1)), over F_p, zero functional included."""
    _check_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if p**n > max_factors:
        raise OverflowError(f"{p}^{n} linear factors exceeds the limit of {max_factors}")
    out = FpPoly2(p, {(0, 0): 1})
    for c in cartesian(range(p), repeat=n):
        factor = {(1, 0): 1}
        for i, ci in enumerate(c):
            if ci:
                factor[(0, i)] = ci
        out = out * FpPoly2(p, factor)
    return out


def dickson_coefficient_formula(n, s, p, literal=False):
    """Predicted y^(p^s) coefficient of the Dickson product, reduced mod p.

    The closed form qbin(n, s) * prod_j (t^(p^n) - t^(p^(n-j))) / (t^(p^(s+j)) - t^(p^s))
    is the sign-free specialization; the product itself carries (-1)^(n-s),
    which only disappears in characteristic 2.  ``literal=True`` drops the sign.
    """
    num = [(p**n, p**(n - j)) for j in range(1, n - s + 1)]
    den = [(p**(s + j), p**s) for j in range(1, n - s + 1)]
    exact = qt_binomial(n, s, p) * diff_quotient(num, den)
    if not literal and (n - s) % 2:
        exact = -exact
    return exact.mod(p)


def dickson_identity_check(n, p, literal=False):
    prod = dickson_product(n, p)
    if set(prod.y_degrees()) - {p**s for s in range(n + 1)}:
        return False
    return all(prod.y_coefficient(p**s) == dickson_coefficient_formula(n, s, p, literal)
               for s in range(n + 1))
