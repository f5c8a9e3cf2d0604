"""
Partitions in a k x (n-k) box, their cell weights, and q-compatible
multiplicity vectors.

Cells are (row, column) pairs, row 1 at the top.  A cell (i, j) in a box of
height k carries the exponent

    e_k(i, j) = q^(i + d) - q^d,   d = (j - i) + k - 1,

and contributes [q]_{t^e}, times t^e when it is the lowest cell of its
column.  Summing these weights over the box gives the (q,t)-binomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

from .exprcore import QExp, WeightExpr, we_limit_q1, we_limit_t1, we_to_poly
from .qtnum import _check_q, factorial_quotient_weight
from .tpoly import TPoly


def check_partition(parts):
    parts = tuple(parts)
    if any(not isinstance(p, int) or p < 0 for p in parts):
        raise ValueError(f"partition parts must be nonnegative integers: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def strip_zeros(parts):
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(parts):
    parts = strip_zeros(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


@dataclass(frozen=True)
class BoxedPartition:
    """A partition with at most ``k`` parts, each at most ``width``."""

    parts: tuple
    k: int
    width: int | None = None

    def __post_init__(self):
        parts = check_partition(self.parts)
        if self.k < 0:
            raise ValueError("box height must be nonnegative")
        if len(strip_zeros(parts)) > self.k:
            raise ValueError(f"{parts} has more than {self.k} nonzero parts")
        if self.width is not None and parts and parts[0] > self.width:
            raise ValueError(f"{parts} does not fit in width {self.width}")
        object.__setattr__(self, "parts", strip_zeros(parts) + (0,) * (self.k - len(strip_zeros(parts))))

    @property
    def size(self):
        return sum(self.parts)

    def cells(self):
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j


def cell_distance(i, j, k):
    return (j - i) + k - 1


def cell_exponent(i, j, k):
    """q^(i + d) - q^d for the cell in row i, column j of a height-k box."""
    if not 1 <= i <= k or j < 1:
        raise ValueError(f"cell ({i}, {j}) lies outside a box of height {k}")
    d = cell_distance(i, j, k)
    return QExp.diff(i + d, d)


def partition_weight(bp):
    """Product-form weight of a boxed partition."""
    cols = conjugate(bp.parts)
    prefactor = QExp()
    brackets = []
    for i, j in bp.cells():
        e = cell_exponent(i, j, bp.k)
        brackets.append(e)
        if cols[j - 1] == i:
            prefactor = prefactor + e
    return WeightExpr(prefactor, brackets, check=False)


def partition_weight_poly(parts, k, q):
    return we_to_poly(partition_weight(BoxedPartition(tuple(parts), k)), q)


def partition_weight_recurrence(bp):
    """The weight rebuilt by peeling a full first column or shrinking the box height."""
    parts, k = bp.parts, bp.k
    if k == 0 or not any(parts):
        return WeightExpr()
    if parts[k - 1] > 0:
        hat = BoxedPartition(tuple(p - 1 for p in parts), k)
        head = WeightExpr(QExp.diff(k, 0), (), check=False) * factorial_quotient_weight(k)
        return head * partition_weight_recurrence(hat).frobenius(1)
    return partition_weight_recurrence(BoxedPartition(parts[:-1], k - 1)).frobenius(1)


def partition_weight_recurrence_check(bp, qs=(2, 3)):
    direct = partition_weight(bp)
    rec = partition_weight_recurrence(bp)
    return direct == rec and all(we_to_poly(direct, q) == we_to_poly(rec, q) for q in qs)


def partitions_in_box(k, width):
    """Partitions with at most k parts each at most width, as k-tuples in lexicographic order."""
    if k < 0 or width < 0:
        raise ValueError("box dimensions must be nonnegative")

    def rec(rows, cap):
        if rows == 0:
            yield ()
            return
        for first in range(cap + 1):
            for rest in rec(rows - 1, first):
                yield (first,) + rest

    yield from rec(k, width)


def _check_nk(n, k):
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def box_sum(n, k, q):
    """Sum of partition weights over the k x (n-k) box."""
    _check_q(q)
    _check_nk(n, k)
    total = TPoly.zero()
    for parts in partitions_in_box(k, n - k):
        total = total + we_to_poly(partition_weight(BoxedPartition(parts, k)), q)
    return total


def limit_checks(parts, k, q):
    """Per-partition limits: t -> 1 gives q^|lambda|, q -> 1 gives t^|lambda|."""
    w = partition_weight(BoxedPartition(tuple(parts), k))
    size = sum(parts)
    return we_limit_t1(w, q) == q**size and we_limit_q1(w) == size


# -- q-compatible multiplicities --

def _padded(parts, k):
    parts = tuple(parts) + (0,) * (k - len(parts))
    return parts + (0,)


def delta(parts, k, i, q):
    """sum_{j = lambda_{i+1}}^{lambda_i - 1} q^j."""
    if not 1 <= i <= k:
        raise ValueError(f"row index {i} outside 1..{k}")
    lam = _padded(parts, k)
    return sum(q**j for j in range(lam[i], lam[i - 1]))


def part_size(k, i, q):
    """The part q^k - q^(k-i) whose multiplicity is tracked in row i."""
    return q**k - q**(k - i)


def collated_weight(parts, k, q):
    """prod_i t^(part_i * delta_i) [q^lambda_i]_{t^part_i}, row by row."""
    lam = _padded(parts, k)
    out = TPoly.one()
    for i in range(1, k + 1):
        e = part_size(k, i, q)
        out = out * TPoly.bracket(q**lam[i - 1], e).shift(e * delta(parts, k, i, q))
    return out


def compatible_sum(n, k, q):
    _check_q(q)
    _check_nk(n, k)
    total = TPoly.zero()
    for parts in partitions_in_box(k, n - k):
        total = total + collated_weight(parts, k, q)
    return total


def compatible_multiplicities(parts, k, q):
    """All multiplicity vectors m with delta_i <= m_i < delta_i + q^lambda_i."""
    lam = _padded(parts, k)
    ranges = [range(delta(parts, k, i, q), delta(parts, k, i, q) + q**lam[i - 1])
              for i in range(1, k + 1)]
    return cartesian(*ranges)


def multiplicity_degree(m, k, q):
    return sum(mi * part_size(k, i, q) for i, mi in enumerate(m, start=1))


def compatible_count_check(parts, k, q):
    return sum(1 for _ in compatible_multiplicities(parts, k, q)) == q**sum(parts)


def lambda_from_multiplicities(m, k, width, q):
    """The unique boxed partition compatible with m, or None.

    Working upward from lambda_{k+1} = 0, the intervals [delta(L), delta(L+1))
    for L = lambda_{i+1}, lambda_{i+1} + 1, ... tile the nonnegative integers,
    so each row length is forced.
    """
    if len(m) != k:
        raise ValueError(f"expected {k} multiplicities, got {len(m)}")
    lam = [0] * (k + 1)
    for i in range(k, 0, -1):
        below = lam[i]
        acc = 0
        length = below
        while acc + q**length <= m[i - 1]:
            acc += q**length
            length += 1
        # m_i must sit in [delta, delta + q^lambda_i)
        if not acc <= m[i - 1] < acc + q**length:
            return None
        lam[i - 1] = length
        if length > width:
            return None
    return tuple(lam[:k])
