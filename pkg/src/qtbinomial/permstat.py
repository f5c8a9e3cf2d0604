"""
Permutation weights, descent classes and (q,t)-ribbon numbers.

Permutations are one-line tuples (w(1), ..., w(n)) of 1..n, and products
compose right to left: (u*a)(i) = u(a(i)).  The weight of w is built
recursively from the factorization w = u_lambda * a * e * b, where k + 1 is
the position of the value 1, u_lambda is a minimum-length coset
representative for (k, n-k), a permutes the first k positions, e fixes
position k + 1 and b permutes the rest.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .exprcore import QExp, WeightExpr, we_to_poly
from .qtnum import (
    _check_q, check_composition, coarsenings, cut_set,
    partial_sums, qt_factorial, qt_multinomial, factorial_quotient_weight,
)
from .tpoly import TPoly, leibniz_terms


def check_permutation(w):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_permutation(text):
    return check_permutation(int(x) for x in text.replace(" ", "").split(",") if x)


def compose(u, a):
    """(u * a)(i) = u(a(i)); a may act on a prefix of u's domain."""
    return tuple(u[x - 1] for x in a) + u[len(a):]


def standardize(values):
    """Replace values by their ranks 1..m, keeping relative order."""
    rank = {v: i for i, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


def descent_set(w):
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def descent_composition(w):
    """Lengths of the maximal increasing runs of w."""
    w = check_permutation(w)
    if not w:
        return ()
    bounds = [0, *sorted(descent_set(w)), len(w)]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def inversions(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def major_index(w):
    return sum(descent_set(w))


def inverse(w):
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def inverse_major_index(w):
    """maj(w^-1); equidistributed with inversions on every descent class."""
    return major_index(inverse(w))


def u_lambda(parts, k, n):
    """Minimum-length representative of W^(k, n-k) for a partition in the k x (n-k) box.

    u(i) = lambda_{k+1-i} + i on 1..k; the remaining values follow in increasing order.
    """
    lam = tuple(parts) + (0,) * (k - len(parts))
    if len(lam) > k or any(p > n - k for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{parts} is not a partition in a {k} x {n - k} box")
    head = tuple(lam[k - i] + i for i in range(1, k + 1))
    rest = tuple(v for v in range(1, n + 1) if v not in set(head))
    return head + rest


def factor(w):
    """(k, lambda, a, b) with w = u_lambda * a * e * b."""
    w = check_permutation(w)
    n = len(w)
    k = w.index(1)
    head = sorted(w[:k])
    lam = tuple(head[k - i] - (k - i + 1) for i in range(1, k + 1))
    a = standardize(w[:k])
    b = standardize(w[k + 1:])
    return k, lam, a, b


def reassemble(k, lam, a, b, n):
    u = u_lambda(lam, k, n)
    # a acts on 1..k, e fixes k+1, b acts on k+2..n
    middle = tuple(a) + (k + 1,) + tuple(x + k + 1 for x in b)
    return compose(u, middle)


@lru_cache(maxsize=None)
def _perm_weight(w):
    n = len(w)
    if n <= 1:
        return WeightExpr()
    k, lam, a, b = factor(w)
    hat = tuple(p - 1 for p in lam)
    out = WeightExpr(QExp.diff(k, 0), (), check=False) * factorial_quotient_weight(k)
    out = out * _perm_weight(u_lambda(hat, k, n - 1)).frobenius(1)
    out = out * _perm_weight(a)
    out = out * _perm_weight(b).frobenius(k + 1)
    return out


def perm_weight(w):
    """Product-form weight of a permutation; it has exactly inversions(w) brackets."""
    return _perm_weight(check_permutation(w))


def perm_weight_poly(w, q):
    return we_to_poly(perm_weight(w), q)


def coset_reps(n, alpha):
    """Permutations increasing on every block of positions given by alpha."""
    alpha = check_composition(alpha, n)

    def rec(values, blocks):
        if not blocks:
            yield ()
            return
        size, rest = blocks[0], blocks[1:]
        for chosen in combinations(values, size):
            remaining = tuple(v for v in values if v not in chosen)
            for tail in rec(remaining, rest):
                yield chosen + tail

    yield from rec(tuple(range(1, n + 1)), alpha)


def descent_class(alpha):
    alpha = check_composition(alpha, positive=True)
    target = cut_set(alpha)
    for w in coset_reps(sum(alpha), alpha):
        if descent_set(w) == target:
            yield w


def multinomial_perm_sum(n, alpha, q):
    _check_q(q)
    total = TPoly.zero()
    for w in coset_reps(n, alpha):
        total = total + perm_weight_poly(w, q)
    return total


# -- ribbon numbers --

RIBBON_ROUTES = ("descent_sum", "inclusion_exclusion", "determinant")


def _ribbon_descent_sum(alpha, q):
    total = TPoly.zero()
    for w in descent_class(alpha):
        total = total + perm_weight_poly(w, q)
    return total


def _ribbon_inclusion_exclusion(alpha, q):
    n = sum(alpha)
    total = TPoly.zero()
    for beta in coarsenings(alpha):
        sign = -1 if (len(alpha) - len(beta)) % 2 else 1
        total = total + qt_multinomial(n, beta, q) * sign
    return total


def ribbon_determinant_terms(alpha, q):
    """Yield (tau, sign, term) for the nonzero terms of n! det(phi^sigma_{i-1} 1/(sigma_j - sigma_{i-1})!)."""
    n = sum(alpha)
    sigma = partial_sums(alpha)
    size = len(alpha)
    top = qt_factorial(n, q)
    # 0-based entry (i, j) holds 1/(sigma_{j+1} - sigma_i)!, which vanishes for j < i - 1
    for tau, sign in leibniz_terms(size, lambda i, j: j >= i - 1):
        den = TPoly.one()
        for i, j in enumerate(tau):
            den = den * qt_factorial(sigma[j + 1] - sigma[i], q).frobenius(q, sigma[i])
        yield tau, sign, top.exact_div(den) * sign


def _ribbon_determinant(alpha, q):
    total = TPoly.zero()
    for _, _, term in ribbon_determinant_terms(alpha, q):
        total = total + term
    return total


def ribbon_qt(alpha, q, route="descent_sum"):
    """(q,t)-ribbon number of a composition with positive parts."""
    _check_q(q)
    alpha = check_composition(alpha, positive=True)
    if route == "descent_sum":
        return _ribbon_descent_sum(alpha, q)
    if route == "inclusion_exclusion":
        return _ribbon_inclusion_exclusion(alpha, q)
    if route == "determinant":
        return _ribbon_determinant(alpha, q)
    raise ValueError(f"unknown ribbon route {route!r}; choose from {RIBBON_ROUTES}")


# maj(w) itself is constant on a descent class; the tableau-reading
# bijection carries maj of a standard ribbon tableau to maj(w^-1)
STATISTICS = {"length": inversions, "maj": inverse_major_index}


def ribbon_classical(alpha, statistic="length"):
    """Sum of t^stat(w) over the descent class of alpha.

    ``"maj"`` is the major index of the inverse permutation.
    """
    alpha = check_composition(alpha, positive=True)
    stat = STATISTICS[statistic]
    counts = {}
    for w in descent_class(alpha):
        s = stat(w)
        counts[s] = counts.get(s, 0) + 1
    return TPoly(counts)


def all_permutations(n):
    return permutations(range(1, n + 1))
