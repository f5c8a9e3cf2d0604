"""
(q,t)-factorials, binomials and multinomials at a fixed integer q.

    n!_{q,t} = prod_{i=0}^{n-1} (1 - t^(q^n - q^i))

Binomials and multinomials are computed as exact quotients of such
products.  The Pascal relations, the convolution identity and the
invariant-degree quotient are separate code paths used as checks.  The
classical Gaussian binomials here are built by the q-Pascal recurrence so
that they can serve as independent limit oracles.
"""

from __future__ import annotations

from itertools import combinations

from .exprcore import QExp, WeightExpr, we_to_poly
from .tpoly import TPoly, divide_one_minus_products, guarded_cache, one_minus_product


def _check_q(q):
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")


def partial_sums(alpha):
    """(sigma_0, ..., sigma_l) with sigma_0 = 0."""
    out = [0]
    for a in alpha:
        out.append(out[-1] + a)
    return tuple(out)


def check_composition(alpha, n=None, positive=False):
    alpha = tuple(alpha)
    if any(not isinstance(a, int) or a < 0 for a in alpha):
        raise ValueError(f"composition parts must be nonnegative integers: {alpha}")
    if positive and any(a == 0 for a in alpha):
        raise ValueError(f"composition must have positive parts: {alpha}")
    if n is not None and sum(alpha) != n:
        raise ValueError(f"composition {alpha} does not sum to {n}")
    return alpha


def compositions(n):
    """All compositions of n into positive parts, ordered by their descent sets."""
    if n == 0:
        yield ()
        return
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            bounds = (0, *cuts, n)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def cut_set(alpha):
    """Set of proper partial sums; refinement is inclusion of these sets."""
    return frozenset(partial_sums(alpha)[1:-1])


def from_cut_set(cuts, n):
    bounds = (0, *sorted(cuts), n)
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def refines(finer, coarser):
    """True when ``finer`` refines ``coarser`` (both compositions of the same n)."""
    return sum(finer) == sum(coarser) and cut_set(coarser) <= cut_set(finer)


def coarsenings(alpha):
    """Compositions beta refined by alpha (positive parts)."""
    n = sum(alpha)
    cuts = sorted(cut_set(alpha))
    for r in range(len(cuts) + 1):
        for sub in combinations(cuts, r):
            yield from_cut_set(sub, n)


# -- (q,t) numbers --

def factorial_exponents(n, q):
    return [q**n - q**i for i in range(n)]


@guarded_cache()
def qt_factorial(n, q):
    """n!_{q,t}."""
    _check_q(q)
    if n < 0:
        raise ValueError("factorial of a negative number")
    return one_minus_product(factorial_exponents(n, q))


@guarded_cache()
def qt_binomial(n, k, q):
    """prod_{i=1}^k (1 - t^(q^n - q^(i-1))) / (1 - t^(q^k - q^(i-1)))."""
    _check_q(q)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = [q**n - q**(i - 1) for i in range(1, k + 1)]
    den = [q**k - q**(i - 1) for i in range(1, k + 1)]
    return divide_one_minus_products(num, den)


def qt_multinomial(n, alpha, q):
    """Telescoping product qbin(n, a1) * phi^(s1) qbin(n - s1, a2) * ..."""
    _check_q(q)
    alpha = check_composition(alpha, n)
    out = TPoly.one()
    sigma = 0
    for a in alpha:
        out = out * qt_binomial(n - sigma, a, q).frobenius(q, sigma)
        sigma += a
    return out


def composition_factorial(alpha, q):
    """alpha!_{q,t} = prod_s phi^(sigma_{s-1}) alpha_s!_{q,t}."""
    out = TPoly.one()
    for a, sigma in zip(alpha, partial_sums(alpha)):
        out = out * qt_factorial(a, q).frobenius(q, sigma)
    return out


def qt_multinomial_direct(n, alpha, q):
    """n!_{q,t} / alpha!_{q,t} by one exact division."""
    alpha = check_composition(alpha, n)
    return qt_factorial(n, q).exact_div(composition_factorial(alpha, q))


def factorial_quotient_weight(k):
    """k!_{q,t^q} / k!_{q,t} = prod_{i<k} [q]_{t^(q^k - q^i)}, in product form."""
    return WeightExpr(None, [QExp.diff(k, i) for i in range(k)])


def factorial_quotient(k, q):
    return we_to_poly(factorial_quotient_weight(k), q)


def pascal_sides(n, k, q):
    """(qbin(n, k), first relation, second relation) as polynomials."""
    _check_q(q)
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    lhs = qt_binomial(n, k, q)
    left = qt_binomial(n - 1, k - 1, q).frobenius(q) if k >= 1 else TPoly.zero()
    right = qt_binomial(n - 1, k, q).frobenius(q) if k <= n - 1 else TPoly.zero()
    quot = factorial_quotient(k, q)
    first = left + TPoly.monomial(q**k - 1) * quot * right
    second = TPoly.monomial(q**n - q**k) * left + quot * right
    return lhs, first, second


def pascal_check(n, k, q):
    """Both (q,t)-Pascal relations for qbin(n, k), as exact identities."""
    lhs, first, second = pascal_sides(n, k, q)
    return lhs == first and lhs == second


def multinomial_pascal_terms(alpha, q):
    """The summands of the multinomial Pascal relation, one per part of alpha."""
    alpha = check_composition(alpha, positive=True)
    n = sum(alpha)
    sigma = partial_sums(alpha)
    terms = []
    for i in range(len(alpha)):
        head = alpha[:i]
        ratio = composition_factorial(head, q).frobenius(q).exact_div(composition_factorial(head, q))
        lowered = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
        rest = qt_multinomial(n - 1, lowered, q).frobenius(q)
        terms.append(TPoly.monomial(q**sigma[i] - 1) * ratio * rest)
    return terms


def multinomial_pascal_sum(alpha, q):
    total = TPoly.zero()
    for term in multinomial_pascal_terms(alpha, q):
        total = total + term
    return total


def multinomial_pascal_check(alpha, q):
    _check_q(q)
    alpha = check_composition(alpha, positive=True)
    return multinomial_pascal_sum(alpha, q) == qt_multinomial(sum(alpha), alpha, q)


def convolution_sides(k, l, q):
    """((k+l)!, k! * phi^k(l!) * qbin(k+l, k))."""
    _check_q(q)
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    rhs = qt_factorial(k, q) * qt_factorial(l, q).frobenius(q, k) * qt_binomial(k + l, k, q)
    return qt_factorial(k + l, q), rhs


def convolution_check(k, l, q):
    lhs, rhs = convolution_sides(k, l, q)
    return lhs == rhs


def invariant_degrees(alpha, q):
    """Generator degrees q^sigma_s - q^(sigma_s - i) of the parabolic invariants."""
    sigma = partial_sums(alpha)
    return [q**sigma[s] - q**(sigma[s] - i)
            for s in range(1, len(sigma)) for i in range(1, alpha[s - 1] + 1)]


def hilbert_quotient(alpha, q):
    n = sum(alpha)
    top = [q**n - q**(n - i) for i in range(1, n + 1)]
    return divide_one_minus_products(top, invariant_degrees(alpha, q))


def hilbert_quotient_check(alpha, q):
    """Hilbert-series quotient over the invariant degrees equals the multinomial."""
    _check_q(q)
    alpha = check_composition(alpha)
    return hilbert_quotient(alpha, q) == qt_multinomial(sum(alpha), alpha, q)


# -- classical oracles --

@guarded_cache()
def gaussian_binomial(n, k):
    """Classical q-binomial [n choose k] as an integer polynomial, by the q-Pascal rule."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return TPoly.one()
    return gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shift(k)


def gaussian_multinomial(alpha):
    alpha = check_composition(alpha)
    out = TPoly.one()
    rest = sum(alpha)
    for a in alpha:
        out = out * gaussian_binomial(rest, a)
        rest -= a
    return out


def q_multinomial_count(alpha, q):
    """prod (q^n - q^(n-i)) / prod (q^sigma_s - q^(sigma_s - i)) as an integer."""
    n = sum(alpha)
    num = 1
    for i in range(1, n + 1):
        num *= q**n - q**(n - i)
    den = 1
    for d in invariant_degrees(alpha, q):
        den *= d
    value, r = divmod(num, den)
    assert r == 0
    return value
