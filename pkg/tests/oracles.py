"""Independent reference computations used to freeze expected values.

Nothing here calls into the package's algorithms: counts come from product
formulas, subspaces from Gaussian elimination over all spanning tuples, and
polynomials from plain dict arithmetic.
"""

from fractions import Fraction
from itertools import permutations, product


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_from_exps(exps):
    out = {}
    for e in exps:
        out[e] = out.get(e, 0) + 1
    return out


def bracket(count, exp):
    return {j * exp: 1 for j in range(count)}


def gaussian_count(n, k, q):
    """Number of k-subspaces of F_q^n from the product formula."""
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    assert num % den == 0
    return num // den


def rref(rows, p):
    """Standard reduced row echelon form mod p, as a tuple of nonzero rows."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivot_row = 0
    for col in range(ncols):
        pick = next((r for r in range(pivot_row, len(m)) if m[r][col] % p), None)
        if pick is None:
            continue
        m[pivot_row], m[pick] = m[pick], m[pivot_row]
        inv = pow(m[pivot_row][col], -1, p)
        m[pivot_row] = [(x * inv) % p for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] % p:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
    return tuple(tuple(r) for r in m[:pivot_row])


def all_subspaces(n, k, p):
    """Every k-subspace of F_p^n as its standard RREF, by brute force over spanning tuples."""
    vectors = list(product(range(p), repeat=n))
    out = set()
    for rows in product(vectors, repeat=k):
        form = rref(rows, p)
        if len(form) == k:
            out.add(form)
    return out


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def t_factorial(n):
    """[n]_t! as a coefficient dict."""
    out = {0: 1}
    for m in range(1, n + 1):
        out = poly_mul(out, bracket(m, 1))
    return out


def inversion_generating_function(n):
    counts = {}
    for w in permutations(range(1, n + 1)):
        s = inversions(w)
        counts[s] = counts.get(s, 0) + 1
    return counts


def frac_dict(d):
    return {Fraction(e): c for e, c in d.items()}


def qt_binomial_value(n, k, q, t):
    """The (q,t)-binomial product evaluated at an integer t != 1, in exact rationals."""
    value = Fraction(1)
    for i in range(1, k + 1):
        value *= Fraction(1 - t ** (q**n - q ** (i - 1)), 1 - t ** (q**k - q ** (i - 1)))
    return value


def qt_factorial_value(n, q, t):
    value = 1
    for i in range(n):
        value *= 1 - t ** (q**n - q**i)
    return value


def compositions(n):
    """Positive compositions of n by recursion on the first part."""
    if n == 0:
        return [()]
    return [(a, *rest) for a in range(1, n + 1) for rest in compositions(n - a)]


def hook_content_count(parts, N):
    """Number of semistandard fillings of a straight shape with N values: prod (N + content) / hook."""
    parts = [p for p in parts if p]
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    value = Fraction(1)
    for i, row in enumerate(parts):
        for j in range(row):
            hook = (row - j - 1) + (conj[j] - i - 1) + 1
            value *= Fraction(N + j - i, hook)
    return int(value)
