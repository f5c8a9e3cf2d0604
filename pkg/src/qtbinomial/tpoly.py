"""
Sparse exact polynomials in one variable ``t``.

Coefficients are Python ints.  Exponents are exact rationals: ints when
integral, :class:`fractions.Fraction` otherwise, so that the substitution
``t -> t^(1/q)`` stays inside the ring.  A second, tiny class handles
bivariate polynomials over a prime field.
"""

from __future__ import annotations

import contextlib
import heapq
from fractions import Fraction
from functools import lru_cache
from math import gcd


DEFAULT_DEGREE_GUARD = 10**6
_guard = DEFAULT_DEGREE_GUARD
# memoised polynomial builders; emptied whenever the guard changes so that
# a cached result can never bypass a tighter limit
_guarded_caches = []


class NonZeroRemainder(ArithmeticError):
    """An exact division did not divide exactly."""


class DegreeGuardError(OverflowError):
    """An intermediate exponent exceeded the configured degree guard."""


def get_degree_guard():
    return _guard


def set_degree_guard(limit):
    global _guard
    if limit <= 0:
        raise ValueError("degree guard must be positive")
    if limit != _guard:
        for cached in _guarded_caches:
            cached.cache_clear()
    _guard = limit


def guarded_cache(maxsize=None):
    """lru_cache for functions returning TPolys, reset when the degree guard changes."""
    def wrap(fn):
        cached = lru_cache(maxsize=maxsize)(fn)
        _guarded_caches.append(cached)
        return cached
    return wrap


@contextlib.contextmanager
def degree_guard(limit):
    """Temporarily change the degree guard."""
    old = _guard
    set_degree_guard(limit)
    try:
        yield
    finally:
        set_degree_guard(old)


def norm_exp(e):
    """Canonical exponent: int if integral, else a reduced Fraction."""
    if isinstance(e, int):
        return e
    e = Fraction(e)
    if e.denominator == 1:
        return e.numerator
    return e


def _check_guard(exps):
    for e in exps:
        if e > _guard:
            raise DegreeGuardError(f"exponent {e} exceeds degree guard {_guard}")


class TPoly:
    """An immutable polynomial sum c_e t^e with rational exponents e."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c:
                    e = norm_exp(e)
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        _check_guard(clean)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already canonical: normalized exponents, no zero coefficients
        _check_guard(terms)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors --

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def one_minus(cls, exp):
        """The binomial factor 1 - t^exp."""
        return cls({0: 1, exp: -1})

    @classmethod
    def bracket(cls, count, exp):
        """[count]_{t^exp} = 1 + t^exp + ... + t^((count-1) exp), as an explicit sum."""
        if count < 0:
            raise ValueError("bracket length must be nonnegative")
        exp = norm_exp(exp)
        return cls._raw({norm_exp(j * exp): 1 for j in range(count)})

    # -- inspection --

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs sorted by exponent ascending."""
        return sorted(self._terms.items())

    def coeff(self, exp):
        return self._terms.get(norm_exp(exp), 0)

    def is_zero(self):
        return not self._terms

    def degree(self):
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self):
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def is_integral(self):
        """True when every exponent is an integer."""
        return all(isinstance(e, int) for e in self._terms)

    def has_nonnegative_coefficients(self):
        return all(c > 0 for c in self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly({0: other})
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"TPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                power = "t" if e == 1 else f"t^{e}" if isinstance(e, int) else f"t^({e})"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            out.append((sign, mono))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in out[1:]:
            text += f" {sign} {mono}"
        return text

    # -- arithmetic --

    def __neg__(self):
        return TPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = TPoly({0: other})
        if not isinstance(other, TPoly):
            return NotImplemented
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = v
            else:
                del res[e]
        return TPoly._raw(res)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = TPoly({0: other})
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TPoly.zero()
            return TPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) > 16 and len(a) * len(b) > 4096:
            fast = _kronecker_mul(a, b)
            if fast is not None:
                return TPoly._raw(fast)
        res = {}
        get = res.get
        for eb, cb in b.items():
            integral = isinstance(eb, int)
            for ea, ca in a.items():
                e = ea + eb
                if not (integral and isinstance(ea, int)):
                    e = norm_exp(e)
                res[e] = get(e, 0) + ca * cb
        return TPoly._raw({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = TPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, exp):
        """Multiply by the monomial t^exp."""
        exp = norm_exp(exp)
        return TPoly._raw({norm_exp(e + exp): c for e, c in self._terms.items()})

    def exact_div(self, other):
        """Return c with self == other * c, or raise NonZeroRemainder.

        Long division from the top term.  Quotient coefficients are formed
        over the rationals and must come out integral.
        """
        if not isinstance(other, TPoly):
            other = TPoly({0: other})
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return TPoly.zero()
        if len(other._terms) == 1:
            (d, c), = other._terms.items()
            out = {}
            for e, v in self._terms.items():
                qv, r = divmod(v, c)
                if r:
                    raise NonZeroRemainder(f"coefficient {v} not divisible by {c}")
                out[norm_exp(e - d)] = qv
            return TPoly._raw(out)

        lead_e = other.degree()
        lead_c = other._terms[lead_e]
        # a = b*c forces val(c) = val(a) - val(b); anything lower is a remainder
        floor = self.valuation() - other.valuation()
        tail = [(e - lead_e, c) for e, c in other._terms.items() if e != lead_e]
        rem = dict(self._terms)
        heap = [-e for e in rem]
        heapq.heapify(heap)
        quotient = {}
        while heap:
            e = -heapq.heappop(heap)
            v = rem.get(e, 0)
            if not v:
                continue
            qe = norm_exp(e - lead_e)
            if qe < floor:
                raise NonZeroRemainder(f"nonzero remainder at exponent {e}")
            qv, r = divmod(v, lead_c)
            if r:
                raise NonZeroRemainder(f"non-integral quotient coefficient {Fraction(v, lead_c)}")
            quotient[qe] = qv
            del rem[e]
            for de, c in tail:
                ee = norm_exp(e + de)
                nv = rem.get(ee, 0) - qv * c
                if nv:
                    if ee not in rem:
                        heapq.heappush(heap, -ee)
                    rem[ee] = nv
                else:
                    rem.pop(ee, None)
        return TPoly._raw(quotient)

    def subst_power(self, c):
        """Substitute t -> t^c for a positive rational c (Frobenius when c = q^s)."""
        c = Fraction(c)
        if c <= 0:
            raise ValueError("substitution power must be positive")
        if c == 1:
            return self
        if c.denominator == 1:
            ci = c.numerator
            return TPoly._raw({norm_exp(e * ci): v for e, v in self._terms.items()})
        return TPoly._raw({norm_exp(e * c): v for e, v in self._terms.items()})

    def frobenius(self, q, steps=1):
        """Apply t -> t^(q^steps); steps may be negative."""
        return self.subst_power(Fraction(q) ** steps)

    def eval_one(self):
        """Value at t = 1, i.e. the sum of the coefficients."""
        return sum(self._terms.values())

    def evaluate(self, x):
        """Evaluate at a number x; requires integral exponents."""
        if not self.is_integral():
            raise ValueError("cannot evaluate a polynomial with fractional exponents")
        x = Fraction(x)
        total = sum(c * x**e for e, c in self._terms.items())
        return total.numerator if total.denominator == 1 else total

    def mod(self, p):
        """Reduce coefficients to residues mod p."""
        return TPoly({e: c % p for e, c in self._terms.items()})

    # -- serialization --

    def to_json(self):
        """Canonical form: {"terms": [{"exp": "a/b", "coeff": "n"}, ...]}, exponents ascending."""
        return {"terms": [{"exp": str(Fraction(e)), "coeff": str(c)} for e, c in self.items()]}

    @classmethod
    def from_json(cls, data):
        return cls({Fraction(t["exp"]): int(t["coeff"]) for t in data["terms"]})


def _scaled(e, scale):
    # e * scale as an int; scale is a multiple of e's denominator
    if isinstance(e, int):
        return e * scale
    return e.numerator * (scale // e.denominator)


def _split_signs(terms, scale, low):
    pos, neg = {}, {}
    for e, c in terms.items():
        idx = _scaled(e, scale) - low
        if c > 0:
            pos[idx] = c
        else:
            neg[idx] = -c
    return pos, neg


def _pack(coeffs, width):
    if not coeffs:
        return 0
    buf = bytearray((max(coeffs) + 1) * width)
    for idx, c in coeffs.items():
        buf[idx * width:(idx + 1) * width] = c.to_bytes(width, "little")
    return int.from_bytes(buf, "little")


def _unpack(value, width, sign, out):
    if not value:
        return
    raw = value.to_bytes((value.bit_length() + 7) // 8 + width, "little")
    for idx in range(len(raw) // width):
        chunk = raw[idx * width:(idx + 1) * width]
        if any(chunk):
            out[idx] = out.get(idx, 0) + sign * int.from_bytes(chunk, "little")


def _kronecker_mul(a, b):
    """Dense product by packing coefficients into one big integer per sign.

    Returns None when the exponent span makes packing wasteful.
    """
    scale = 1
    for e in (*a, *b):
        if not isinstance(e, int):
            scale = scale * e.denominator // gcd(scale, e.denominator)
    lo_a = min(_scaled(e, scale) for e in a)
    lo_b = min(_scaled(e, scale) for e in b)
    span = max(_scaled(e, scale) for e in a) - lo_a + max(_scaled(e, scale) for e in b) - lo_b
    if span * 4 > len(a) * len(b):
        return None
    bound = max(map(abs, a.values())) * max(map(abs, b.values())) * min(len(a), len(b))
    width = bound.bit_length() // 8 + 1
    ap, an = _split_signs(a, scale, lo_a)
    bp, bn = _split_signs(b, scale, lo_b)
    A = (_pack(ap, width), _pack(an, width))
    B = (_pack(bp, width), _pack(bn, width))
    acc = {}
    _unpack(A[0] * B[0] + A[1] * B[1], width, 1, acc)
    _unpack(A[0] * B[1] + A[1] * B[0], width, -1, acc)
    low = lo_a + lo_b
    out = {}
    for idx, c in acc.items():
        if c:
            num = low + idx
            out[num // scale if num % scale == 0 else Fraction(num, scale)] = c
    return out


def tp_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def product(polys):
    out = TPoly.one()
    for p in polys:
        out = out * p
    return out


def one_minus_product(exps):
    """prod (1 - t^e) over the given exponents."""
    out = TPoly.one()
    for e in exps:
        out = out * TPoly.one_minus(e)
    return out


def divide_one_minus_products(num_exps, den_exps):
    """Exact quotient prod(1 - t^a) / prod(1 - t^b).

    Factors that occur on both sides are cancelled first; the rest is
    divided one factor at a time, which is exact whenever the overall
    quotient is a polynomial.
    """
    num = [norm_exp(e) for e in num_exps]
    den = []
    for e in den_exps:
        e = norm_exp(e)
        if e in num:
            num.remove(e)
        else:
            den.append(e)
    out = one_minus_product(num)
    for e in sorted(den, reverse=True):
        out = out.exact_div(TPoly.one_minus(e))
    return out


def _clear(a, b):
    # t^a - t^b  ==  sign * t^low * (1 - t^gap)
    if a == b:
        raise ZeroDivisionError("difference of equal monomials")
    if a < b:
        return 1, a, b - a
    return -1, b, a - b


def diff_quotient(num_pairs, den_pairs):
    """Exact value of prod (t^A - t^B) / prod (t^C - t^D).

    Each difference is rewritten as a signed monomial times a factor
    1 - t^gap, so the only division left is between genuine polynomials.
    """
    sign = 1
    shift = 0
    num_gaps, den_gaps = [], []
    for a, b in num_pairs:
        if a == b:
            return TPoly.zero()
        s, low, gap = _clear(norm_exp(a), norm_exp(b))
        sign *= s
        shift += low
        num_gaps.append(gap)
    for c, d in den_pairs:
        s, low, gap = _clear(norm_exp(c), norm_exp(d))
        sign *= s
        shift -= low
        den_gaps.append(gap)
    return divide_one_minus_products(num_gaps, den_gaps).shift(shift) * sign


def leibniz_terms(size, nonzero):
    """Yield (perm, sign) for permutations whose every entry (i, perm[i]) is nonzero.

    ``nonzero(i, j)`` prunes the search, so sparse matrices cost far less
    than size! terms.
    """
    perm = [0] * size
    used = [False] * size

    def rec(i, sign):
        if i == size:
            yield tuple(perm), sign
            return
        # sign tracks inversions: each unused smaller column to the right adds one
        smaller_unused = 0
        for j in range(size):
            if used[j]:
                continue
            if nonzero(i, j):
                used[j] = True
                perm[i] = j
                yield from rec(i + 1, sign if smaller_unused % 2 == 0 else -sign)
                used[j] = False
            smaller_unused += 1

    yield from rec(0, 1)


def det_leibniz(matrix, max_size=8):
    """Determinant of a square matrix of TPolys by Leibniz expansion."""
    size = len(matrix)
    if size > max_size:
        raise ValueError(f"Leibniz expansion limited to {max_size}x{max_size}")
    total = TPoly.zero()
    for perm, sign in leibniz_terms(size, lambda i, j: not matrix[i][j].is_zero()):
        term = TPoly.one()
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
        total = total + term * sign
    return total


class FpPoly2:
    """A polynomial in y and t over the prime field F_p; keys are (y_degree, t_degree)."""

    __slots__ = ("p", "_terms")

    def __init__(self, p, terms=None):
        self.p = p
        clean = {}
        for key, c in (terms or {}).items():
            c %= p
            if c:
                clean[key] = c
        self._terms = clean

    @classmethod
    def from_t_poly(cls, p, poly, ydeg=0):
        """Embed an integral TPoly, reduced mod p, as the coefficient of y^ydeg."""
        if not poly.is_integral():
            raise ValueError("only integral exponents embed into F_p[y, t]")
        return cls(p, {(ydeg, e): c for e, c in poly.items()})

    @property
    def terms(self):
        return dict(self._terms)

    def y_coefficient(self, ydeg):
        """Coefficient of y^ydeg as a TPoly with residues in {0, ..., p-1}."""
        return TPoly({td: c for (yd, td), c in self._terms.items() if yd == ydeg})

    def y_degrees(self):
        return sorted({yd for yd, _ in self._terms})

    def _check(self, other):
        if not isinstance(other, FpPoly2):
            raise TypeError("expected FpPoly2")
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        res = dict(self._terms)
        for k, c in other._terms.items():
            res[k] = res.get(k, 0) + c
        return FpPoly2(self.p, res)

    def __mul__(self, other):
        self._check(other)
        res = {}
        for (y1, t1), c1 in self._terms.items():
            for (y2, t2), c2 in other._terms.items():
                k = (y1 + y2, t1 + t2)
                res[k] = (res.get(k, 0) + c1 * c2) % self.p
        return FpPoly2(self.p, res)

    def __eq__(self, other):
        if not isinstance(other, FpPoly2):
            return NotImplemented
        return self.p == other.p and self._terms == other._terms

    def __hash__(self):
        return hash((self.p, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*y^{y}*t^{t}" for (y, t), c in sorted(self._terms.items())) or "0"
        return f"FpPoly2(p={self.p}, {body})"


def fp2_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")
