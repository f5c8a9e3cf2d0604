"""
Symbolic exponents in Z[q, 1/q] and product-form weights.

A :class:`QExp` is an exponent such as ``q^n - q^(i-1)``.  A
:class:`WeightExpr` is a weight of the shape

    t^P * prod_i [q]_{t^(E_i)},     [q]_x = 1 + x + ... + x^(q-1),

with symbolic exponents P, E_i.  Keeping weights in this form lets both
limits be read off directly: t -> 1 at a fixed integer q, and the q -> 1
functional that sends t^(q^r - q^s) to t^(r - s).
"""

from __future__ import annotations

from fractions import Fraction

from .tpoly import TPoly, guarded_cache, norm_exp


class QExp:
    """A Laurent polynomial in q with integer coefficients, stored as {degree: coeff}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        self._c = {d: a for d, a in (coeffs or {}).items() if a}
        self._hash = None

    @classmethod
    def power(cls, r):
        """q^r."""
        return cls({r: 1})

    @classmethod
    def diff(cls, y, z):
        """q^y - q^z."""
        if y == z:
            return cls()
        return cls({y: 1, z: -1})

    @property
    def coeffs(self):
        return dict(self._c)

    def is_zero(self):
        return not self._c

    def key(self):
        """Sort key; gives a total order used to canonicalise bracket multisets."""
        return tuple(sorted(self._c.items()))

    def leading_coefficient(self):
        if not self._c:
            return 0
        return self._c[max(self._c)]

    def eval(self, q):
        """Value at an integer q >= 2, as an exact int or Fraction."""
        if q < 2:
            raise ValueError(f"q must be an integer >= 2, got {q}")
        total = Fraction(0)
        for d, a in self._c.items():
            total += a * Fraction(q) ** d
        return norm_exp(total)

    def at_one(self):
        """Value at q = 1; zero exactly for members of the quotient subfield."""
        return sum(self._c.values())

    def derivative_at_one(self):
        """d/dq at q = 1, which is where t^(q^r - q^s) lands under q -> 1."""
        return sum(a * d for d, a in self._c.items())

    def frobenius(self, steps):
        """Multiply by q^steps."""
        return QExp({d + steps: a for d, a in self._c.items()})

    def __add__(self, other):
        res = dict(self._c)
        for d, a in other._c.items():
            res[d] = res.get(d, 0) + a
        return QExp(res)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QExp({d: -a for d, a in self._c.items()})

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return QExp({d: a * n for d, a in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QExp):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"QExp({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d, a in sorted(self._c.items(), reverse=True):
            mono = "1" if d == 0 else "q" if d == 1 else f"q^{d}"
            if abs(a) != 1:
                mono = f"{abs(a)}*{mono}"
            parts.append(("-" if a < 0 else "+", mono))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text


def qexp_eval(e, q):
    return e.eval(q)


def qexp_frobenius(e, steps):
    return e.frobenius(steps)


class WeightError(ValueError):
    """A weight violates the product-form invariants."""


class WeightExpr:
    """t^prefactor * prod [q]_{t^b} over the bracket multiset."""

    __slots__ = ("prefactor", "brackets", "_hash")

    def __init__(self, prefactor=None, brackets=(), check=True):
        self.prefactor = prefactor if prefactor is not None else QExp()
        self.brackets = tuple(sorted(brackets, key=QExp.key))
        self._hash = None
        if check:
            self.validate()

    @classmethod
    def one(cls):
        return cls()

    @classmethod
    def bottom_cell(cls, e):
        """t^e [q]_{t^e}."""
        return cls(e, (e,))

    def validate(self):
        if self.prefactor.at_one() != 0:
            raise WeightError(f"prefactor {self.prefactor} does not vanish at q = 1")
        for b in self.brackets:
            if b.at_one() != 0:
                raise WeightError(f"bracket exponent {b} does not vanish at q = 1")
            # sampled positivity plus the sign of the top coefficient
            if b.leading_coefficient() <= 0 or b.eval(2) <= 0 or b.eval(3) <= 0:
                raise WeightError(f"bracket exponent {b} is not positive")

    def __mul__(self, other):
        if not isinstance(other, WeightExpr):
            return NotImplemented
        return WeightExpr(self.prefactor + other.prefactor,
                          self.brackets + other.brackets, check=False)

    def frobenius(self, steps):
        """The weight with t replaced by t^(q^steps)."""
        if steps == 0:
            return self
        return WeightExpr(self.prefactor.frobenius(steps),
                          [b.frobenius(steps) for b in self.brackets], check=False)

    def __eq__(self, other):
        if not isinstance(other, WeightExpr):
            return NotImplemented
        return self.prefactor == other.prefactor and self.brackets == other.brackets

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.prefactor, self.brackets))
        return self._hash

    def __repr__(self):
        inner = " * ".join(f"[q]_t^({b})" for b in self.brackets)
        if not self.prefactor.is_zero():
            inner = f"t^({self.prefactor})" + (" * " + inner if inner else "")
        return f"WeightExpr({inner or '1'})"

    def to_poly(self, q):
        return we_to_poly(self, q)

    def limit_t1(self, q):
        return we_limit_t1(self, q)

    def limit_q1(self):
        return we_limit_q1(self)


def weight_product(weights):
    out = WeightExpr()
    for w in weights:
        out = out * w
    return out


@guarded_cache(maxsize=1 << 16)
def we_to_poly(w, q):
    """The polynomial in t obtained by fixing the integer q."""
    if q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q}")
    out = TPoly.monomial(w.prefactor.eval(q))
    for b in w.brackets:
        e = b.eval(q)
        if e <= 0:
            raise WeightError(f"bracket exponent {b} evaluates to {e} at q = {q}")
        out = out * TPoly.bracket(q, e)
    return out


def we_limit_t1(w, q):
    """Limit t -> 1: every bracket tends to q and every monomial to 1."""
    if q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q}")
    return q ** len(w.brackets)


def we_limit_q1(w):
    """Exponent m of t^m obtained as q -> 1 after t -> t^(1/(q-1)).

    Brackets contribute [1]_x = 1; the prefactor t^(sum a_r q^r) goes to
    t^(sum a_r r).
    """
    for e in (w.prefactor, *w.brackets):
        if e.at_one() != 0:
            raise WeightError(f"exponent {e} is outside the q -> 1 domain")
    return w.prefactor.derivative_at_one()
