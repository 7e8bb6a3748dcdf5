"""Exact Laurent polynomials in ``q`` over the rationals and their fraction field.

Every symbolic coefficient in the package lives here.  ``LaurentPoly`` stores a
sparse ``{exponent: Fraction}`` map with no zero entries; ``RatQ`` is a reduced
quotient of two Laurent polynomials whose denominator is a genuine polynomial
with constant term 1, so that equality is structural.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Union

__all__ = [
    "LaurentPoly",
    "RatQ",
    "q",
    "ONE",
    "ZERO",
    "as_ratq",
    "lp_arith",
    "qbinom",
    "qbinom_product_formula",
]

Scalar = Union[int, Fraction, "LaurentPoly", "RatQ"]


class LaurentPoly:
    """A Laurent polynomial ``sum_e c_e q^e`` with rational coefficients.

    Instances are immutable.  Construct from a mapping ``{exponent: coeff}`` or
    a rational constant; ``LaurentPoly.monomial(e, c)`` gives ``c q^e``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, Rational], Rational, None] = None):
        clean: Dict[int, Fraction] = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    e = int(e)
                    s = clean.get(e, 0) + v
                    if s:
                        clean[e] = s
                    else:
                        clean.pop(e, None)
        else:
            v = Fraction(coeffs)
            if v:
                clean[0] = v
        self._c = clean
        self._hash = None

    @classmethod
    def _raw(cls, clean: Dict[int, Fraction]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = clean
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "LaurentPoly":
        coeff = Fraction(coeff)
        return cls._raw({int(exponent): coeff} if coeff else {})

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coeff(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return len(self._c) == 1 and self._c.get(0) == 1

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def constant(self) -> Fraction:
        return self._c.get(0, Fraction(0))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _lift_lp(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _lift_lp(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift_lp(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift_lp(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._c or not other._c:
            return ZERO
        if len(other._c) == 1:
            (f, w), = other._c.items()
            if w == 1:
                return self.shift(f) if f else self
            if w == -1:
                return LaurentPoly._raw({e + f: -v for e, v in self._c.items()})
            return LaurentPoly._raw({e + f: v * w for e, v in self._c.items()})
        if len(self._c) == 1:
            return other * self
        # convolve integer numerators over a common denominator; Fraction
        # arithmetic per term pair dominates otherwise
        da, na = _integral(self._c)
        db, nb = _integral(other._c)
        acc: Dict[int, int] = {}
        get = acc.get
        for e, v in na:
            for f, w in nb:
                k = e + f
                acc[k] = get(k, 0) + v * w
        den = da * db
        return LaurentPoly._raw({k: Fraction(v, den) for k, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return LaurentPoly._raw({e * n: v ** n})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return as_ratq(self) / as_ratq(other)

    def __rtruediv__(self, other):
        return as_ratq(other) / as_ratq(self)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Return ``p(q^k)``."""
        if k == 0:
            return LaurentPoly(sum(self._c.values(), Fraction(0)))
        return LaurentPoly._raw({e * k: v for e, v in self._c.items()})

    def eval(self, qval: Rational) -> Fraction:
        """Exact specialisation at a nonzero rational ``q``."""
        qval = Fraction(qval)
        if qval == 0:
            raise ZeroDivisionError("cannot specialise a Laurent polynomial at q=0")
        return sum((v * qval ** e for e, v in self._c.items()), Fraction(0))

    def evalf(self, qval: float) -> float:
        return float(sum(float(v) * qval ** e for e, v in self._c.items()))

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatQ):
            return other == self
        other = _lift_lp(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts: List[str] = []
        for e, v in sorted(self._c.items()):
            sign = "-" if v < 0 else "+"
            mag = -v if v < 0 else v
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- dense helpers for gcd --------------------------------------------
    def _dense(self) -> List[Fraction]:
        lo, hi = self.valuation(), self.degree()
        return [self._c.get(e, Fraction(0)) for e in range(lo, hi + 1)]


def _lift_lp(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly(x)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: Fraction(1)})
q = LaurentPoly._raw({1: Fraction(1)})


# -- dense univariate polynomial helpers (ascending coefficient lists) ------

def _integral(c: Mapping[int, Fraction]):
    """Common denominator and the integer numerators over it."""
    den = 1
    for v in c.values():
        d = v.denominator
        if den % d:
            den = den * d // math.gcd(den, d)
    return den, [(e, v.numerator * (den // v.denominator)) for e, v in c.items()]


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _divmod_dense(a: List[Fraction], b: List[Fraction]):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        quot[shift] = c
        for i, bv in enumerate(b):
            a[i + shift] -= c * bv
        _trim(a)
    return _trim(quot), a


def _monic(p: List[Fraction]) -> List[Fraction]:
    lead = p[-1]
    return p if lead == 1 else [v / lead for v in p]


def _gcd_dense(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    if b:
        b = _monic(b)
    while b:
        # monic remainders keep the coefficient growth of Euclid in check
        _, r = _divmod_dense(a, b)
        a, b = b, (_monic(r) if r else r)
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [v / lead for v in a]


def _from_dense(p: Iterable[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: v for i, v in enumerate(p) if v})


def _exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Divide Laurent polynomials known to divide exactly."""
    vn, vd = num.valuation(), den.valuation()
    quot, rem = _divmod_dense(num._dense(), den._dense())
    if rem:
        raise ArithmeticError("inexact Laurent division")
    return _from_dense(quot, vn - vd)


class RatQ:
    """An element of Q(q) kept as a reduced quotient of Laurent polynomials.

    Canonical form: the denominator is a polynomial in ``q`` with nonzero
    constant term equal to 1, coprime to the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly, Rational] = 0, den: Union[LaurentPoly, Rational] = 1):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly(num)
        den = den if isinstance(den, LaurentPoly) else LaurentPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("RatQ with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatQ":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RatQ._raw(self.num + other.num, ONE)
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        if self.den.is_one():
            return RatQ(self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return RatQ(self.num + other.num * self.den, self.den)
        # add over lcm(den1, den2) rather than the product
        g = _gcd_dense(self.den._dense(), other.den._dense())
        if len(g) == 1:
            return RatQ(self.num * other.den + other.num * self.den, self.den * other.den)
        gp = _from_dense(g)
        a, b = _exact_div(self.den, gp), _exact_div(other.den, gp)
        return RatQ(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatQ._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RatQ._raw(self.num * other.num, ONE)
        return RatQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatQ(ONE) / self ** (-n)
        return RatQ._raw(self.num ** n, self.den ** n)

    def eval(self, qval: Rational) -> Fraction:
        d = self.den.eval(qval)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at q={qval}")
        return self.num.eval(qval) / d

    def evalf(self, qval: float) -> float:
        return self.num.evalf(qval) / self.den.evalf(qval)

    def __eq__(self, other):
        other = _lift_ratq(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatQ({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return ZERO, ONE
    if den.is_monomial():
        (e, v), = den._c.items()
        return num * LaurentPoly.monomial(-e, 1 / v), ONE
    g = _gcd_dense(num._dense(), den._dense())
    if len(g) > 1:
        gp = _from_dense(g)
        num = _exact_div(num, gp)
        den = _exact_div(den, gp)
    vd = den.valuation()
    lowest = den.coeff(vd)
    scale = LaurentPoly.monomial(-vd, 1 / lowest)
    return num * scale, den * scale


def _lift_ratq(x):
    if isinstance(x, RatQ):
        return x
    if isinstance(x, LaurentPoly):
        return RatQ._raw(x, ONE)
    if isinstance(x, (int, Fraction)):
        return RatQ._raw(LaurentPoly(x), ONE)
    return NotImplemented


def as_ratq(x: Scalar) -> RatQ:
    """Coerce an int, Fraction, LaurentPoly or RatQ to ``RatQ``."""
    r = _lift_ratq(x)
    if r is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return r


def lp_arith(op: str, *args):
    """Dispatch table for the basic Laurent polynomial operations.

    ``op`` is one of ``add``, ``mul``, ``neg``, ``pow`` or ``eval``; ``eval``
    takes ``(poly, q_value)`` and returns the exact rational specialisation.
    """
    if op == "add":
        return sum(args[1:], args[0])
    if op == "mul":
        out = ONE
        for a in args:
            out = out * a
        return out
    if op == "neg":
        (a,) = args
        return -a
    if op == "pow":
        a, n = args
        return a ** n
    if op == "eval":
        a, qval = args
        return a.eval(qval)
    raise ValueError(f"unknown operation {op!r}")


def qbinom(l: int, m: int, e: int) -> LaurentPoly:
    """q-binomial coefficient ``C(l, m)_x`` at ``x = q^e``.

    Read off from the expansion
    ``prod_{j=1}^{l} (1 + x^(j-1) t) = sum_m x^(m(m-1)/2) C(l, m)_x t^m``.
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    if not 0 <= m <= l:
        raise ValueError(f"m={m} outside 0..{l}")
    if e == 0:
        raise ValueError("e must be nonzero")
    return _product_coefficients(l, e)[m] * LaurentPoly.monomial(-e * m * (m - 1) // 2)


_PRODUCT_CACHE: Dict[tuple, List[LaurentPoly]] = {}


def _product_coefficients(l: int, e: int) -> List[LaurentPoly]:
    """t-coefficients of ``prod_{j=1}^{l} (1 + q^(e(j-1)) t)``."""
    key = (l, e)
    if key not in _PRODUCT_CACHE:
        coeffs = [ONE]
        for j in range(1, l + 1):
            factor = LaurentPoly.monomial(e * (j - 1))
            nxt = coeffs + [ZERO]
            for i in range(len(coeffs)):
                nxt[i + 1] = nxt[i + 1] + coeffs[i] * factor
            coeffs = nxt
        _PRODUCT_CACHE[key] = coeffs
    return _PRODUCT_CACHE[key]


def qbinom_product_formula(l: int, m: int, e: int) -> RatQ:
    """Gaussian binomial ``prod_{i=0}^{m-1} (1 - x^(l-i)) / (1 - x^(i+1))`` at ``x = q^e``.

    Independent of :func:`qbinom`; used to cross-check it.
    """
    out = as_ratq(1)
    for i in range(m):
        out = out * (ONE - LaurentPoly.monomial(e * (l - i))) / (ONE - LaurentPoly.monomial(e * (i + 1)))
    return out
