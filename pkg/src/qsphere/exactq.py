"""Exact arithmetic in the field Q(q) of rational functions in one indeterminate.

Polynomials are sparse maps ``exponent -> coefficient`` with coefficients kept
as ``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise.  A :class:`RatQ` is stored in canonical form: numerator and
denominator coprime, denominator monic.  Equality is therefore structural.

Almost every coefficient met in the algebra A(SL_q(2)) is a Laurent
polynomial, i.e. has denominator ``q^k``.  That case bypasses the Euclidean
gcd entirely.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

Rational = Union[int, Fraction]


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Univariate polynomial in q over the rationals (immutable)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, Rational], Iterable[Tuple[int, Rational]], None] = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: Dict[int, Rational] = {}
        for e, v in items:
            if e < 0:
                raise ValueError(f"negative exponent {e} in polynomial")
            if v:
                c[e] = _norm(Fraction(v) if isinstance(v, float) else v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Rational]) -> "Poly":
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, v: Rational) -> "Poly":
        return cls._raw({0: _norm(v)} if v else {})

    @classmethod
    def monomial(cls, e: int, v: Rational = 1) -> "Poly":
        return cls._raw({e: _norm(v)} if v else {})

    @property
    def coeffs(self) -> Dict[int, Rational]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def low(self) -> int:
        """Lowest exponent present (0 for the zero polynomial)."""
        return min(self._c) if self._c else 0

    def lc(self) -> Rational:
        return self._c[max(self._c)] if self._c else 0

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: "Poly") -> "Poly":
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = _norm(s)
            else:
                c.pop(e, None)
        return Poly._raw(c)

    def __neg__(self) -> "Poly":
        return Poly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self._c or not other._c:
            return Poly._raw({})
        a, da = self._integral()
        b, db = other._integral()
        c: Dict[int, int] = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        d = da * db
        if d == 1:
            return Poly._raw({e: v for e, v in c.items() if v})
        return Poly._raw({e: _norm(Fraction(v, d)) for e, v in c.items() if v})

    def _integral(self) -> Tuple[Dict[int, int], int]:
        """(integer coefficients, common denominator) with self = coeffs / den."""
        den = 1
        for v in self._c.values():
            if isinstance(v, Fraction):
                den = den * v.denominator // math.gcd(den, v.denominator)
        if den == 1:
            return self._c, 1
        return {e: int(v * den) for e, v in self._c.items()}, den

    def scale(self, s: Rational) -> "Poly":
        if not s:
            return Poly._raw({})
        return Poly._raw({e: _norm(v * s) for e, v in self._c.items()})

    def shift(self, k: int) -> "Poly":
        """Multiply by q^k; k may be negative as long as exponents stay >= 0."""
        if k == 0:
            return self
        return Poly._raw({e + k: v for e, v in self._c.items()})

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = dict(self._c)
        dq = other.degree()
        lc = other.lc()
        quo: Dict[int, Rational] = {}
        while r:
            dr = max(r)
            if dr < dq:
                break
            f = _norm(Fraction(r[dr]) / lc)
            quo[dr - dq] = f
            for e, v in other._c.items():
                k = e + dr - dq
                s = r.get(k, 0) - f * v
                if s:
                    r[k] = _norm(s)
                else:
                    r.pop(k, None)
        return Poly._raw(quo), Poly._raw(r)

    def monic(self) -> "Poly":
        lc = self.lc()
        if not lc or lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    def eval(self, x: Rational) -> Rational:
        acc: Rational = 0
        for e, v in self._c.items():
            acc += v * Fraction(x) ** e
        return _norm(Fraction(acc))

    def terms_desc(self):
        return sorted(self._c.items(), reverse=True)

    def __repr__(self):
        return f"Poly({dict(sorted(self._c.items()))})"


def _primitive_dense(p: Poly) -> List[int]:
    """Dense integer coefficients (low to high) of p with denominators cleared and content removed."""
    c = p._c
    den = 1
    for v in c.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = [0] * (max(c) + 1)
    for e, v in c.items():
        out[e] = int(v * den)
    g = 0
    for v in out:
        g = math.gcd(g, v)
    return [v // g for v in out]


def _dense_prem(f: List[int], g: List[int]) -> List[int]:
    """Pseudo-remainder of f by g, content removed; trailing zeros trimmed."""
    r = f[:]
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [v * lg for v in r]
        for i, gv in enumerate(g):
            r[i + shift] -= lr * gv
        while r and r[-1] == 0:
            r.pop()
    if r:
        cont = 0
        for v in r:
            cont = math.gcd(cont, v)
        r = [v // cont for v in r]
    return r


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q: Euclidean algorithm on primitive integer parts.

    Each remainder is replaced by its primitive part, which is what keeps
    coefficient growth in check.
    """
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a, b = _primitive_dense(f), _primitive_dense(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _dense_prem(a, b)
    return Poly._raw({e: v for e, v in enumerate(a) if v}).monic()


_ONE_POLY = Poly.const(1)


class RatQ:
    """An element of Q(q) in canonical form (coprime, monic denominator)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[Poly, Rational] = 0, den: Union[Poly, Rational, None] = None):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatQ":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def q_power(cls, e: int, coeff: Rational = 1) -> "RatQ":
        """``coeff * q^e`` for any integer e."""
        if not coeff:
            return ZERO
        if e >= 0:
            return cls._raw(Poly.monomial(e, coeff), _ONE_POLY)
        return cls._raw(Poly.const(coeff), Poly.monomial(-e))

    @classmethod
    def from_laurent(cls, terms: Mapping[int, Rational]) -> "RatQ":
        """Build from a Laurent polynomial ``{exponent: coeff}`` (exponents of any sign)."""
        items = {e: v for e, v in terms.items() if v}
        if not items:
            return ZERO
        lo = min(items)
        if lo >= 0:
            return cls._raw(Poly._raw({e: _norm(v) for e, v in items.items()}), _ONE_POLY)
        return cls._raw(Poly._raw({e - lo: _norm(v) for e, v in items.items()}), Poly.monomial(-lo))

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_monomial()

    def __eq__(self, other):
        if isinstance(other, RatQ):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatQ(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1.is_monomial() and d2.is_monomial():
            k1, k2 = d1.degree(), d2.degree()
            k = max(k1, k2)
            num = self.num.shift(k - k1) + other.num.shift(k - k2)
            return _strip_q(num, k)
        if d1 == d2:
            return RatQ(self.num + other.num, d1)
        return RatQ(self.num * d2 + other.num * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatQ._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_monomial() and other.den.is_monomial():
            k = self.den.degree() + other.den.degree()
            return _strip_q(self.num * other.num, k)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, _ = self.num.divmod(g1)
        d2, _ = other.den.divmod(g1)
        n2, _ = other.num.divmod(g2)
        d1, _ = self.den.divmod(g2)
        num, den = n1 * n2, d1 * d2
        lc = den.lc()
        return RatQ._raw(num.scale(Fraction(1) / lc), den.monic())

    __rmul__ = __mul__

    def inv(self) -> "RatQ":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        lc = self.num.lc()
        return RatQ._raw(self.den.scale(Fraction(1) / lc), self.num.monic())

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def subs_q(self, power: int) -> "RatQ":
        """Substitute q -> q^power (power may be negative)."""
        if power == 0:
            raise ValueError("substitution q -> 1 is not allowed")
        def sub(p: Poly) -> RatQ:
            return RatQ.from_laurent({e * power: v for e, v in p._c.items()})
        return sub(self.num) / sub(self.den)

    # -- evaluation -----------------------------------------------------

    def eval(self, q0) -> Rational:
        """Exact value at q = q0.

        Raises ``ValueError`` for q0 in {0, 1, -1} (excluded from the parameter
        domain) and ``ZeroDivisionError`` at a pole.
        """
        q0 = Fraction(q0)
        if q0 in (0, 1, -1):
            raise ValueError(f"q = {q0} is outside the admissible domain")
        d = self.den.eval(q0)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return _norm(Fraction(self.num.eval(q0)) / d)

    def as_integer(self) -> Optional[int]:
        """The integer n if this is the constant n, otherwise None."""
        if self.den != _ONE_POLY:
            return None
        c = self.num._c
        if not c:
            return 0
        if len(c) == 1 and 0 in c and isinstance(c[0], int):
            return c[0]
        return None

    def as_constant(self) -> Optional[Rational]:
        if self.den != _ONE_POLY:
            return None
        c = self.num._c
        if not c:
            return 0
        if len(c) == 1 and 0 in c:
            return c[0]
        return None

    def laurent_terms(self) -> Optional[Dict[int, Rational]]:
        if not self.den.is_monomial():
            return None
        k = self.den.degree()
        return {e - k: v for e, v in self.num._c.items()}

    def __str__(self):
        return render_ratq(self)

    def __repr__(self):
        return f"RatQ({render_ratq(self)!r})"


def _coerce(x) -> RatQ:
    if isinstance(x, RatQ):
        return x
    if isinstance(x, (int, Fraction)):
        return RatQ._raw(Poly.const(x), _ONE_POLY)
    return NotImplemented


def _strip_q(num: Poly, k: int) -> RatQ:
    """Canonicalize num / q^k."""
    if num.is_zero():
        return ZERO
    s = min(k, num.low())
    return RatQ._raw(num.shift(-s), Poly.monomial(k - s) if k - s else _ONE_POLY)


def _canonical(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if num.is_zero():
        return num, _ONE_POLY
    lc = den.lc()
    if den.is_monomial():
        k = den.degree()
        s = min(k, num.low())
        return num.shift(-s).scale(Fraction(1) / lc), Poly.monomial(k - s)
    g = poly_gcd(num, den)
    if g.degree() > 0:
        num, _ = num.divmod(g)
        den, _ = den.divmod(g)
        lc = den.lc()
    return num.scale(Fraction(1) / lc), den.monic()


ZERO = RatQ._raw(Poly._raw({}), _ONE_POLY)
ONE = RatQ._raw(Poly.const(1), _ONE_POLY)
Q = RatQ._raw(Poly.monomial(1), _ONE_POLY)


def ratq_add(x: RatQ, y: RatQ) -> RatQ:
    return x + y


def ratq_mul(x: RatQ, y: RatQ) -> RatQ:
    return x * y


def ratq_inv(x: RatQ) -> RatQ:
    return x.inv()


def ratq_eval(x: RatQ, q0) -> Rational:
    return x.eval(q0)


def ratq_is_integer_constant(x: RatQ) -> Optional[int]:
    return x.as_integer()


# -- rendering -------------------------------------------------------------

def _fmt_coeff(v: Rational) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_terms(terms: Iterable[Tuple[int, Rational]]) -> str:
    """Render ``[(exponent, coeff), ...]`` (already ordered) as ``q^2 - 3*q + 1/2``."""
    out = []
    for e, v in terms:
        neg = v < 0
        a = -v if neg else v
        if e == 0:
            body = _fmt_coeff(a)
        else:
            qs = "q" if e == 1 else f"q^{e}"
            body = qs if a == 1 else f"{_fmt_coeff(a)}*{qs}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) or "0"


def render_ratq(x: RatQ) -> str:
    """Deterministic text form, decreasing exponents.

    Laurent elements print with negative exponents (``1 - q^-2``); anything
    else prints as ``(num)/(den)``.
    """
    if x.num.is_zero():
        return "0"
    if x.den.is_monomial():
        k = x.den.degree()
        return render_terms((e - k, v) for e, v in x.num.terms_desc())
    return f"({render_terms(x.num.terms_desc())})/({render_terms(x.den.terms_desc())})"


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(q(?:\^(-?\d+))?)?\s*")


def _parse_laurent(text: str) -> Dict[int, Fraction]:
    text = text.strip()
    pos, out = 0, {}
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse rational function term at {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        e = 0
        if m.group(3):
            e = int(m.group(4)) if m.group(4) else 1
        out[e] = out.get(e, 0) + sign * c
        pos = m.end()
    return out


def parse_ratq(text: str) -> RatQ:
    """Inverse of :func:`render_ratq`."""
    text = text.strip()
    m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
    if m:
        return RatQ.from_laurent(_parse_laurent(m.group(1))) / RatQ.from_laurent(_parse_laurent(m.group(2)))
    return RatQ.from_laurent(_parse_laurent(text))
