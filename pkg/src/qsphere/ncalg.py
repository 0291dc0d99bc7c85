"""The algebra A(SL_q(2)) in the PBW basis.

A PBW monomial ``a^k b^l c^m d^n`` never contains both ``a`` and ``d``.  The
relations used, oriented so that letters move into alphabetical order and
``a``/``d`` pairs are eliminated::

    ba -> q ab     ca -> q ac     db -> q bd     dc -> q cd     cb -> bc
    da -> 1 + q bc
    ad -> 1 + q^-1 bc

Products are computed on exponent blocks, never letter by letter.  Multiplying
a monomial by one letter power on the right has a closed form; a product of
two monomials is four such steps.  The structure constants come out as
Laurent polynomials in q with integer coefficients.  They are cached per pair
of monomials and can be specialised either to :class:`RatQ` or to a number.
"""

from __future__ import annotations

import functools
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple, Union

from .exactq import ONE, ZERO, RatQ

Laurent = Dict[int, int]
LETTERS = "abcd"


class Mono(NamedTuple):
    """PBW monomial a^ka b^lb c^mc d^nd."""

    ka: int = 0
    lb: int = 0
    mc: int = 0
    nd: int = 0

    @classmethod
    def letter(cls, ch: str, power: int = 1) -> "Mono":
        exps = [0, 0, 0, 0]
        exps[LETTERS.index(ch)] = power
        return cls(*exps)

    def is_pbw(self) -> bool:
        return min(self) >= 0 and (self.ka == 0 or self.nd == 0)

    def degree(self) -> int:
        return self.ka + self.lb + self.mc + self.nd

    def zdegree(self) -> int:
        return self.ka - self.lb + self.mc - self.nd

    def render(self) -> str:
        parts = []
        for ch, e in zip(LETTERS, self):
            if e == 1:
                parts.append(ch)
            elif e > 1:
                parts.append(f"{ch}^{e}")
        return "*".join(parts) or "1"


UNIT = Mono()


# -- Laurent helpers (integer coefficients) ----------------------------------

def _lmul(x: Laurent, y: Laurent) -> Laurent:
    out: Laurent = {}
    for e1, v1 in x.items():
        for e2, v2 in y.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return {e: v for e, v in out.items() if v}


def _lshift(x: Laurent, k: int) -> Laurent:
    return {e + k: v for e, v in x.items()}


@functools.lru_cache(maxsize=None)
def _ad_block(t: int) -> Tuple[Laurent, ...]:
    """Coefficients p_r with a^t d^t = sum_r p_r (bc)^r, i.e. prod_{j<t} (1 + q^-(2j+1) bc)."""
    coeffs: List[Laurent] = [{0: 1}]
    for j in range(t):
        nxt: List[Laurent] = [dict() for _ in range(len(coeffs) + 1)]
        for r, p in enumerate(coeffs):
            for e, v in p.items():
                nxt[r][e] = nxt[r].get(e, 0) + v
                nxt[r + 1][e - (2 * j + 1)] = nxt[r + 1].get(e - (2 * j + 1), 0) + v
        coeffs = [{e: v for e, v in p.items() if v} for p in nxt]
    return tuple(coeffs)


@functools.lru_cache(maxsize=None)
def _da_block(t: int) -> Tuple[Laurent, ...]:
    """Coefficients with d^t a^t = prod_{j<t} (1 + q^(2j+1) bc)."""
    return tuple({-e: v for e, v in p.items()} for p in _ad_block(t))


Terms = Dict[Mono, Laurent]


def _acc(out: Terms, m: Mono, coeff: Laurent) -> None:
    cur = out.get(m)
    if cur is None:
        out[m] = dict(coeff)
        return
    for e, v in coeff.items():
        s = cur.get(e, 0) + v
        if s:
            cur[e] = s
        else:
            cur.pop(e, None)
    if not cur:
        del out[m]


def _times_a(m: Mono, j: int) -> Iterator[Tuple[Mono, Laurent]]:
    k, l, c, n = m
    if j == 0:
        yield m, {0: 1}
    elif n == 0:
        # b^l c^m a^j = q^{j(l+m)} a^j b^l c^m
        yield Mono(k + j, l, c, 0), {j * (l + c): 1}
    else:
        t = min(n, j)
        alpha, beta = j - t, n - t
        for r, p in enumerate(_da_block(t)):
            # d^beta (bc)^r a^alpha, with alpha * beta == 0
            if alpha:
                base = Mono(alpha, r, r, 0)
                shift = 2 * r * alpha
            else:
                base = Mono(0, r, r, beta)
                shift = 2 * r * beta
            # b^l c^m in front of base: a^alpha must pass b^l c^m
            yield Mono(base.ka, base.lb + l, base.mc + c, base.nd), _lshift(p, shift + alpha * (l + c))


def _times_b(m: Mono, j: int) -> Iterator[Tuple[Mono, Laurent]]:
    k, l, c, n = m
    yield Mono(k, l + j, c, n), {n * j: 1}


def _times_c(m: Mono, j: int) -> Iterator[Tuple[Mono, Laurent]]:
    k, l, c, n = m
    yield Mono(k, l, c + j, n), {n * j: 1}


def _times_d(m: Mono, j: int) -> Iterator[Tuple[Mono, Laurent]]:
    k, l, c, n = m
    if j == 0 or k == 0:
        yield Mono(k, l, c, n + j), {0: 1}
        return
    t = min(k, j)
    for r, p in enumerate(_ad_block(t)):
        yield Mono(k - t, l + r, c + r, j - t), _lshift(p, -t * (l + c))


_STEPS = (_times_a, _times_b, _times_c, _times_d)


@functools.lru_cache(maxsize=200_000)
def mono_product(x: Mono, y: Mono) -> Tuple[Tuple[Mono, Tuple[Tuple[int, int], ...]], ...]:
    """Structure constants of x*y: tuple of (monomial, Laurent coefficient items)."""
    cur: Terms = {x: {0: 1}}
    for step, j in zip(_STEPS, y):
        if not j:
            continue
        nxt: Terms = {}
        for m, coeff in cur.items():
            for m2, c2 in step(m, j):
                _acc(nxt, m2, _lmul(coeff, c2))
        cur = nxt
    return tuple(sorted((m, tuple(sorted(c.items()))) for m, c in cur.items()))


@functools.lru_cache(maxsize=200_000)
def _mono_product_ratq(x: Mono, y: Mono) -> Tuple[Tuple[Mono, RatQ], ...]:
    return tuple((m, RatQ.from_laurent(dict(c))) for m, c in mono_product(x, y))


def word_structure(word: Sequence[Tuple[str, int]]) -> Terms:
    """PBW expansion of a product of letter powers, as Laurent structure constants."""
    cur: Terms = {UNIT: {0: 1}}
    for ch, e in word:
        if e < 0:
            raise ValueError(f"negative exponent on letter {ch!r}")
        if e == 0:
            continue
        step = _STEPS[LETTERS.index(ch)]
        nxt: Terms = {}
        for m, coeff in cur.items():
            for m2, c2 in step(m, e):
                _acc(nxt, m2, _lmul(coeff, c2))
        cur = nxt
    return cur


# -- NCPoly ------------------------------------------------------------------

class NCPoly:
    """Element of A(SL_q(2)): a finite Q(q)-combination of PBW monomials."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Union[Mapping[Mono, RatQ], None] = None):
        t = {}
        for m, v in (terms or {}).items():
            if not isinstance(m, Mono):
                m = Mono(*m)
            if not m.is_pbw():
                raise ValueError(f"{m} is not a PBW monomial; use normalize()")
            v = v if isinstance(v, RatQ) else RatQ(v)
            if v:
                t[m] = v
        self.terms: Dict[Mono, RatQ] = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Mono, RatQ]) -> "NCPoly":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def scalar(cls, v) -> "NCPoly":
        v = v if isinstance(v, RatQ) else RatQ(v)
        return cls._raw({UNIT: v} if v else {})

    @classmethod
    def mono(cls, m: Mono, coeff: RatQ = ONE) -> "NCPoly":
        return cls._raw({m: coeff} if coeff else {})

    @classmethod
    def gen(cls, ch: str) -> "NCPoly":
        return cls.mono(Mono.letter(ch))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if isinstance(other, (int, RatQ)):
            return self == NCPoly.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = _as_poly(other)
        t = dict(self.terms)
        for m, v in other.terms.items():
            s = t.get(m, ZERO) + v
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return NCPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, RatQ)):
            return self.scale(other)
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, RatQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in A(SL_q(2))")
        out = ONE_POLY
        for _ in range(n):
            out = out * self
        return out

    def scale(self, s) -> "NCPoly":
        s = s if isinstance(s, RatQ) else RatQ(s)
        if not s:
            return NCPoly._raw({})
        return NCPoly._raw({m: v * s for m, v in self.terms.items()})

    def coeff(self, m: Mono) -> RatQ:
        return self.terms.get(m, ZERO)

    def sorted_terms(self) -> List[Tuple[Mono, RatQ]]:
        return sorted(self.terms.items())

    def max_degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def __str__(self):
        return render_ncpoly(self)

    def __repr__(self):
        return f"NCPoly({render_ncpoly(self)!r})"


def _as_poly(x) -> NCPoly:
    if isinstance(x, NCPoly):
        return x
    return NCPoly.scalar(x)


ZERO_POLY = NCPoly._raw({})
ONE_POLY = NCPoly._raw({UNIT: ONE})


def nc_add(x: NCPoly, y: NCPoly) -> NCPoly:
    return x + y


def nc_mul(x: NCPoly, y: NCPoly) -> NCPoly:
    out: Dict[Mono, RatQ] = {}
    for m1, v1 in x.terms.items():
        for m2, v2 in y.terms.items():
            v12 = v1 * v2
            for m, sc in _mono_product_ratq(m1, m2):
                s = out.get(m, ZERO) + v12 * sc
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
    return NCPoly._raw(out)


def normalize(word: Sequence[Tuple[str, int]], coeff=ONE) -> NCPoly:
    """PBW normal form of ``coeff * l1^e1 l2^e2 ...`` for letters in 'abcd'."""
    coeff = coeff if isinstance(coeff, RatQ) else RatQ(coeff)
    return NCPoly._raw({m: coeff * RatQ.from_laurent(c) for m, c in word_structure(word).items() if c})


def monomial_word(m: Mono) -> List[Tuple[str, int]]:
    return [(ch, e) for ch, e in zip(LETTERS, m) if e]


def normalize_letters(letters: str, coeff=ONE) -> NCPoly:
    """Convenience: normalize a plain letter string such as ``"dcba"``."""
    return normalize([(ch, 1) for ch in letters], coeff)


# -- grading and counit ------------------------------------------------------

def zdegree(m: Mono) -> int:
    """z-exponent of a monomial under the U(1) coaction (a, c -> +1; b, d -> -1)."""
    return m.zdegree()


def graded_component(x: NCPoly, mu: int) -> NCPoly:
    """Part of x in P_mu, i.e. the terms of z-degree -mu."""
    return NCPoly._raw({m: v for m, v in x.terms.items() if m.zdegree() == -mu})


def winding_numbers(x: NCPoly) -> List[int]:
    return sorted({-m.zdegree() for m in x.terms})


def is_homogeneous(x: NCPoly) -> bool:
    return len({m.zdegree() for m in x.terms}) <= 1


def is_coinvariant(x: NCPoly) -> bool:
    return all(m.zdegree() == 0 for m in x.terms)


def counit_mono(m: Mono) -> int:
    return 1 if m.lb == 0 and m.mc == 0 else 0


def counit(x: NCPoly) -> RatQ:
    out = ZERO
    for m, v in x.terms.items():
        if counit_mono(m):
            out = out + v
    return out


# -- specialisation ----------------------------------------------------------

def specialised_product(x: Mapping[Mono, object], y: Mapping[Mono, object], qpow: Callable[[int], object]) -> Dict[Mono, object]:
    """Product of two elements whose coefficients are numbers, at a fixed q.

    ``qpow(e)`` must return q0**e in the number type in use.
    """
    out: Dict[Mono, object] = {}
    for m1, v1 in x.items():
        for m2, v2 in y.items():
            v12 = v1 * v2
            for m, lc in mono_product(m1, m2):
                sc = sum(c * qpow(e) for e, c in lc)
                out[m] = out.get(m, 0) + v12 * sc
    return out


# -- rendering ---------------------------------------------------------------

def render_ncpoly(x: NCPoly) -> str:
    """Terms sorted by (ka, lb, mc, nd), e.g. ``1 + q^-1*b*c``."""
    if not x.terms:
        return "0"
    from .exactq import render_ratq

    parts = []
    for m, v in x.sorted_terms():
        lt = v.laurent_terms()
        neg = False
        if lt is not None and len(lt) == 1:
            (e, c), = lt.items()
            neg = c < 0
            cs = render_ratq(RatQ.q_power(e, -c if neg else c))
        else:
            cs = "(" + render_ratq(v) + ")"
        if m == UNIT:
            body = cs
        elif cs == "1":
            body = m.render()
        else:
            body = f"{cs}*{m.render()}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def iter_monomials(max_degree: int) -> Iterator[Mono]:
    """All PBW monomials of total degree <= max_degree."""
    for k in range(max_degree + 1):
        for l in range(max_degree + 1 - k):
            for m in range(max_degree + 1 - k - l):
                for n in range(max_degree + 1 - k - l - m):
                    if k and n:
                        continue
                    yield Mono(k, l, m, n)
