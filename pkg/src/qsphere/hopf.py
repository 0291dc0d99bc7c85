"""Hopf-algebra structure of A(SL_q(2)) and executable axiom checks.

Comultiplication is the matrix coproduct
``Δ(a) = a⊗a + b⊗c``, ``Δ(b) = a⊗b + b⊗d``, ``Δ(c) = c⊗a + d⊗c``,
``Δ(d) = c⊗b + d⊗d``; the antipode is the anti-homomorphism
``S(a) = d, S(b) = -q b, S(c) = -q^-1 c, S(d) = a``.

The U(1) coaction is ``(id ⊗ π)∘Δ`` where π sends a -> z, d -> z^-1 and kills
b, c.  :func:`coaction` reads it off the grading; :func:`coaction_via_delta`
computes it from Δ and π so the two can be compared.
"""

from __future__ import annotations

import functools
from typing import Dict, Iterable, List, Mapping, Tuple

from .exactq import ONE, ZERO, RatQ
from .ncalg import (
    LETTERS,
    ONE_POLY,
    UNIT,
    Mono,
    NCPoly,
    _mono_product_ratq,
    counit,
    counit_mono,
    iter_monomials,
    nc_mul,
)

Pair = Tuple[Mono, Mono]


class TensorPoly:
    """Element of A ⊗ A, keyed by pairs of PBW monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Pair, RatQ] = None):
        self.terms: Dict[Pair, RatQ] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def simple(cls, x: NCPoly, y: NCPoly) -> "TensorPoly":
        out = {}
        for m1, v1 in x.terms.items():
            for m2, v2 in y.terms.items():
                out[(m1, m2)] = v1 * v2
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + v
        return TensorPoly(t)

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        out: Dict[Pair, RatQ] = {}
        for (x1, y1), v1 in self.terms.items():
            for (x2, y2), v2 in other.terms.items():
                v = v1 * v2
                for mx, sx in _mono_product_ratq(x1, x2):
                    vx = v * sx
                    for my, sy in _mono_product_ratq(y1, y2):
                        k = (mx, my)
                        out[k] = out.get(k, ZERO) + vx * sy
        return TensorPoly(out)

    def __repr__(self):
        body = " + ".join(f"({v})*{x.render()}⊗{y.render()}" for (x, y), v in sorted(self.terms.items()))
        return f"TensorPoly({body or '0'})"


def _gen(ch: str) -> Mono:
    return Mono.letter(ch)


_DELTA_GEN = {
    "a": [("a", "a"), ("b", "c")],
    "b": [("a", "b"), ("b", "d")],
    "c": [("c", "a"), ("d", "c")],
    "d": [("c", "b"), ("d", "d")],
}

_TENSOR_ONE = TensorPoly({(UNIT, UNIT): ONE})


@functools.lru_cache(maxsize=None)
def _delta_letter_power(ch: str, e: int) -> TensorPoly:
    if e == 0:
        return _TENSOR_ONE
    g = TensorPoly({(_gen(x), _gen(y)): ONE for x, y in _DELTA_GEN[ch]})
    return _delta_letter_power(ch, e - 1) * g


@functools.lru_cache(maxsize=None)
def delta_mono(m: Mono) -> TensorPoly:
    out = _TENSOR_ONE
    for ch, e in zip(LETTERS, m):
        if e:
            out = out * _delta_letter_power(ch, e)
    return out


def delta(x: NCPoly) -> TensorPoly:
    """Comultiplication, extended multiplicatively from the generators."""
    out: Dict[Pair, RatQ] = {}
    for m, v in x.terms.items():
        for k, w in delta_mono(m).terms.items():
            out[k] = out.get(k, ZERO) + v * w
    return TensorPoly(out)


_ANTIPODE_GEN = {
    "a": NCPoly.gen("d"),
    "b": NCPoly.gen("b").scale(RatQ.q_power(1, -1)),
    "c": NCPoly.gen("c").scale(RatQ.q_power(-1, -1)),
    "d": NCPoly.gen("a"),
}


@functools.lru_cache(maxsize=None)
def antipode_mono(m: Mono) -> NCPoly:
    # anti-homomorphism: S(a^k b^l c^m d^n) = S(d)^n S(c)^m S(b)^l S(a)^k
    out = ONE_POLY
    for ch, e in reversed(list(zip(LETTERS, m))):
        for _ in range(e):
            out = nc_mul(out, _ANTIPODE_GEN[ch])
    return out


def antipode(x: NCPoly) -> NCPoly:
    out = NCPoly()
    for m, v in x.terms.items():
        out = out + antipode_mono(m).scale(v)
    return out


def coaction(x: NCPoly) -> Dict[int, NCPoly]:
    """U(1) coaction as ``{z-exponent: component}``; read off the grading."""
    parts: Dict[int, Dict[Mono, RatQ]] = {}
    for m, v in x.terms.items():
        parts.setdefault(m.zdegree(), {})[m] = v
    return {e: NCPoly._raw(t) for e, t in sorted(parts.items())}


def _pi_exponent(m: Mono):
    """π(m) = z^e, or None when π(m) = 0."""
    if m.lb or m.mc:
        return None
    return m.ka - m.nd


def coaction_via_delta(x: NCPoly) -> Dict[int, NCPoly]:
    """(id ⊗ π)∘Δ computed honestly through the coproduct."""
    parts: Dict[int, NCPoly] = {}
    for (m1, m2), v in delta(x).terms.items():
        e = _pi_exponent(m2)
        if e is None:
            continue
        parts[e] = parts.get(e, NCPoly()) + NCPoly.mono(m1, v)
    return {e: p for e, p in sorted(parts.items()) if p}


# -- axiom checks --------------------------------------------------------------

Triple = Tuple[Mono, Mono, Mono]


def _delta_left(t: TensorPoly) -> Dict[Triple, RatQ]:
    out: Dict[Triple, RatQ] = {}
    for (x, y), v in t.terms.items():
        for (x1, x2), w in delta_mono(x).terms.items():
            k = (x1, x2, y)
            out[k] = out.get(k, ZERO) + v * w
    return {k: v for k, v in out.items() if v}


def _delta_right(t: TensorPoly) -> Dict[Triple, RatQ]:
    out: Dict[Triple, RatQ] = {}
    for (x, y), v in t.terms.items():
        for (y1, y2), w in delta_mono(y).terms.items():
            k = (x, y1, y2)
            out[k] = out.get(k, ZERO) + v * w
    return {k: v for k, v in out.items() if v}


def is_coassociative(x: NCPoly) -> bool:
    d = delta(x)
    return _delta_left(d) == _delta_right(d)


def check_coassociativity(sample: Iterable[NCPoly]) -> bool:
    return all(is_coassociative(x) for x in sample)


def counit_axiom_holds(x: NCPoly) -> bool:
    """(ε ⊗ id)Δ(x) = x = (id ⊗ ε)Δ(x)."""
    left: Dict[Mono, RatQ] = {}
    right: Dict[Mono, RatQ] = {}
    for (m1, m2), v in delta(x).terms.items():
        if counit_mono(m1):
            left[m2] = left.get(m2, ZERO) + v
        if counit_mono(m2):
            right[m1] = right.get(m1, ZERO) + v
    return NCPoly(left) == x and NCPoly(right) == x


def check_counit_axiom(sample: Iterable[NCPoly]) -> bool:
    return all(counit_axiom_holds(x) for x in sample)


def antipode_axiom_holds(x: NCPoly) -> bool:
    """m(S ⊗ id)Δ(x) = ε(x)1 = m(id ⊗ S)Δ(x)."""
    target = NCPoly.scalar(counit(x))
    left = NCPoly()
    right = NCPoly()
    for (m1, m2), v in delta(x).terms.items():
        left = left + nc_mul(antipode_mono(m1), NCPoly.mono(m2, v))
        right = right + nc_mul(NCPoly.mono(m1, v), antipode_mono(m2))
    return left == target and right == target


def check_antipode_axiom(sample: Iterable[NCPoly]) -> bool:
    return all(antipode_axiom_holds(x) for x in sample)


def delta_is_multiplicative(x: NCPoly, y: NCPoly) -> bool:
    return delta(nc_mul(x, y)) == delta(x) * delta(y)


def grading_consistent(m: Mono) -> bool:
    """Coaction of a basis monomial is concentrated at its z-degree."""
    x = NCPoly.mono(m)
    return coaction_via_delta(x) == {m.zdegree(): x} and coaction(x) == {m.zdegree(): x}


def check_grading_consistency(max_degree: int = 5) -> List[Mono]:
    """Monomials of degree <= max_degree that violate consistency (empty when all pass)."""
    return [m for m in iter_monomials(max_degree) if not grading_consistent(m)]
