"""Quantum Hopf line bundles over the standard Podleś sphere.

Builds the left projectors ``e_mu`` and right projectors ``f_mu`` of the line
bundle of winding number ``mu``.  It also provides the two traces on
A(S_q^2) and the Chern-Connes pairing with those projectors.

The Chern trace τ¹ is given on the spanning family ``(ab)^m ζ^n`` and
``(cd)^m ζ^n`` with ``ζ = -q^-1 bc``.  It is 1/(1 - q^2n) when m = 0 and
n > 0, and 0 otherwise.  Here it is evaluated on the PBW basis instead:

* ``b^n c^n`` (n > 0) equals ``(-q)^n ζ^n``, since b and c commute, so
  τ¹(b^n c^n) = (-q)^n / (1 - q^2n).
* A degree-0 PBW monomial containing ``a`` has the form ``a^k b^(k+m) c^m``
  with k > 0.  It is a power of q times ``(ab)^k ζ^m``, so τ¹ is 0 on it.
  The ``d`` family is the same: ``b^p c^(p+s) d^s`` is a power of q times
  ``(cd)^s ζ^p``.  A power-of-q rescaling cannot turn 0 into anything else.
* τ¹(1) = 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .exactq import ONE, ZERO, RatQ, render_ratq
from .ncalg import (
    ONE_POLY,
    UNIT,
    Mono,
    NCPoly,
    counit,
    is_coinvariant,
    nc_mul,
    normalize,
    specialised_product,
)
from .qcomb import x_binomial, x_shifted_binomial

Q2 = RatQ.q_power(2)
QM2 = RatQ.q_power(-2)


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class NotCoinvariantError(ValueError):
    pass


class PairingNotIntegerError(ArithmeticError):
    """The pairing did not collapse to an integer constant."""


Matrix = List[List[NCPoly]]


@dataclass(frozen=True)
class ProjMatrix:
    mu: int
    side: Side
    entries: tuple  # tuple of row tuples of NCPoly

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def __getitem__(self, kl):
        k, l = kl
        return self.entries[k][l]


def _e_entry(mu: int, k: int, l: int) -> NCPoly:
    if mu <= 0:
        n = -mu
        coeff = x_binomial(n, l, Q2) * RatQ.q_power(l, (-1) ** l)
        word = [("a", n - k), ("c", k), ("b", l), ("d", n - l)]
    else:
        n = mu
        coeff = x_binomial(n, l, Q2) * RatQ.q_power(-l, (-1) ** l)
        word = [("b", k), ("d", n - k), ("a", n - l), ("c", l)]
    return normalize(word, coeff)


def _f_entry(mu: int, l: int, k: int) -> NCPoly:
    if mu <= 0:
        n = -mu
        coeff = x_binomial(n, l, Q2) * RatQ.q_power(-l, (-1) ** l)
        word = [("b", l), ("d", n - l), ("a", n - k), ("c", k)]
    else:
        n = mu
        coeff = x_binomial(n, l, Q2) * RatQ.q_power(l, (-1) ** l)
        word = [("a", n - l), ("c", l), ("b", k), ("d", n - k)]
    return normalize(word, coeff)


def build_e(mu: int) -> ProjMatrix:
    """Left projector; entry (k, l) with 0 <= k, l <= |mu|."""
    n = abs(mu)
    rows = tuple(tuple(_e_entry(mu, k, l) for l in range(n + 1)) for k in range(n + 1))
    return ProjMatrix(mu, Side.LEFT, rows)


def build_f(mu: int) -> ProjMatrix:
    """Right projector; the row index is l and the column index is k."""
    n = abs(mu)
    rows = tuple(tuple(_f_entry(mu, l, k) for k in range(n + 1)) for l in range(n + 1))
    return ProjMatrix(mu, Side.RIGHT, rows)


def build(mu: int, side: Side) -> ProjMatrix:
    return build_e(mu) if Side(side) is Side.LEFT else build_f(mu)


def mat_mul(x, y) -> Matrix:
    xr = x.rows() if isinstance(x, ProjMatrix) else x
    yr = y.rows() if isinstance(y, ProjMatrix) else y
    if not xr or len(xr[0]) != len(yr):
        raise ValueError(f"dimension mismatch: {len(xr)}x{len(xr[0]) if xr else 0} times {len(yr)}x?")
    n, p = len(xr), len(yr[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = NCPoly()
            for k in range(len(yr)):
                acc = acc + nc_mul(xr[i][k], yr[k][j])
            row.append(acc)
        out.append(row)
    return out


def identity_matrix(n: int) -> Matrix:
    return [[ONE_POLY if i == j else NCPoly() for j in range(n)] for i in range(n)]


def is_idempotent(x: ProjMatrix) -> bool:
    return mat_mul(x, x) == x.rows()


def entries_coinvariant(x: ProjMatrix) -> bool:
    return all(is_coinvariant(v) for row in x.entries for v in row)


def mat_trace(x) -> NCPoly:
    rows = x.rows() if isinstance(x, ProjMatrix) else x
    acc = NCPoly()
    for i in range(len(rows)):
        acc = acc + rows[i][i]
    return acc


# -- traces --------------------------------------------------------------------

def _require_coinvariant(x: NCPoly, name: str) -> None:
    if not is_coinvariant(x):
        raise NotCoinvariantError(f"{name} is only defined on A(S_q^2); argument has nonzero z-degree")


def tau0(x: NCPoly) -> RatQ:
    """Rank trace: the counit restricted to the sphere."""
    _require_coinvariant(x, "tau0")
    return counit(x)


def tau1_bc_power(n: int) -> RatQ:
    """τ¹(b^n c^n) = (-q)^n / (1 - q^2n), n > 0."""
    return RatQ.q_power(n, (-1) ** n) / (ONE - RatQ.q_power(2 * n))


def tau1_terms(x: NCPoly) -> Dict[int, RatQ]:
    """Contributions of each ζ-degree n to τ¹(x), before summation."""
    _require_coinvariant(x, "tau1")
    out: Dict[int, RatQ] = {}
    for m, v in x.terms.items():
        if m.ka == 0 and m.nd == 0 and m.lb == m.mc and m.lb > 0:
            out[m.lb] = v * tau1_bc_power(m.lb)
    return dict(sorted(out.items()))


def tau1(x: NCPoly) -> RatQ:
    total = ZERO
    for v in tau1_terms(x).values():
        total = total + v
    return total


# -- pairing ---------------------------------------------------------------------

@dataclass
class PairingReport:
    mu: int
    side: Side
    rank: int
    chern: int
    terms: Dict[int, RatQ] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "side": Side(self.side).value,
            "rank": self.rank,
            "chern": self.chern,
            "terms": [{"degree": m, "value": render_ratq(v)} for m, v in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, d: dict) -> "PairingReport":
        from .exactq import parse_ratq

        return cls(
            mu=d["mu"],
            side=Side(d["side"]),
            rank=d["rank"],
            chern=d["chern"],
            terms={t["degree"]: parse_ratq(t["value"]) for t in d["terms"]},
        )


def chern_pairing(x: ProjMatrix, check_idempotent: bool = False) -> PairingReport:
    """τ⁰ and τ¹ of Tr(x), with the per-ζ-degree breakdown of τ¹.

    Raises :class:`PairingNotIntegerError` when either value is not an
    integer constant.
    """
    if check_idempotent and not is_idempotent(x):
        raise ValueError(f"matrix for mu={x.mu} ({x.side.value}) is not idempotent")
    tr = mat_trace(x)
    terms = tau1_terms(tr)
    total = ZERO
    for v in terms.values():
        total = total + v
    chern = total.as_integer()
    rank = tau0(tr).as_integer()
    if chern is None:
        raise PairingNotIntegerError(f"tau1 pairing for mu={x.mu} is {render_ratq(total)}, not an integer")
    if rank is None:
        raise PairingNotIntegerError(f"tau0 pairing for mu={x.mu} is not an integer")
    return PairingReport(x.mu, x.side, rank, chern, terms)


# -- closed forms from the proof -------------------------------------------------

ZETA = normalize([("b", 1), ("c", 1)], RatQ.q_power(-1, -1))


def _zeta_poly(coeffs: Sequence[RatQ]) -> NCPoly:
    """sum_m coeffs[m] ζ^m, expanded in the PBW basis (ζ^m = (-q)^-m b^m c^m)."""
    out = {}
    for m, v in enumerate(coeffs):
        if v:
            out[Mono(0, m, m, 0)] = v * RatQ.q_power(-m, (-1) ** m)
    return NCPoly(out)


def _poly_mul(x: Sequence[RatQ], y: Sequence[RatQ]) -> List[RatQ]:
    out = [ZERO] * (len(x) + len(y) - 1)
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            out[i + j] = out[i + j] + u * v
    return out


def closed_form_trace_zeta(mu: int) -> List[RatQ]:
    """Coefficients in ζ of Tr(e_mu) from the product formulas.

    mu = -n: sum_k (n k)_{q^2} q^{-2k(n-k-1)} ζ^k prod_{l<n-k} (1 - q^{-2l} ζ)
    mu = +n: sum_k (n k)_{q^2} ζ^k prod_{l<n-k} (1 - q^{2(l+1)} ζ)
    """
    n = abs(mu)
    total = [ZERO] * (n + 1)
    for k in range(n + 1):
        lead = x_binomial(n, k, Q2)
        if mu < 0:
            lead = lead * RatQ.q_power(-2 * k * (n - k - 1))
        poly = [ZERO] * k + [lead]
        for l in range(n - k):
            root = RatQ.q_power(-2 * l) if mu < 0 else RatQ.q_power(2 * (l + 1))
            poly = _poly_mul(poly, [ONE, -root])
        for i, v in enumerate(poly):
            total[i] = total[i] + v
    return total


def closed_form_trace(mu: int) -> NCPoly:
    return _zeta_poly(closed_form_trace_zeta(mu))


def closed_form_pairing_terms(n: int, sign: str) -> Dict[int, RatQ]:
    """Per-m summands of the double-sum formula for τ¹(Tr e_{±n})."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for m in range(1, n + 1):
        inner = ZERO
        for k in range(m + 1):
            if sign == "-":
                f = x_binomial(n, k, Q2) * RatQ.q_power(-2 * k * (n - k - 1), (-1) ** k) * x_shifted_binomial(n - k, m - k, QM2)
            elif sign == "+":
                f = x_binomial(n, k, Q2) * RatQ.q_power(2 * (m - k), (-1) ** (m - k)) * x_shifted_binomial(n - k, m - k, Q2)
            else:
                raise ValueError(f"sign must be '+' or '-', got {sign!r}")
            inner = inner + f
        if sign == "-":
            inner = inner * RatQ((-1) ** m)
        out[m] = inner / (ONE - RatQ.q_power(2 * m))
    return out


def closed_form_pairing(n: int, sign: str) -> RatQ:
    total = ZERO
    for v in closed_form_pairing_terms(n, sign).values():
        total = total + v
    return total


def hopf_line_bundle_generators(mu: int) -> List[Mono]:
    """Spanning monomials of P_mu over the sphere."""
    if mu <= 0:
        n = -mu
        return [Mono(n - k, 0, k, 0) for k in range(n + 1)]
    return [Mono(0, k, 0, mu - k) for k in range(mu + 1)]


# -- numeric evaluation ----------------------------------------------------------

@dataclass
class NumericResidual:
    mu: int
    side: Side
    q0: Fraction
    exact_residual: Fraction
    float_residual: float
    exact_pairing: Fraction
    float_pairing: float
    symbolic_pairing: int

    @property
    def ok(self) -> bool:
        return (
            self.exact_residual == 0
            and self.exact_pairing == self.symbolic_pairing
            and self.float_residual < 1e-9
            and abs(self.float_pairing - self.symbolic_pairing) < 1e-9
        )


def _eval_poly(x: NCPoly, q0: Fraction, as_float: bool) -> Dict[Mono, object]:
    out = {}
    for m, v in x.terms.items():
        val = v.eval(q0)
        out[m] = float(val) if as_float else Fraction(val)
    return out


def _numeric_square_residual(rows, q0: Fraction, as_float: bool):
    n = len(rows)
    qf = float(q0) if as_float else q0

    def qpow(e):
        return qf ** e

    worst = 0.0 if as_float else Fraction(0)
    for i in range(n):
        for j in range(n):
            acc: Dict[Mono, object] = {}
            for k in range(n):
                for m, v in specialised_product(rows[i][k], rows[k][j], qpow).items():
                    acc[m] = acc.get(m, 0) + v
            for m, v in rows[i][j].items():
                acc[m] = acc.get(m, 0) - v
            for v in acc.values():
                worst = max(worst, abs(v))
    return worst


def _numeric_tau1(tr: Dict[Mono, object], q0, as_float: bool):
    qf = float(q0) if as_float else q0
    total = 0.0 if as_float else Fraction(0)
    for m, v in tr.items():
        if m.ka == 0 and m.nd == 0 and m.lb == m.mc and m.lb > 0:
            n = m.lb
            total += v * (-qf) ** n / (1 - qf ** (2 * n))
    return total


def numeric_check(x: ProjMatrix, q0, symbolic_pairing: Optional[int] = None) -> NumericResidual:
    """Specialise x at q = q0 and recheck idempotency and the τ¹ pairing there.

    The check runs twice: in exact rationals and in floating point.
    """
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise ValueError(f"q = {q0} is outside the admissible domain")
    if symbolic_pairing is None:
        symbolic_pairing = chern_pairing(x).chern
    results = {}
    for as_float in (False, True):
        rows = [[_eval_poly(v, q0, as_float) for v in row] for row in x.entries]
        res = _numeric_square_residual(rows, q0, as_float)
        tr: Dict[Mono, object] = {}
        for i in range(len(rows)):
            for m, v in rows[i][i].items():
                tr[m] = tr.get(m, 0) + v
        results[as_float] = (res, _numeric_tau1(tr, q0, as_float))
    return NumericResidual(
        mu=x.mu,
        side=x.side,
        q0=q0,
        exact_residual=Fraction(results[False][0]),
        float_residual=float(results[True][0]),
        exact_pairing=Fraction(results[False][1]),
        float_pairing=float(results[True][1]),
        symbolic_pairing=symbolic_pairing,
    )
