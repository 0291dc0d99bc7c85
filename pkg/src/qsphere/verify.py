"""Verification suites and the machine-readable run report."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import __version__
from .bundles import (
    PairingNotIntegerError,
    PairingReport,
    Side,
    build,
    build_e,
    chern_pairing,
    closed_form_pairing,
    closed_form_trace,
    entries_coinvariant,
    is_idempotent,
    mat_trace,
    numeric_check,
    tau0,
)
from .exactq import RatQ
from .hopf import antipode_axiom_holds, check_grading_consistency, counit_axiom_holds, is_coassociative
from .ncalg import NCPoly, Mono, iter_monomials, nc_mul, normalize_letters
from .wordrewrite import random_word, reduce_word

ALL_CHECKS = ("idempotent", "pairing", "rank", "coinvariance", "closed_forms", "hopf_axioms", "confluence")
SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


@dataclass
class VerifyConfig:
    mu_min: int = -4
    mu_max: int = 4
    checks: Tuple[str, ...] = ALL_CHECKS
    q_numeric: Optional[Fraction] = None
    format: str = "text"
    seed: int = 0
    random_cases: int = 500
    hopf_random_cases: int = 100
    timing: bool = False

    def __post_init__(self):
        if self.mu_min > self.mu_max:
            raise UsageError(f"empty mu range {self.mu_min}..{self.mu_max}")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
        self.checks = tuple(c for c in ALL_CHECKS if c in self.checks)
        if self.q_numeric is not None:
            self.q_numeric = Fraction(self.q_numeric)
            if self.q_numeric in (0, 1, -1):
                raise UsageError(f"--q-numeric {self.q_numeric} is excluded (q must not be 0 or a root of unity)")
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")

    @property
    def mus(self) -> range:
        return range(self.mu_min, self.mu_max + 1)

    def to_json(self) -> dict:
        return {
            "mu_min": self.mu_min,
            "mu_max": self.mu_max,
            "checks": list(self.checks),
            "q_numeric": None if self.q_numeric is None else str(self.q_numeric),
            "seed": self.seed,
        }


@dataclass
class SuiteResult:
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def record(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label)

    def to_json(self) -> dict:
        return {"status": self.status, "cases": self.cases, "failures": list(self.failures)}


@dataclass
class RunReport:
    config: dict
    per_mu: List[PairingReport] = field(default_factory=list)
    suites: Dict[str, SuiteResult] = field(default_factory=dict)
    timing_ms: Optional[Dict[str, float]] = None
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(s.status == "pass" for s in self.suites.values())

    def pairing_table(self) -> List[List[int]]:
        """Observed (rank, Chern) pairs for the left projectors."""
        return sorted({(p.rank, p.chern) for p in self.per_mu if p.side is Side.LEFT})

    def to_json(self) -> dict:
        d = {
            "version": self.version,
            "schema": SCHEMA_VERSION,
            "config": self.config,
            "status": "pass" if self.passed else "fail",
            "per_mu": [p.to_json() for p in self.per_mu],
            "pairing_table": [list(t) for t in self.pairing_table()],
            "suites": {k: v.to_json() for k, v in self.suites.items()},
        }
        if self.timing_ms is not None:
            d["timing_ms"] = self.timing_ms
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, d: dict) -> "RunReport":
        suites = {k: SuiteResult(v["cases"], list(v["failures"])) for k, v in d["suites"].items()}
        return cls(
            config=d["config"],
            per_mu=[PairingReport.from_json(p) for p in d["per_mu"]],
            suites=suites,
            timing_ms=d.get("timing_ms"),
            version=d["version"],
        )


# -- random elements -------------------------------------------------------------

def random_mono(rng: random.Random, max_degree: int) -> Mono:
    monos = _monos_upto(max_degree)
    return monos[rng.randrange(len(monos))]


_MONO_CACHE: Dict[int, List[Mono]] = {}


def _monos_upto(d: int) -> List[Mono]:
    if d not in _MONO_CACHE:
        _MONO_CACHE[d] = list(iter_monomials(d))
    return _MONO_CACHE[d]


def random_coeff(rng: random.Random) -> RatQ:
    return RatQ.q_power(rng.randint(-2, 2), rng.choice([-2, -1, 1, 1, 2, 3]))


def random_element(rng: random.Random, max_degree: int, max_terms: int = 3) -> NCPoly:
    out = NCPoly()
    for _ in range(rng.randint(1, max_terms)):
        out = out + NCPoly.mono(random_mono(rng, max_degree), random_coeff(rng))
    return out


def random_coinvariant(rng: random.Random, max_degree: int, max_terms: int = 3) -> NCPoly:
    choices = [m for m in _monos_upto(max_degree) if m.zdegree() == 0]
    out = NCPoly()
    for _ in range(rng.randint(1, max_terms)):
        out = out + NCPoly.mono(rng.choice(choices), random_coeff(rng))
    return out


# -- suites ------------------------------------------------------------------------

def _suite_idempotent(cfg: VerifyConfig, res: SuiteResult) -> None:
    for mu in cfg.mus:
        for side in Side:
            res.record(is_idempotent(build(mu, side)), f"mu={mu} {side.value}: X^2 != X")


def _suite_coinvariance(cfg: VerifyConfig, res: SuiteResult) -> None:
    for mu in cfg.mus:
        for side in Side:
            res.record(entries_coinvariant(build(mu, side)), f"mu={mu} {side.value}: entry outside A(S_q^2)")


def _suite_pairing(cfg: VerifyConfig, res: SuiteResult, reports: Dict[Tuple[int, Side], PairingReport]) -> None:
    for mu in cfg.mus:
        for side in Side:
            rep = reports.get((mu, side))
            expected = mu if side is Side.LEFT else -mu
            if rep is None:
                res.record(False, f"mu={mu} {side.value}: pairing is not an integer constant")
            else:
                res.record(rep.chern == expected, f"mu={mu} {side.value}: chern {rep.chern} != {expected}")
    # right pairing of mu equals left pairing of -mu
    for mu in cfg.mus:
        r, l = reports.get((mu, Side.RIGHT)), reports.get((-mu, Side.LEFT))
        if r is not None and l is not None:
            res.record(r.chern == l.chern, f"mu={mu}: <tau1, f_mu> != <tau1, e_-mu>")


def _suite_rank(cfg: VerifyConfig, res: SuiteResult, reports) -> None:
    for mu in cfg.mus:
        for side in Side:
            rep = reports.get((mu, side))
            res.record(rep is not None and rep.rank == 1, f"mu={mu} {side.value}: rank pairing != 1")


def _suite_closed_forms(cfg: VerifyConfig, res: SuiteResult) -> None:
    for mu in cfg.mus:
        res.record(closed_form_trace(mu) == mat_trace(build_e(mu)), f"mu={mu}: closed-form trace differs from Tr(e_mu)")
    top = max(abs(cfg.mu_min), abs(cfg.mu_max))
    for n in range(1, top + 1):
        for sign, expected in (("-", -n), ("+", n)):
            res.record(closed_form_pairing(n, sign).as_integer() == expected, f"n={n} sign {sign}: double sum != {expected}")


def _suite_hopf(cfg: VerifyConfig, res: SuiteResult) -> None:
    rng = random.Random(cfg.seed)
    sample = [NCPoly.gen(ch) for ch in "abcd"] + [NCPoly.scalar(1)]
    sample += [random_element(rng, 3) for _ in range(cfg.hopf_random_cases)]
    for i, x in enumerate(sample):
        res.record(is_coassociative(x), f"sample {i} ({x}): coassociativity")
        res.record(counit_axiom_holds(x), f"sample {i} ({x}): counit axiom")
        res.record(antipode_axiom_holds(x), f"sample {i} ({x}): antipode axiom")
    bad = check_grading_consistency(5)
    res.cases += sum(1 for _ in iter_monomials(5))
    res.failures.extend(f"monomial {m.render()}: coaction not at z^{m.zdegree()}" for m in bad)


def _suite_confluence(cfg: VerifyConfig, res: SuiteResult) -> None:
    rng = random.Random(cfg.seed + 1)
    for _ in range(cfg.random_cases):
        w = random_word(rng, 8)
        block = normalize_letters(w)
        ok = block == reduce_word(w) == reduce_word(w, rng=rng)
        res.record(ok, f"word {w!r}: reduction orders disagree")
    for _ in range(cfg.random_cases):
        x, y, z = (random_element(rng, 4) for _ in range(3))
        res.record(nc_mul(nc_mul(x, y), z) == nc_mul(x, nc_mul(y, z)), f"associativity fails for ({x}), ({y}), ({z})")


def _suite_numeric(cfg: VerifyConfig, res: SuiteResult, reports) -> None:
    for mu in cfg.mus:
        for side in Side:
            rep = reports.get((mu, side))
            r = numeric_check(build(mu, side), cfg.q_numeric, None if rep is None else rep.chern)
            res.record(r.ok, f"mu={mu} {side.value} at q={cfg.q_numeric}: residual {r.exact_residual}, float {r.float_residual:.3g}, pairing {r.exact_pairing}")


def run_verify(cfg: VerifyConfig) -> RunReport:
    report = RunReport(config=cfg.to_json())
    timing: Dict[str, float] = {}

    def timed(name: str, fn: Callable, *args) -> None:
        t0 = time.perf_counter()
        res = SuiteResult()
        fn(cfg, res, *args)
        timing[name] = round((time.perf_counter() - t0) * 1000, 1)
        report.suites[name] = res

    reports: Dict[Tuple[int, Side], PairingReport] = {}
    t0 = time.perf_counter()
    for mu in cfg.mus:
        for side in Side:
            try:
                rep = chern_pairing(build(mu, side))
            except PairingNotIntegerError:
                continue
            reports[(mu, side)] = rep
            report.per_mu.append(rep)
    timing["pairing_table"] = round((time.perf_counter() - t0) * 1000, 1)

    for name in cfg.checks:
        if name == "idempotent":
            timed(name, _suite_idempotent)
        elif name == "coinvariance":
            timed(name, _suite_coinvariance)
        elif name == "pairing":
            timed(name, _suite_pairing, reports)
        elif name == "rank":
            timed(name, _suite_rank, reports)
        elif name == "closed_forms":
            timed(name, _suite_closed_forms)
        elif name == "hopf_axioms":
            timed(name, _suite_hopf)
        elif name == "confluence":
            timed(name, _suite_confluence)
    if cfg.q_numeric is not None:
        timed("numeric", _suite_numeric, reports)
    if cfg.timing:
        report.timing_ms = timing
    return report


def render_text(report: RunReport) -> str:
    lines = [f"qsphere {report.version}  mu in [{report.config['mu_min']}, {report.config['mu_max']}]", ""]
    lines.append(f"{'mu':>4}  {'side':<5}  {'rank':>4}  {'chern':>5}")
    for p in report.per_mu:
        lines.append(f"{p.mu:>4}  {p.side.value:<5}  {p.rank:>4}  {p.chern:>5}")
    lines.append("")
    table = ", ".join(f"({r}, {c})" for r, c in report.pairing_table())
    lines.append(f"(rank, chern) pairs of left projectors: {{{table}}}")
    lines.append("")
    for name, s in report.suites.items():
        lines.append(f"{name:<14} {s.status.upper():<4}  {s.cases} cases")
        for f in s.failures[:10]:
            lines.append(f"    {f}")
    if report.timing_ms:
        lines.append("")
        lines.extend(f"{k:<14} {v:.1f} ms" for k, v in report.timing_ms.items())
    lines.append("")
    lines.append("overall: " + ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"
