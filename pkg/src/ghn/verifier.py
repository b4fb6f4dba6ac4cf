"""Grid execution, polynomial certification, and tiered verdict reporting.

An IdentityEntry pairs two evaluators over a finite grid of exact rational
parameter points.  run_entry grades it:

  CERTIFIED      exact polynomial equality in alpha for every n (strongest),
  HOLDS_ON_GRID  exact agreement at every evaluated cell,
  FAILS          at least one mismatch (ASSERT entries only), carrying the
                 lexicographically smallest failing cell,
  REPORT_ONLY    outcome recorded without judgement (conjectures, suspected
                 typos); such rows always carry at least one sample cell.

Cells whose parameters violate an identity's hypotheses (DomainError or
OutOfValidityRangeError) are skipped and counted, never failed.  Reports are
deterministic functions of (filter, n_max, seed): cells are iterated in
sorted order and wall-clock timings are kept out of the serialized formats.
"""

from __future__ import annotations

import fnmatch
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DomainError, OutOfValidityRangeError
from .exact import RatLike, binom_int
from .polyseries import PolyQ, TruncSeries, geometric, log_one_minus
from .sequences import harmonic_p, skew_harmonic

ASSERT = "ASSERT"
REPORT_ONLY = "REPORT_ONLY"

CERTIFIED = "CERTIFIED"
HOLDS_ON_GRID = "HOLDS_ON_GRID"
FAILS = "FAILS"

Cell = dict


@dataclass
class IdentityEntry:
    """One catalogued identity: two evaluators, a grid, and a policy."""

    id: str
    anchor: str
    cells: list[Cell]
    lhs: Callable[[Cell], Fraction]
    rhs: Callable[[Cell], Fraction]
    policy: str = ASSERT
    note: str = ""
    certify: Callable[[int], bool] | None = None
    poly_param: str | None = None
    poly_degree: Callable[[int], int] | None = None


@dataclass
class EntryResult:
    id: str
    anchor: str
    tier: str
    cells: int
    skipped: int
    counterexamples: list[dict]
    note: str
    seconds: float


@dataclass
class VerdictReport:
    """Per-entry outcomes for one suite run."""

    suite: str
    seed: int
    n_max: int
    results: list[EntryResult] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "n_max": self.n_max,
            "entries": [
                {
                    "id": r.id,
                    "anchor": r.anchor,
                    "tier": r.tier,
                    "cells": r.cells,
                    "skipped": r.skipped,
                    "counterexamples": r.counterexamples,
                    "note": r.note,
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_markdown(self) -> str:
        lines = [
            f"# Identity verification report",
            "",
            f"suite: `{self.suite}`, seed: {self.seed}, n_max: {self.n_max}",
            "",
            "| id | tier | cells | skipped | note |",
            "|---|---|---:|---:|---|",
        ]
        for r in self.results:
            note = r.note.replace("|", "\\|")
            lines.append(f"| {r.id} | {r.tier} | {r.cells} | {r.skipped} | {note} |")
        lines.append("")
        shown = False
        for r in self.results:
            if not r.counterexamples:
                continue
            if not shown:
                lines.append("## Sample cells")
                lines.append("")
                shown = True
            for ce in r.counterexamples:
                params = ", ".join(f"{k}={v}" for k, v in ce["params"].items())
                verdict = "==" if ce["lhs"] == ce["rhs"] else "!="
                lines.append(f"- `{r.id}` at {params}: lhs={ce['lhs']} {verdict} rhs={ce['rhs']}")
        lines.append("")
        return "\n".join(lines)

    def has_assert_failure(self) -> bool:
        return any(r.tier == FAILS for r in self.results)


def rand_rat(rng: random.Random) -> Fraction:
    """Uniform reduced rational with numerator in [-50, 50], denominator in [1, 50]."""
    return Fraction(rng.randint(-50, 50), rng.randint(1, 50))


def oracle_sum(term: Callable[[int], Fraction], k_lo: int, k_hi: int) -> Fraction:
    """Exact sum_{k=k_lo..k_hi} term(k); the empty range gives 0."""
    if k_hi < k_lo - 1:
        raise ValueError("invalid summation range")
    total = Fraction(0)
    for k in range(k_lo, k_hi + 1):
        total += term(k)
    return total


def _cell_key(cell: Cell):
    return tuple(sorted((name, Fraction(value)) for name, value in cell.items()))


def _sample(cell: Cell, lhs: Fraction, rhs: Fraction) -> dict:
    return {
        "params": {name: str(cell[name]) for name in sorted(cell)},
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


def _poly_note(entry: IdentityEntry, cells: list[Cell]) -> str:
    """Check the degree-counting threshold: >= deg+1 distinct sampled values per n."""
    by_n: dict[int, set] = {}
    for cell in cells:
        if "n" in cell and entry.poly_param in cell:
            by_n.setdefault(int(cell["n"]), set()).add(cell[entry.poly_param])
    if not by_n:
        return ""
    if all(len(vals) >= entry.poly_degree(n) + 1 for n, vals in by_n.items()):
        return f"grid has >= degree+1 distinct {entry.poly_param} values per n: pointwise polynomial proof"
    return ""


def run_entry(entry: IdentityEntry, n_max: int = 20, cap: int = 3) -> EntryResult:
    """Evaluate both sides on every grid cell and grade the entry."""
    start = time.perf_counter()
    cells = sorted(entry.cells, key=_cell_key)
    evaluated = 0
    skipped = 0
    mismatches = 0
    counterexamples: list[dict] = []
    agreement: dict | None = None
    for cell in cells:
        try:
            lv = entry.lhs(cell)
            rv = entry.rhs(cell)
        except (DomainError, OutOfValidityRangeError):
            skipped += 1
            continue
        evaluated += 1
        if lv != rv:
            mismatches += 1
            if len(counterexamples) < cap:
                counterexamples.append(_sample(cell, lv, rv))
            if entry.policy == ASSERT:
                break
        elif agreement is None:
            agreement = _sample(cell, lv, rv)
    note = entry.note
    if entry.policy == ASSERT:
        if mismatches:
            tier = FAILS
        else:
            tier = HOLDS_ON_GRID
            if entry.certify is not None and entry.certify(max(n_max, 30)):
                tier = CERTIFIED
            if entry.poly_param is not None and entry.poly_degree is not None:
                extra = _poly_note(entry, cells)
                if extra:
                    note = f"{note} [{extra}]" if note else extra
    else:
        tier = REPORT_ONLY
        outcome = (
            f"agrees at all {evaluated} evaluated cells"
            if mismatches == 0
            else f"disagrees at {mismatches} of {evaluated} evaluated cells"
        )
        note = f"{note} [{outcome}]" if note else outcome
        if not counterexamples and agreement is not None:
            counterexamples.append(agreement)
    return EntryResult(
        id=entry.id,
        anchor=entry.anchor,
        tier=tier,
        cells=evaluated,
        skipped=skipped,
        counterexamples=counterexamples,
        note=note,
        seconds=time.perf_counter() - start,
    )


def certify_alpha_identity(
    lhs_poly: Callable[[int], PolyQ], rhs_poly: Callable[[int], PolyQ], n_max: int
) -> bool:
    """True iff both polynomial constructors agree coefficient-wise for 1..n_max."""
    return all(lhs_poly(n) == rhs_poly(n) for n in range(1, n_max + 1))


def series_lemma_first_diff(
    order: int, lam: RatLike, mu: RatLike, a: Sequence[RatLike]
) -> tuple[int, Fraction, Fraction] | None:
    """First coefficient where f(mu*t/(1-lam*t))/(1-lam*t) departs from the
    binomial-convolution side sum_k C(n,k) mu^k lam^(n-k) a_k, or None."""
    if order < 1:
        raise ValueError("order must be >= 1")
    lam, mu = Fraction(lam), Fraction(mu)
    f = TruncSeries(a, order)
    inner = [Fraction(0)]
    for k in range(1, order + 1):
        inner.append(mu * lam ** (k - 1))
    lhs = f.compose(TruncSeries(inner, order)) * geometric(lam, order)
    for n in range(order + 1):
        rhs = Fraction(0)
        for k in range(n + 1):
            rhs += binom_int(n, k) * mu**k * lam ** (n - k) * Fraction(a[k])
        if lhs.coeffs[n] != rhs:
            return n, lhs.coeffs[n], rhs
    return None


def check_series_lemma(order: int, lam: RatLike, mu: RatLike, a: Sequence[RatLike]) -> bool:
    """Coefficient-exact check of the composition identity through the order."""
    return series_lemma_first_diff(order, lam, mu, a) is None


def harmonic_genfunc_first_diff(order: int, alpha: RatLike) -> tuple[int, Fraction, Fraction] | None:
    """First n where [t^n] log(1-alpha*t)/(1-t) differs from -H_n(alpha)."""
    series = log_one_minus(alpha, order) * geometric(1, order)
    for n in range(order + 1):
        expect = -harmonic_p(n, 1, alpha)
        if series.coeffs[n] != expect:
            return n, series.coeffs[n], expect
    return None


def skew_genfunc_first_diff(order: int) -> tuple[int, Fraction, Fraction] | None:
    """First n where [t^n] log(1+t)/(1-t) differs from H_n^-."""
    series = log_one_minus(-1, order) * geometric(1, order)
    for n in range(order + 1):
        expect = skew_harmonic(n)
        if series.coeffs[n] != expect:
            return n, series.coeffs[n], expect
    return None


def run_suite(pattern: str = "*", n_max: int = 20, seed: int = 42, cap: int = 3) -> VerdictReport:
    """Run every registry entry whose id matches the fnmatch pattern.

    Deterministic: identical (pattern, n_max, seed) give byte-identical JSON.
    """
    from .registry import build_registry

    start = time.perf_counter()
    entries = [e for e in build_registry(n_max, seed) if fnmatch.fnmatchcase(e.id, pattern)]
    results = [run_entry(e, n_max=n_max, cap=cap) for e in entries]
    return VerdictReport(
        suite=f"ghn:{pattern}",
        seed=seed,
        n_max=n_max,
        results=results,
        seconds=time.perf_counter() - start,
    )
