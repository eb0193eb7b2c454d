"""Per-graph bound reports and ensemble sweeps.

A report record carries the exact weight bounds (numerator/denominator,
never floats), the alpha/beta certificate values with their justification
tags, optional exact phi/omega, and a strict-improvement flag telling
whether a sequence bound beat the ceiling of W(G).
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .bounds import wei_bound, wei_independence_bound
from .generators import gnp
from .graph import Graph
from .oracles import DEFAULT_LIMITS, OracleCapError, OracleLimits, clique_number_exact, phi_exact
from .sequences import SeededTieBreak, TieBreak, certify_alpha_bound, certify_beta_bound, lowest_id

CSV_COLUMNS = (
    "name",
    "n",
    "m",
    "wei_num",
    "wei_den",
    "indep_num",
    "indep_den",
    "r_alpha",
    "alpha_just",
    "r_beta",
    "beta_just",
    "phi",
    "omega",
    "improved",
)


@dataclass(frozen=True)
class GraphSource:
    """A graph to report on, with a display name and optional label map."""

    name: str
    graph: Graph
    labels: tuple[str, ...] | None = None


@dataclass(frozen=True)
class ReportOptions:
    exact: bool = False
    limits: OracleLimits = DEFAULT_LIMITS
    tie_break_seed: int | None = None  # None: lowest-id tie-break

    def tie_break(self) -> TieBreak:
        if self.tie_break_seed is None:
            return lowest_id
        return SeededTieBreak(self.tie_break_seed)


@dataclass(frozen=True)
class BoundRecord:
    name: str
    n: int
    m: int
    wei: Fraction | None = None
    indep: Fraction | None = None
    r_alpha: int | None = None
    alpha_just: str | None = None
    r_beta: int | None = None
    beta_just: str | None = None
    phi: int | None = None
    omega: int | None = None
    improved: bool | None = None
    error: str | None = None

    @property
    def consistent(self) -> bool:
        """Every recorded inequality of the bound chain, checked exactly."""
        checks: list[bool] = []
        if self.omega is not None:
            if self.r_alpha is not None:
                checks.append(self.omega >= self.r_alpha)
            if self.r_beta is not None:
                checks.append(self.omega >= self.r_beta)
            if self.phi is not None:
                checks.append(self.omega >= self.phi)
        if self.phi is not None and self.wei is not None:
            checks.append(self.phi >= self.wei)
        if self.phi is not None:
            # theorem-backed sequence bounds sit above phi in the chain
            if self.r_alpha is not None and self.alpha_just == "THEOREM_1":
                checks.append(self.r_alpha >= self.phi)
            if self.r_beta is not None and self.beta_just not in (None, "CLIQUE_ONLY"):
                checks.append(self.r_beta >= self.phi)
        if self.wei is not None:
            if self.r_alpha is not None and self.alpha_just != "CLIQUE_ONLY":
                checks.append(self.r_alpha >= self.wei)
            if self.r_beta is not None and self.beta_just != "CLIQUE_ONLY":
                checks.append(self.r_beta >= self.wei)
        return all(checks)


def evaluate(source: GraphSource, options: ReportOptions = ReportOptions()) -> BoundRecord:
    g = source.graph
    base = dict(name=source.name, n=g.n, m=g.m)
    if g.n == 0:
        return BoundRecord(**base, error="empty graph")
    wei = wei_bound(g)
    indep = wei_independence_bound(g)
    alpha = certify_alpha_bound(g, options.tie_break())
    beta = certify_beta_bound(g, options.tie_break())
    ceiling = math.ceil(wei)
    phi = omega = None
    error = None
    if options.exact:
        try:
            omega = clique_number_exact(g, options.limits)
            phi = phi_exact(g, options.limits)
        except OracleCapError as exc:
            error = str(exc)
    return BoundRecord(
        **base,
        wei=wei,
        indep=indep,
        r_alpha=alpha.r,
        alpha_just=alpha.justification.name,
        r_beta=beta.r,
        beta_just=beta.justification.name,
        phi=phi,
        omega=omega,
        improved=alpha.r > ceiling or beta.r > ceiling,
        error=error,
    )


def run_report(
    sources: Iterable[GraphSource], options: ReportOptions = ReportOptions()
) -> Iterator[BoundRecord]:
    """One record per source, in input order; per-graph errors do not stop
    the run."""
    for source in sources:
        yield evaluate(source, options)


# -- rendering ---------------------------------------------------------------


def _fraction_cells(value: Fraction | None) -> tuple[str, str]:
    if value is None:
        return "", ""
    return str(value.numerator), str(value.denominator)


def render_csv(records: Iterable[BoundRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        wei_num, wei_den = _fraction_cells(rec.wei)
        indep_num, indep_den = _fraction_cells(rec.indep)
        writer.writerow(
            [
                rec.name,
                rec.n,
                rec.m,
                wei_num,
                wei_den,
                indep_num,
                indep_den,
                "" if rec.r_alpha is None else rec.r_alpha,
                rec.alpha_just or "",
                "" if rec.r_beta is None else rec.r_beta,
                rec.beta_just or "",
                "" if rec.phi is None else rec.phi,
                "" if rec.omega is None else rec.omega,
                "" if rec.improved is None else str(rec.improved).lower(),
            ]
        )
    return out.getvalue()


def render_jsonl(records: Iterable[BoundRecord]) -> str:
    lines = []
    for rec in records:
        payload = {
            "name": rec.name,
            "n": rec.n,
            "m": rec.m,
            "wei_num": None if rec.wei is None else rec.wei.numerator,
            "wei_den": None if rec.wei is None else rec.wei.denominator,
            "indep_num": None if rec.indep is None else rec.indep.numerator,
            "indep_den": None if rec.indep is None else rec.indep.denominator,
            "r_alpha": rec.r_alpha,
            "alpha_just": rec.alpha_just,
            "r_beta": rec.r_beta,
            "beta_just": rec.beta_just,
            "phi": rec.phi,
            "omega": rec.omega,
            "improved": rec.improved,
            "error": rec.error,
        }
        lines.append(json.dumps(payload))
    return "\n".join(lines) + "\n"


def _pretty_fraction(value: Fraction | None) -> str:
    if value is None:
        return "-"
    return f"{value.numerator}/{value.denominator} (≈{float(value):.3f})"


def render_human(records: Iterable[BoundRecord]) -> str:
    rows = [("name", "n", "m", "W(G)", "indep-W", "alpha", "beta", "phi", "omega", "improved")]
    for rec in records:
        rows.append(
            (
                rec.name,
                str(rec.n),
                str(rec.m),
                _pretty_fraction(rec.wei),
                _pretty_fraction(rec.indep),
                f"{rec.r_alpha} [{rec.alpha_just}]" if rec.r_alpha is not None else "-",
                f"{rec.r_beta} [{rec.beta_just}]" if rec.r_beta is not None else "-",
                "-" if rec.phi is None else str(rec.phi),
                "-" if rec.omega is None else str(rec.omega),
                "-" if rec.improved is None else ("yes" if rec.improved else "no"),
            )
        )
        if rec.error:
            rows.append((f"  note: {rec.error}",) + ("",) * 9)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


RENDERERS = {"human": render_human, "csv": render_csv, "jsonl": render_jsonl}


# -- ensemble sweep ----------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    n: int = 12
    p: float = 0.3
    count: int = 200
    seed: int = 0


@dataclass(frozen=True)
class SweepResult:
    """Improvement statistics for one random ensemble (no acceptance claims)."""

    config: SweepConfig
    improved_count: int
    mean_excess: float  # average of max(r_alpha, r_beta) - ceil(W)

    @property
    def fraction(self) -> float:
        return self.improved_count / self.config.count if self.config.count else 0.0


def run_sweep(config: SweepConfig) -> SweepResult:
    rng = random.Random(config.seed)
    improved = 0
    excess_total = 0
    for _ in range(config.count):
        g = gnp(config.n, config.p, rng.randrange(2**32))
        ceiling = math.ceil(wei_bound(g))
        alpha = certify_alpha_bound(g)
        beta = certify_beta_bound(g)
        best = max(alpha.r, beta.r)
        if best > ceiling:
            improved += 1
        excess_total += best - ceiling
    mean = excess_total / config.count if config.count else 0.0
    return SweepResult(config=config, improved_count=improved, mean_excess=mean)
