"""Independent certificate verification.

Trusts nothing from the solver: every check is recomputed from the
instance and the certificate alone, using only the core data model and
the linear-cycle validators.  The independence number needed by the final
check is computed here with a separate plain backtracking search rather
than the solver-side oracle, so the two routes can disagree loudly if
either is wrong.

All checks always run; a failing early check never hides later ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph
from .cover import CoverCertificate
from .linear import LinearCycle, validate_cycle
from .search import BudgetExhausted, SearchBudget


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    checks: tuple[CheckResult, ...]
    alpha_used: str  # "exact" | "provided-bound" | "skipped"
    alpha_value: int | None = None

    def to_json_obj(self):
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "alpha_used": self.alpha_used,
            "alpha_value": self.alpha_value,
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"check {c.name:<18} {status}  {c.detail}")
        lines.append(f"alpha mode: {self.alpha_used}")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def _edge_problem(e, n: int) -> str | None:
    if len(e) not in (2, 3):
        return f"edge {tuple(e)} has size {len(e)}"
    if len(set(e)) != len(e):
        return f"edge {tuple(e)} repeats a vertex"
    for v in e:
        if not isinstance(v, int) or not 0 <= v < n:
            return f"edge {tuple(e)} leaves vertex range [0, {n})"
    return None


def _cycle_problem(cyc: LinearCycle, n: int) -> str | None:
    if cyc.kind == "vertex":
        v = cyc.v
        if not isinstance(v, int) or not 0 <= v < n:
            return f"vertex {v!r} out of range [0, {n})"
        return None
    if cyc.kind == "edge" and len(cyc.edges) != 1:
        return "single-edge cycle must hold exactly one edge"
    for e in cyc.edges:
        problem = _edge_problem(e, n)
        if problem:
            return problem
    if cyc.kind == "edge":
        return None
    if cyc.kind != "cycle":
        return f"unknown cycle kind {cyc.kind!r}"
    checked = validate_cycle(cyc.edges)
    if not isinstance(checked, LinearCycle):
        return checked.detail
    return None


def independent_alpha(h: Hypergraph, budget=None) -> int:
    """Exact independence number by plain include/exclude backtracking.

    Deliberately unclever: vertices in natural order, subset bound only.
    """
    if hasattr(budget, "tick"):
        tracker = budget
    else:
        tracker = (budget or SearchBudget()).tracker()
    n = h.n
    edge_masks = []
    for e in h.edges:
        m = 0
        for v in e:
            m |= 1 << v
        edge_masks.append(m)
    best = 0

    def walk(v: int, chosen: int, count: int) -> None:
        nonlocal best
        tracker.tick()
        if count + (n - v) <= best:
            return
        if v == n:
            best = count
            return
        grown = chosen | (1 << v)
        if all(m & ~grown for m in edge_masks):
            walk(v + 1, grown, count + 1)
        walk(v + 1, chosen, count)

    walk(0, 0, 0)
    return best


def verify(
    h: Hypergraph,
    cert: CoverCertificate,
    alpha_mode: str = "compute",
    budget: SearchBudget | None = None,
) -> VerificationReport:
    """Run the five certificate checks and report every outcome.

    Checks: every cycle is a linear cycle; every cycle edge is an instance
    edge; no edge appears in two cycles; the cycle vertex sets cover all
    vertices; and the cycle count stays within the independence number
    (recomputed when alpha_mode is "compute", else the certificate's own
    bound is trusted and the report says so).
    """
    if alpha_mode not in ("compute", "trust_bound"):
        raise ValueError(f"unknown alpha_mode {alpha_mode!r}")
    checks: list[CheckResult] = []
    n = h.n
    cycles = cert.cycles

    bad = [
        f"cycle {i}: {problem}"
        for i, cyc in enumerate(cycles)
        if (problem := _cycle_problem(cyc, n))
    ]
    checks.append(
        CheckResult(
            "cycles-valid",
            not bad,
            "; ".join(bad) if bad else f"{len(cycles)} cycles well-formed",
        )
    )

    eset = h.edge_set()
    foreign = []
    for i, cyc in enumerate(cycles):
        for e in cyc.edges:
            if tuple(sorted(e)) not in eset:
                foreign.append(f"cycle {i}: edge {tuple(e)} not in instance")
    checks.append(
        CheckResult(
            "edges-in-instance",
            not foreign,
            "; ".join(foreign) if foreign else "all cycle edges belong to the instance",
        )
    )

    usage: dict[tuple, list[int]] = {}
    for i, cyc in enumerate(cycles):
        for e in cyc.edges:
            usage.setdefault(tuple(sorted(e)), []).append(i)
    shared = [
        f"edge {e} used by cycles {idxs}" for e, idxs in sorted(usage.items())
        if len(idxs) > 1
    ]
    checks.append(
        CheckResult(
            "edge-disjoint",
            not shared,
            "; ".join(shared) if shared else "no edge is shared between cycles",
        )
    )

    covered: set[int] = set()
    for cyc in cycles:
        covered |= cyc.vertex_set()
    expected = set(range(n))
    missing = sorted(expected - covered)
    extra = sorted(covered - expected)
    cover_detail = []
    if missing:
        cover_detail.append(f"uncovered: {missing}")
    if extra:
        cover_detail.append(f"out of range: {extra}")
    checks.append(
        CheckResult(
            "coverage",
            not missing and not extra,
            "; ".join(cover_detail) if cover_detail else f"all {n} vertices covered",
        )
    )

    alpha_used = "provided-bound"
    alpha_value: int | None = cert.alpha_bound
    if alpha_mode == "compute":
        try:
            alpha_value = independent_alpha(h, budget)
            alpha_used = "exact"
            checks.append(
                CheckResult(
                    "alpha-bound",
                    len(cycles) <= alpha_value,
                    f"{len(cycles)} cycles vs alpha {alpha_value}",
                )
            )
        except BudgetExhausted:
            alpha_used = "skipped"
            alpha_value = None
            checks.append(
                CheckResult(
                    "alpha-bound", False, "skipped: budget exhausted computing alpha"
                )
            )
    else:
        checks.append(
            CheckResult(
                "alpha-bound",
                len(cycles) <= cert.alpha_bound,
                f"{len(cycles)} cycles vs trusted bound {cert.alpha_bound}",
            )
        )

    ok = all(c.passed for c in checks)
    return VerificationReport(ok, tuple(checks), alpha_used, alpha_value)
