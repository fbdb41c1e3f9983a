"""Run registered checks over a corpus and render the report."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..core import Lattice, LatticeError, canonical_key
from ..io import Corpus
from .registry import ALWAYS, DEFAULT_BINDINGS, REGISTRY, check_ids


class UnknownCheckId(LatticeError):
    pass


@dataclass
class CheckResult:
    id: str
    expected: str
    description: str
    scope: str
    scope_count: int = 0
    tested: int = 0
    violations: list[dict] = field(default_factory=list)
    degenerate: str | None = None
    ms: int = 0

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "id": self.id,
            "expected": self.expected,
            "scope": self.scope,
            "scope_count": self.scope_count,
            "tested": self.tested,
            "violations": self.violations,
            "degenerate": self.degenerate is not None,
            "note": self.degenerate,
            "ms": self.ms if timing else 0,
        }


@dataclass
class Report:
    corpus: str
    checks: list[CheckResult] = field(default_factory=list)

    def faults(self) -> list[CheckResult]:
        """Always-holds checks with violations (implementation faults)."""
        return [c for c in self.checks if c.expected == ALWAYS and c.violations]

    @property
    def exit_code(self) -> int:
        return 1 if self.faults() else 0


def resolve_selection(selection) -> list[str]:
    if selection is None or selection == "all" or selection == {"all"}:
        return check_ids()
    if isinstance(selection, str):
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    unknown = sorted(set(selection) - set(REGISTRY))
    if unknown:
        raise UnknownCheckId(f"unknown check id(s): {', '.join(unknown)}")
    order = check_ids()
    return sorted(set(selection), key=order.index)


def _render(L: Lattice, value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return L.name(value)
    return str(value)


def _evaluate(L: Lattice, cid: str, bindings: tuple) -> dict:
    """Outcome of one check on one lattice (the parallel unit of work)."""
    check = REGISTRY[cid]
    start = time.perf_counter()
    out = {"in_scope": False, "tested": False, "violations": []}
    if check.scope(L):
        out["in_scope"] = True
        key = canonical_key(L)
        for bound in check.bindings(list(bindings)):
            if check.hypothesis is not None and not check.hypothesis(L, *bound):
                continue
            out["tested"] = True
            w = check.conclusion(L, *bound)
            if w is not None:
                witness = {k: _render(L, v) for k, v in w.items()}
                if bound:
                    witness["bind"] = [str(X) for X in bound]
                out["violations"].append({"lattice": key, "witness": witness})
    out["ns"] = int((time.perf_counter() - start) * 1e9)
    return out


def _evaluate_lattice(args) -> list[dict]:
    L, cids, bindings = args
    return [_evaluate(L, cid, bindings) for cid in cids]


def run_suite(corpus: Corpus, selection=None, bindings=None, jobs: int = 1) -> Report:
    """Evaluate the selected checks on every lattice of ``corpus``.

    Work is split per lattice; results are merged in corpus order so the
    report does not depend on ``jobs``.
    """
    cids = resolve_selection(selection)
    binds = tuple(DEFAULT_BINDINGS) + tuple(bindings or ())
    tasks = [(L, cids, binds) for L in corpus.lattices]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate_lattice, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outcomes = [_evaluate_lattice(t) for t in tasks]

    report = Report(corpus.source)
    for i, cid in enumerate(cids):
        check = REGISTRY[cid]
        res = CheckResult(cid, check.expected, check.description, check.scope_name, degenerate=check.degenerate)
        ns = 0
        for per_lattice in outcomes:
            o = per_lattice[i]
            res.scope_count += o["in_scope"]
            res.tested += o["tested"]
            res.violations.extend(o["violations"])
            ns += o["ns"]
        res.ms = ns // 1_000_000
        report.checks.append(res)
    return report


def emit_report(report: Report, fmt: str = "text", timing: bool = False) -> str:
    """Render a report; JSON output is byte-stable unless ``timing`` is set."""
    if fmt == "json":
        data = {"corpus": report.corpus, "checks": [c.to_dict(timing) for c in report.checks]}
        return json.dumps(data, indent=2)
    lines = [f"corpus: {report.corpus}"]
    for c in report.checks:
        status = "ok" if not c.violations else ("FAULT" if c.expected == ALWAYS else "counterexamples")
        line = f"{c.id:5} {status:15} in-scope={c.scope_count} tested={c.tested} violations={len(c.violations)}"
        if c.expected != ALWAYS:
            line += " [exploratory]"
        if c.degenerate:
            line += f" [degenerate: {c.degenerate}]"
        if timing:
            line += f" {c.ms}ms"
        lines.append(line)
        for v in c.violations[:3]:
            lines.append(f"      {v['lattice']} {json.dumps(v['witness'])}")
        if len(c.violations) > 3:
            lines.append(f"      ... {len(c.violations) - 3} more")
    faults = report.faults()
    lines.append(f"always-holds faults: {len(faults)}")
    return "\n".join(lines)
