"""Built-in annotated examples and the pipeline runner.

Entries live in corpus.json next to this module: declarative data, each
expected value carrying a provenance tag ("literature", "derived", or
"trivial") and a notes string describing the independent oracle behind every
derived value.  run_entry executes the full cascade, compares against the
expectations, and runs every bounds check whose inputs are present.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from . import linalg
from .bounds import FAIL, OneDimComponent, build_report
from .errors import Budget, LebettiError
from .fields import GF, QQ
from .groebner import IdealBasis, grevlex, ideals_equal
from .lenumbers import LeInput, le_cascade
from .poly import Ring, parse


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    f_text: str
    variables: tuple[str, ...]
    coords: tuple[str, ...]
    coord_change_seed: int | None
    field_name: str
    expected: dict
    provenance: dict
    one_dim: dict | None
    notes: str

    def coeff_field(self):
        if self.field_name == "rational":
            return QQ
        if self.field_name.startswith("prime:"):
            return GF(int(self.field_name.split(":", 1)[1]))
        raise LebettiError(f"unknown field {self.field_name!r}")

    def ring(self) -> Ring:
        return Ring(self.variables, self.coeff_field())


def _entry_from_json(raw: dict) -> CorpusEntry:
    return CorpusEntry(
        name=raw["name"],
        f_text=raw["f"],
        variables=tuple(raw["vars"]),
        coords=tuple(raw["coords"]),
        coord_change_seed=raw.get("coord_change_seed"),
        field_name=raw.get("field", "rational"),
        expected=raw["expected"],
        provenance=raw["provenance"],
        one_dim=raw.get("one_dim"),
        notes=raw.get("notes", ""),
    )


def load_entries() -> tuple[CorpusEntry, ...]:
    data = json.loads(resources.files(__package__).joinpath("corpus.json").read_text())
    entries = tuple(_entry_from_json(raw) for raw in data["entries"])
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise LebettiError("duplicate corpus entry names")
    return entries


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class EntryResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    lambdas: tuple[int, ...] | None = None
    sigma_dim: int | None = None
    diagnostics: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.ok() for c in self.checks)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "lambdas": list(self.lambdas) if self.lambdas is not None else None,
            "sigma_dim": self.sigma_dim,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
            "diagnostics": self.diagnostics,
            "error": self.error,
        }


def _check_eq(name: str, got, want) -> Check:
    status = "pass" if got == want else FAIL
    return Check(name, status, f"got {got}, expected {want}")


def _compare_cycles(result, which: str, expected: dict, ring: Ring, checks: list[Check]):
    cycles = result.gamma if which == "gamma" else result.le
    for key, want_components in expected.items():
        k = int(key)
        got = cycles.get(k)
        if got is None:
            checks.append(Check(f"{which}[{k}]", FAIL, "cycle missing"))
            continue
        want = []
        for gens_text, mult in want_components:
            ideal = IdealBasis.compute(
                [parse(t, ring) for t in gens_text], grevlex(), ring=ring
            )
            want.append((ideal, mult))
        ok = len(want) == len(got.components)
        if ok:
            unmatched = list(got.components)
            for ideal, mult in want:
                hit = None
                for i, (K, m) in enumerate(unmatched):
                    if m == mult and ideals_equal(K, ideal):
                        hit = i
                        break
                if hit is None:
                    ok = False
                    break
                unmatched.pop(hit)
            ok = ok and not unmatched
        checks.append(
            Check(
                f"{which}[{k}]",
                "pass" if ok else FAIL,
                f"got {got.render()}",
            )
        )


def run_entry(entry: CorpusEntry, budget_limit: int | None = None) -> EntryResult:
    result = EntryResult(entry.name)
    try:
        ring = entry.ring()
        f = parse(entry.f_text, ring)
        cascade = le_cascade(
            LeInput(f, entry.coords),
            Budget(budget_limit) if budget_limit else None,
            coord_change_seed=entry.coord_change_seed,
        )
    except LebettiError as exc:
        result.error = f"{type(exc).__name__}: {exc}"
        return result
    result.lambdas = cascade.lambdas
    result.sigma_dim = cascade.sigma_dim
    result.diagnostics = list(cascade.diagnostics)

    expected = entry.expected
    result.checks.append(
        _check_eq("lambdas", list(cascade.lambdas), list(expected["lambdas"]))
    )
    result.checks.append(
        _check_eq("sigma_dim", cascade.sigma_dim, expected["sigma_dim"])
    )
    if expected.get("cycles"):
        for which in ("gamma", "le"):
            if expected["cycles"].get(which):
                _compare_cycles(cascade, which, expected["cycles"][which], ring, result.checks)

    bettis = expected.get("betti")
    imdim = expected.get("imdim")
    one_dim = None
    if entry.one_dim:
        coeff = entry.coeff_field()
        one_dim = [
            OneDimComponent(
                comp["mult"],
                comp["transverse_milnor"],
                linalg.from_rows(comp["internal_monodromy"], coeff)
                if comp.get("internal_monodromy") is not None
                else None,
            )
            for comp in entry.one_dim["components"]
        ]
    if bettis is not None or imdim is not None or one_dim is not None:
        try:
            report = build_report(
                cascade.lambdas,
                n=ring.nvars - 1,
                imdim=imdim,
                bettis=bettis,
                one_dim=one_dim,
                coeff_field=entry.coeff_field(),
            )
        except LebettiError as exc:
            result.error = f"{type(exc).__name__}: {exc}"
            return result
        for verdict in report.verdicts:
            result.checks.append(Check(verdict.name, verdict.status, verdict.detail))
    return result


@dataclass
class CorpusReport:
    results: list[EntryResult]

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> int:
        return sum(0 if r.passed else 1 for r in self.results)

    def all_passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "failures": self.failures,
            "entries": [r.to_json() for r in self.results],
        }


def run_all(name_filter: str | None = None, budget_limit: int | None = None,
            parallel: bool = True) -> CorpusReport:
    """Run every corpus entry whose name contains the filter substring.
    Entries execute independently (in a thread pool by default); results are
    aggregated in entry-name order."""
    entries = [
        e for e in load_entries() if not name_filter or name_filter in e.name
    ]
    entries.sort(key=lambda e: e.name)
    if parallel and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda e: run_entry(e, budget_limit), entries))
    else:
        results = [run_entry(e, budget_limit) for e in entries]
    results.sort(key=lambda r: r.name)
    return CorpusReport(results)
