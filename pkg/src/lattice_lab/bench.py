"""Benchmark harness: solver x family x dimension x seed grids under a
wall-clock budget, CSV/JSON emission, and the dimension-threshold search.

Node and swap counts are first-class outputs: they are machine-independent
cost proxies, unlike wall time. Timeouts are results, not errors.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .basis import Basis
from .errors import LatticeLabError, ParameterError
from .families import LatticeFamily, gen_basis
from .reduction import ReductionParams, bkz, lll
from .solver import SVP_DELTA, Budget, enumerate_svp

ALGORITHMS = ("lll", "bkz", "ekz")

CSV_HEADER = "run_id,family,n,seed,algorithm,delta,beta,status,wall_time_s,norm_sq,nodes,swaps,peak_mem_bytes"

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"
STATUS_ERROR = "error"

WORKERS_ENV = "LATTICE_LAB_WORKERS"


@dataclass(frozen=True)
class BenchCase:
    family: LatticeFamily
    n: int
    seed: int
    algorithm: str
    params: ReductionParams
    budget: Budget

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ParameterError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if self.n < 2:
            raise ParameterError(f"n must be >= 2, got {self.n}")


@dataclass(frozen=True)
class BenchRecord:
    run_id: str
    family: str
    n: int
    seed: int
    algorithm: str
    delta: Fraction
    beta: Optional[int]
    status: str
    wall_time_s: float
    norm_sq: Optional[int]
    nodes: Optional[int]
    swaps: Optional[int]
    peak_mem_bytes: Optional[int]

    def to_csv_row(self) -> str:
        def opt(x):
            return "" if x is None else str(x)

        return ",".join(
            [
                self.run_id,
                self.family,
                str(self.n),
                str(self.seed),
                self.algorithm,
                f"{self.delta.numerator}/{self.delta.denominator}",
                opt(self.beta),
                self.status,
                f"{self.wall_time_s:.6f}",
                opt(self.norm_sq),
                opt(self.nodes),
                opt(self.swaps),
                opt(self.peak_mem_bytes),
            ]
        )

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "family": self.family,
            "n": self.n,
            "seed": self.seed,
            "algorithm": self.algorithm,
            "delta": f"{self.delta.numerator}/{self.delta.denominator}",
            "beta": self.beta,
            "status": self.status,
            "wall_time_s": self.wall_time_s,
            "norm_sq": self.norm_sq,
            "nodes": self.nodes,
            "swaps": self.swaps,
            "peak_mem_bytes": self.peak_mem_bytes,
        }


@dataclass(frozen=True)
class ThresholdReport:
    budget: Budget
    family: LatticeFamily
    dimensions_tested: tuple[int, ...]
    threshold_n: Optional[int]  # None means "none within range"

    def to_dict(self) -> dict:
        return {
            "budget_s": self.budget.wall_time_s,
            "family": {"kind": self.family.kind, "bits": self.family.bits, "q": self.family.q},
            "dimensions_tested": list(self.dimensions_tested),
            "threshold_n": self.threshold_n if self.threshold_n is not None else "none within range",
        }


def _peak_mem_bytes() -> Optional[int]:
    try:
        import resource

        return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
    except Exception:
        return None


def run_case(case: BenchCase, run_id: str = "") -> BenchRecord:
    """Run one case. Basis generation time is excluded from wall_time_s;
    domain errors become status=error instead of propagating."""
    run_id = run_id or f"{case.family.kind}-n{case.n}-s{case.seed}-{case.algorithm}"
    base = dict(
        run_id=run_id,
        family=case.family.kind,
        n=case.n,
        seed=case.seed,
        algorithm=case.algorithm,
        # ekz always preprocesses with the solver's fixed delta
        delta=SVP_DELTA if case.algorithm == "ekz" else case.params.delta,
        beta=case.params.beta if case.algorithm == "bkz" else None,
    )
    try:
        basis = gen_basis(case.family, case.n, case.seed)
    except (LatticeLabError, ValueError):
        return BenchRecord(
            **base, status=STATUS_ERROR, wall_time_s=0.0,
            norm_sq=None, nodes=None, swaps=None, peak_mem_bytes=_peak_mem_bytes(),
        )
    budget_s = case.budget.wall_time_s
    started = time.perf_counter()
    try:
        if case.algorithm == "lll":
            # lll always runs to completion; an over-budget run is reported
            # as timeout but never interrupted mid-swap
            report = lll(basis, case.params)
            wall = time.perf_counter() - started
            status = STATUS_OK if wall <= budget_s else STATUS_TIMEOUT
            norm_sq, nodes, swaps = _first_row_norm(report.basis), None, report.swaps
        elif case.algorithm == "bkz":
            deadline = time.monotonic() + budget_s
            report = bkz(basis, case.params, should_stop=lambda: time.monotonic() >= deadline)
            wall = time.perf_counter() - started
            status = STATUS_TIMEOUT if (report.status == "cancelled" or wall > budget_s) else STATUS_OK
            norm_sq, nodes, swaps = _first_row_norm(report.basis), None, report.swaps
        else:  # ekz
            result = enumerate_svp(basis, case.budget)
            wall = time.perf_counter() - started
            status = STATUS_TIMEOUT if (result.status == "timeout" or wall > budget_s) else STATUS_OK
            norm_sq, nodes, swaps = result.norm_sq, result.nodes, None
    except (LatticeLabError, ValueError):
        wall = time.perf_counter() - started
        return BenchRecord(
            **base, status=STATUS_ERROR, wall_time_s=round(wall, 6),
            norm_sq=None, nodes=None, swaps=None, peak_mem_bytes=_peak_mem_bytes(),
        )
    return BenchRecord(
        **base, status=status, wall_time_s=round(wall, 6),
        norm_sq=norm_sq, nodes=nodes, swaps=swaps, peak_mem_bytes=_peak_mem_bytes(),
    )


def _first_row_norm(basis: Basis) -> int:
    row = basis.rows[0]
    return sum(x * x for x in row)


def build_grid(
    families: Sequence[LatticeFamily],
    dims: Sequence[int],
    seeds: Sequence[int],
    algorithms: Sequence[str],
    budget: Budget,
    params: ReductionParams | None = None,
) -> list[BenchCase]:
    """Cases in deterministic grid order: families x dims x seeds x algorithms."""
    if not families or not dims or not seeds or not algorithms:
        raise ParameterError("grid must be non-empty in every axis")
    params = params or ReductionParams()
    return [
        BenchCase(family=f, n=n, seed=s, algorithm=a, params=params, budget=budget)
        for f in families
        for n in dims
        for s in seeds
        for a in algorithms
    ]


def _run_indexed(args: tuple[int, BenchCase]) -> tuple[int, BenchRecord]:
    idx, case = args
    return idx, run_case(case, run_id=f"{idx:04d}-{case.family.kind}-n{case.n}-s{case.seed}-{case.algorithm}")


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_cases(cases: Sequence[BenchCase], workers: Optional[int] = None) -> list[BenchRecord]:
    """Execute cases (possibly in parallel); results come back in grid order."""
    if not cases:
        raise ParameterError("no cases to run")
    workers = min(resolve_workers(workers), len(cases))
    indexed = list(enumerate(cases))
    if workers == 1:
        return [_run_indexed(item)[1] for item in indexed]
    results: list[Optional[BenchRecord]] = [None] * len(cases)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for idx, record in pool.map(_run_indexed, indexed):
            results[idx] = record
    return results  # type: ignore[return-value]


def run_suite(
    cases: Sequence[BenchCase],
    csv_path: str,
    *,
    json_path: Optional[str] = None,
    workers: Optional[int] = None,
) -> list[BenchRecord]:
    """Run the whole grid and write the CSV (and optional JSON mirror).
    The output file is opened before any case runs, so unwritable paths
    fail early."""
    handle = open(csv_path, "w", encoding="utf-8", newline="\n")
    try:
        records = run_cases(cases, workers=workers)
        handle.write(CSV_HEADER + "\n")
        for rec in records:
            handle.write(rec.to_csv_row() + "\n")
    finally:
        handle.close()
    if json_path is not None:
        import json as _json

        with open(json_path, "w", encoding="utf-8") as jh:
            _json.dump([r.to_dict() for r in records], jh, indent=2)
            jh.write("\n")
    return records


def read_csv(path: str) -> list[BenchRecord]:
    """Parse a benchmark CSV back into records (field-for-field)."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CSV_HEADER:
        raise ParameterError(f"bad CSV header: {lines[0] if lines else '<empty>'!r}")
    records = []
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != 13:
            raise ParameterError(f"bad CSV row: {line!r}")
        num, den = parts[5].split("/")

        def opt_int(tok: str) -> Optional[int]:
            return None if tok == "" else int(tok)

        records.append(
            BenchRecord(
                run_id=parts[0],
                family=parts[1],
                n=int(parts[2]),
                seed=int(parts[3]),
                algorithm=parts[4],
                delta=Fraction(int(num), int(den)),
                beta=opt_int(parts[6]),
                status=parts[7],
                wall_time_s=float(parts[8]),
                norm_sq=opt_int(parts[9]),
                nodes=opt_int(parts[10]),
                swaps=opt_int(parts[11]),
                peak_mem_bytes=opt_int(parts[12]),
            )
        )
    return records


def find_threshold(
    family: LatticeFamily,
    dimensions: Sequence[int],
    seeds: Sequence[int],
    budget: Budget,
    *,
    workers: Optional[int] = None,
    csv_path: Optional[str] = None,
) -> tuple[ThresholdReport, list[BenchRecord]]:
    """Smallest tested dimension at which the exact solver times out for
    every seed. Scans all dimensions (no early exit) so the full record set
    doubles as the scaling dataset."""
    dims = list(dimensions)
    if not dims or any(b <= a for a, b in zip(dims, dims[1:])):
        raise ParameterError("dimensions must be a strictly ascending non-empty list")
    if not seeds:
        raise ParameterError("need at least one seed")
    cases = build_grid([family], dims, list(seeds), ["ekz"], budget)
    if csv_path is not None:
        records = run_suite(cases, csv_path, workers=workers)
    else:
        records = run_cases(cases, workers=workers)
    threshold = None
    for n in dims:
        group = [r for r in records if r.n == n]
        if group and all(r.status == STATUS_TIMEOUT for r in group):
            threshold = n
            break
    return (
        ThresholdReport(
            budget=budget,
            family=family,
            dimensions_tested=tuple(dims),
            threshold_n=threshold,
        ),
        records,
    )
