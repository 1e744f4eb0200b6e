"""Basis reduction: size reduction, LLL, and block BKZ.

All postconditions here are decidable exactly from GramSchmidtData, and the
reduced basis always spans the same lattice as the input (row translations,
swaps, and unimodular block transforms only).
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import _core
from .basis import Basis
from .errors import ParameterError

DEFAULT_DELTA = Fraction(99, 100)

STATUS_OK = "ok"
STATUS_ROUND_CAP = "round_cap_reached"
STATUS_CANCELLED = "cancelled"


@dataclass(frozen=True)
class ReductionParams:
    """delta is the Lovasz parameter as an exact rational in (1/4, 1);
    beta is the BKZ block size; max_rounds caps full BKZ passes."""

    delta: Fraction = DEFAULT_DELTA
    beta: int = 2
    max_rounds: int = 64

    def __post_init__(self):
        delta = Fraction(self.delta)
        object.__setattr__(self, "delta", delta)
        if not Fraction(1, 4) < delta <= 1:
            raise ParameterError(f"delta must be in (1/4, 1], got {delta}")
        if delta == 1:
            raise ParameterError("delta = 1 is rejected: termination is not guaranteed")
        if self.beta < 2:
            raise ParameterError(f"beta must be >= 2, got {self.beta}")
        if self.max_rounds < 1:
            raise ParameterError(f"max_rounds must be positive, got {self.max_rounds}")


@dataclass(frozen=True)
class ReductionReport:
    basis: Basis
    swaps: int
    rounds: int
    wall_time_s: float
    status: str = STATUS_OK

    def to_dict(self) -> dict:
        return {
            "swaps": self.swaps,
            "rounds": self.rounds,
            "wall_time_s": self.wall_time_s,
            "status": self.status,
        }


def size_reduce(basis: Basis) -> Basis:
    """Size-reduce only: afterwards |mu[i][j]| <= 1/2 for all i > j, with the
    Gram-Schmidt norms exactly unchanged. Idempotent."""
    state = _core.GSState(basis.row_lists())
    _core.size_reduce_in_place(state)
    return Basis.from_rows(state.rows)


def lll(
    basis: Basis,
    params: ReductionParams | None = None,
    *,
    should_stop: Optional[Callable[[], bool]] = None,
) -> ReductionReport:
    """LLL-reduce: output is size-reduced and satisfies the Lovasz condition
    delta*||b*_{i-1}||^2 <= ||b*_i||^2 + mu_{i,i-1}^2*||b*_{i-1}||^2.

    `rounds` in the report counts main-loop iterations (a machine-independent
    work proxy); `swaps` counts Lovasz exchanges.
    """
    params = params or ReductionParams()
    delta = params.delta
    started = time.perf_counter()
    state = _core.GSState(basis.row_lists())
    swaps, iterations, cancelled = _core.lll_in_place(
        state, delta.numerator, delta.denominator, should_stop
    )
    wall = time.perf_counter() - started
    return ReductionReport(
        basis=Basis.from_rows(state.rows),
        swaps=swaps,
        rounds=iterations,
        wall_time_s=wall,
        status=STATUS_CANCELLED if cancelled else STATUS_OK,
    )


def bkz(
    basis: Basis,
    params: ReductionParams | None = None,
    *,
    should_stop: Optional[Callable[[], bool]] = None,
) -> ReductionReport:
    """Block reduction: LLL plus exact SVP on every projected block of size
    beta (unpruned enumeration), repeated until a pass changes nothing or
    max_rounds passes have run.

    After a clean pass, the first Gram-Schmidt vector of every block is a
    shortest nonzero vector of the projected block lattice; with beta = n
    this solves SVP for the whole lattice.
    """
    params = params or ReductionParams()
    n = basis.n
    if params.beta > n:
        raise ParameterError(f"beta ({params.beta}) exceeds basis rank ({n})")
    delta = params.delta
    started = time.perf_counter()
    rows = basis.row_lists()
    state = _core.GSState(rows)
    swaps = 0
    status = STATUS_ROUND_CAP

    def run_lll() -> bool:
        nonlocal swaps
        s, _, was_cancelled = _core.lll_in_place(
            state, delta.numerator, delta.denominator, should_stop
        )
        swaps += s
        return was_cancelled

    cancelled = run_lll()
    rounds = 0
    while not cancelled and rounds < params.max_rounds:
        rounds += 1
        changed = False
        for start in range(n - 1):
            end = min(start + params.beta - 1, n - 1)
            if end == start:
                continue
            outcome = _core.exact_block_minimum(state, start, end, should_stop)
            if outcome is None:
                cancelled = True
                break
            if outcome.norm_sq < state.bstar_norm_sq(start):
                _core.insert_block_vector(rows, start, outcome.coeffs)
                state = _core.GSState(rows)
                cancelled = run_lll()
                if cancelled:
                    break
                changed = True
        if not changed and not cancelled:
            status = STATUS_OK
            break
    if cancelled:
        status = STATUS_CANCELLED
    wall = time.perf_counter() - started
    return ReductionReport(
        basis=Basis.from_rows(state.rows),
        swaps=swaps,
        rounds=rounds,
        wall_time_s=wall,
        status=status,
    )
