"""Exact shortest-vector computation.

enumerate_svp: LLL preprocessing followed by unpruned depth-first
enumeration with exact rational bounds, under a wall-clock/node budget.
A completed run returns a true shortest nonzero vector; an expired budget
returns the best incumbent with status "timeout".

bruteforce_svp: an independent oracle that scores every coefficient
vector in a box against the input basis. Meant for small n; used by the
test suite to cross-check enumeration.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import _core
from .basis import Basis
from .errors import ParameterError
from .reduction import DEFAULT_DELTA

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"

SVP_DELTA = DEFAULT_DELTA


@dataclass(frozen=True)
class Budget:
    """Wall-clock limit in seconds, optionally also a visited-node cap."""

    wall_time_s: float = 3600.0
    node_cap: Optional[int] = None

    def __post_init__(self):
        if not self.wall_time_s > 0:
            raise ParameterError(f"wall_time_s must be positive, got {self.wall_time_s}")
        if self.node_cap is not None and self.node_cap < 1:
            raise ParameterError(f"node_cap must be positive, got {self.node_cap}")


@dataclass(frozen=True)
class SvpResult:
    vector: tuple[int, ...]
    norm_sq: int
    nodes: int
    status: str

    def to_dict(self) -> dict:
        return {
            "vector": list(self.vector),
            "norm_sq": self.norm_sq,
            "nodes": self.nodes,
            "status": self.status,
        }


def enumerate_svp(
    basis: Basis,
    budget: Budget | None = None,
    *,
    should_stop: Optional[Callable[[], bool]] = None,
) -> SvpResult:
    """Exact SVP: LLL (delta = 99/100), then depth-first enumeration with the
    first reduced vector as initial radius and incumbent."""
    budget = budget or Budget()
    deadline = time.monotonic() + budget.wall_time_s
    state = _core.GSState(basis.row_lists())
    _core.lll_in_place(state, SVP_DELTA.numerator, SVP_DELTA.denominator, should_stop)
    outcome = _core.enumerate_block(
        state,
        0,
        state.n - 1,
        deadline=deadline,
        node_cap=budget.node_cap,
        should_stop=should_stop,
    )
    vector = _combine(state.rows, outcome.coeffs)
    norm_sq = _int_norm(outcome.norm_sq)
    assert norm_sq == sum(v * v for v in vector)
    return SvpResult(
        vector=tuple(vector),
        norm_sq=norm_sq,
        nodes=outcome.nodes,
        status=STATUS_OK if outcome.completed else STATUS_TIMEOUT,
    )


def _combine(rows: list[list[int]], coeffs: tuple[int, ...]) -> list[int]:
    m = len(rows[0])
    out = [0] * m
    for c, row in zip(coeffs, rows):
        if c:
            for j in range(m):
                out[j] += c * row[j]
    return out


def _int_norm(norm: Fraction) -> int:
    assert norm.denominator == 1
    return norm.numerator


def bruteforce_svp(basis: Basis, box: int) -> SvpResult:
    """Exhaustive oracle over coefficient vectors in [-box, box]^n.

    Returns the minimum-norm nonzero lattice vector; ties are broken by the
    lexicographically smallest coefficient vector whose first nonzero
    coordinate is positive. Cost (2*box+1)^n, so keep n small (<= 8 or so).
    """
    if box < 1:
        raise ParameterError(f"box must be >= 1, got {box}")
    rows = basis.row_lists()
    n, m = basis.n, basis.m
    total = (2 * box + 1) ** n
    if _fits_int64(rows, box, n):
        coeffs, norm = _bruteforce_numpy(rows, box, n, m, total)
    else:
        coeffs, norm = _bruteforce_python(rows, box, n)
    vector = _combine(rows, coeffs)
    return SvpResult(vector=tuple(vector), norm_sq=norm, nodes=total - 1, status=STATUS_OK)


def _fits_int64(rows, box, n) -> bool:
    # conservative: max |entry of x*B| and the norm must stay below 2**62
    col_bound = max(sum(abs(rows[i][j]) for i in range(n)) for j in range(len(rows[0])))
    worst = box * col_bound
    return worst * worst * len(rows[0]) < 2**62


_CHUNK = 1 << 17


def _bruteforce_numpy(rows, box, n, m, total):
    b = np.array(rows, dtype=np.int64)
    width = 2 * box + 1
    powers = [width**k for k in range(n - 1, -1, -1)]
    best_norm = None
    best_coeffs = None
    for begin in range(0, total, _CHUNK):
        idx = np.arange(begin, min(begin + _CHUNK, total), dtype=np.int64)
        coords = np.empty((idx.size, n), dtype=np.int64)
        for k in range(n):
            coords[:, k] = (idx // powers[k]) % width - box
        # canonical representatives: first nonzero coefficient positive
        nonzero = coords != 0
        any_nz = nonzero.any(axis=1)
        first_idx = nonzero.argmax(axis=1)
        lead = coords[np.arange(idx.size), first_idx]
        keep = any_nz & (lead > 0)
        if not keep.any():
            continue
        coords = coords[keep]
        vecs = coords @ b
        norms = (vecs * vecs).sum(axis=1)
        pos = int(norms.argmin())
        norm = int(norms[pos])
        if best_norm is None or norm < best_norm:
            best_norm = norm
            best_coeffs = tuple(int(c) for c in coords[pos])
    return best_coeffs, best_norm


def _bruteforce_python(rows, box, n):
    from itertools import product

    best_norm = None
    best_coeffs = None
    for coeffs in product(range(-box, box + 1), repeat=n):
        lead = next((c for c in coeffs if c != 0), 0)
        if lead <= 0:
            continue
        vec = _combine(rows, coeffs)
        norm = sum(v * v for v in vec)
        if best_norm is None or norm < best_norm:
            best_norm = norm
            best_coeffs = coeffs
    return best_coeffs, best_norm
