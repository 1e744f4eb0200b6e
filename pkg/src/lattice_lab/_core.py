"""All-integer lattice reduction and enumeration engine.

Internally a basis is tracked together with the classic integral
Gram-Schmidt data: d[0..n] where d[i] is the Gram determinant of the
first i rows (d[0] = 1), and lam[i][j] = mu[i][j] * d[j+1]. Every
quantity is an exact integer, so the Lovasz condition, size-reduction
bounds, and enumeration pruning are all decided without rounding:

    ||b*_i||^2 = d[i+1] / d[i]
    mu[i][j]   = lam[i][j] / d[j+1]

Exact divisions below are guaranteed by Cramer-style integrality of the
lam/d quantities.
"""

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import RankDeficientError
from .linalg import complete_to_unimodular, dot

BUDGET_POLL_NODES = 4096


class GSState:
    """Mutable basis rows plus their integral Gram-Schmidt data."""

    __slots__ = ("rows", "n", "m", "lam", "d")

    def __init__(self, rows: list[list[int]]):
        self.rows = rows
        self.n = len(rows)
        self.m = len(rows[0])
        self._recompute()

    def _recompute(self):
        n = self.n
        rows = self.rows
        lam = [[0] * n for _ in range(n)]
        d = [1] * (n + 1)
        for i in range(n):
            for j in range(i + 1):
                u = dot(rows[i], rows[j])
                lam_i, lam_j = lam[i], lam[j]
                for k in range(j):
                    u = (d[k + 1] * u - lam_i[k] * lam_j[k]) // d[k]
                if j < i:
                    lam_i[j] = u
                elif u <= 0:
                    raise RankDeficientError(f"row {i} is dependent on earlier rows")
                else:
                    d[i + 1] = u
        self.lam = lam
        self.d = d

    def bstar_norm_sq(self, i: int) -> Fraction:
        return Fraction(self.d[i + 1], self.d[i])

    def size_reduce_pair(self, k: int, l: int) -> None:
        """Translate b_k by a multiple of b_l so |mu[k][l]| <= 1/2."""
        lam, d = self.lam, self.d
        dl1 = d[l + 1]
        if 2 * abs(lam[k][l]) <= dl1:
            return
        r = (2 * lam[k][l] + dl1) // (2 * dl1)
        row_k, row_l = self.rows[k], self.rows[l]
        for j in range(self.m):
            row_k[j] -= r * row_l[j]
        lam_k, lam_l = lam[k], lam[l]
        for j in range(l):
            lam_k[j] -= r * lam_l[j]
        lam_k[l] -= r * dl1

    def lovasz_ok(self, k: int, delta_num: int, delta_den: int) -> bool:
        """delta * ||b*_{k-1}||^2 <= ||b*_k||^2 + mu^2 ||b*_{k-1}||^2, exactly."""
        d = self.d
        lam_kk = self.lam[k][k - 1]
        return delta_den * (d[k + 1] * d[k - 1] + lam_kk * lam_kk) >= delta_num * d[k] * d[k]

    def swap_rows(self, k: int) -> None:
        """Swap b_k and b_{k-1}, updating lam/d in place."""
        lam, d = self.lam, self.d
        n = self.n
        self.rows[k], self.rows[k - 1] = self.rows[k - 1], self.rows[k]
        lam_k, lam_km1 = lam[k], lam[k - 1]
        for j in range(k - 1):
            lam_k[j], lam_km1[j] = lam_km1[j], lam_k[j]
        lam_bar = lam_k[k - 1]
        new_dk = (d[k - 1] * d[k + 1] + lam_bar * lam_bar) // d[k]
        for i in range(k + 1, n):
            lam_i = lam[i]
            t = lam_i[k]
            lam_i[k] = (d[k + 1] * lam_i[k - 1] - lam_bar * t) // d[k]
            lam_i[k - 1] = (new_dk * t + lam_bar * lam_i[k]) // d[k + 1]
        d[k] = new_dk


def lll_in_place(
    state: GSState,
    delta_num: int,
    delta_den: int,
    should_stop: Optional[Callable[[], bool]] = None,
) -> tuple[int, int, bool]:
    """Run LLL on the state; returns (swaps, loop_iterations, cancelled).

    The cooperative stop signal is polled once per loop iteration, i.e. at
    least once per swap; stopping early leaves a valid basis of the same
    lattice that is merely not fully reduced yet.
    """
    n = state.n
    swaps = 0
    iterations = 0
    k = 1
    while k < n:
        iterations += 1
        if should_stop is not None and should_stop():
            return swaps, iterations, True
        state.size_reduce_pair(k, k - 1)
        if state.lovasz_ok(k, delta_num, delta_den):
            for l in range(k - 2, -1, -1):
                state.size_reduce_pair(k, l)
            k += 1
        else:
            state.swap_rows(k)
            swaps += 1
            k = max(k - 1, 1)
    return swaps, iterations, False


def size_reduce_in_place(state: GSState) -> None:
    """Full size reduction; Gram-Schmidt vectors are untouched by design."""
    for i in range(1, state.n):
        for l in range(i - 1, -1, -1):
            state.size_reduce_pair(i, l)


@dataclass
class EnumOutcome:
    coeffs: tuple[int, ...]
    norm_sq: Fraction
    nodes: int
    completed: bool


def enumerate_block(
    state: GSState,
    start: int,
    end: int,
    *,
    deadline: Optional[float] = None,
    node_cap: Optional[int] = None,
    should_stop: Optional[Callable[[], bool]] = None,
) -> EnumOutcome:
    """Exact shortest-vector search over the projected block [start, end].

    Depth-first over integer coordinates x_end..x_start in zig-zag order
    (candidates at each level ordered by distance from the real-valued
    center), pruning a level as soon as its partial norm reaches the
    current radius. No pruning heuristics beyond the exact bound, so a
    completed run is exact. The incumbent starts at the block's first
    Gram-Schmidt vector and the radius shrinks on every strict improvement,
    which makes the result the first minimal vector in depth-first order.

    The budget (deadline / node cap / stop signal) is polled every
    BUDGET_POLL_NODES visited nodes; an exhausted budget returns the
    incumbent with completed=False.
    """
    lam, d = state.lam, state.d
    size = end - start + 1
    best_coeffs = tuple(1 if t == 0 else 0 for t in range(size))
    best_norm = Fraction(d[start + 1], d[start])
    radius = best_norm
    nodes = 0

    # per-level scratch, indexed by absolute level
    x = [0] * (end + 1)
    cand_idx = [0] * (end + 1)
    x0 = [0] * (end + 1)
    side = [1] * (end + 1)
    center_num = [0] * (end + 1)
    rho_above = [Fraction(0)] * (end + 1)
    thr_num = [0] * (end + 1)
    thr_mul = [0] * (end + 1)
    den_pair = [d[l + 1] * d[l] for l in range(end + 1)]

    def init_level(level: int, rho: Fraction) -> bool:
        rem = radius - rho
        if rem <= 0:
            return False
        s = 0
        xr = x
        for j in range(level + 1, end + 1):
            xj = xr[j]
            if xj:
                s += xj * lam[j][level]
        dl1 = d[level + 1]
        center_num[level] = s
        rho_above[level] = rho
        thr_num[level] = rem.numerator * den_pair[level]
        thr_mul[level] = rem.denominator
        x0[level] = (dl1 - 2 * s) // (2 * dl1)
        f_num = -(s + x0[level] * dl1)
        side[level] = -1 if f_num < 0 else 1
        cand_idx[level] = 0
        return True

    if not init_level(end, Fraction(0)):
        return EnumOutcome(best_coeffs, best_norm, nodes, True)

    level = end
    while True:
        k = cand_idx[level]
        if level == end:
            # top level is symmetric (center 0): nonnegative side only
            cand = k
        elif k == 0:
            cand = x0[level]
        elif k % 2 == 1:
            cand = x0[level] + side[level] * ((k + 1) // 2)
        else:
            cand = x0[level] - side[level] * (k // 2)

        nodes += 1
        if nodes % BUDGET_POLL_NODES == 0:
            if (
                (deadline is not None and time.monotonic() >= deadline)
                or (node_cap is not None and nodes >= node_cap)
                or (should_stop is not None and should_stop())
            ):
                return EnumOutcome(best_coeffs, best_norm, nodes, False)

        t_root = cand * d[level + 1] + center_num[level]
        t_num = t_root * t_root
        if t_num * thr_mul[level] < thr_num[level]:
            x[level] = cand
            cand_idx[level] = k + 1
            rho_here = rho_above[level] + Fraction(t_num, den_pair[level])
            if level == start:
                if 0 < rho_here < best_norm:
                    best_norm = rho_here
                    best_coeffs = tuple(x[start : end + 1])
                    radius = rho_here
                # keep scanning this level; cached thresholds above stay
                # valid (only looser), so exactness is preserved
            else:
                level -= 1
                if init_level(level, rho_here):
                    continue
                level += 1
        else:
            # zig-zag order is monotone in partial norm: level exhausted
            if level == end:
                return EnumOutcome(best_coeffs, best_norm, nodes, True)
            level += 1


def exact_block_minimum(
    state: GSState,
    start: int,
    end: int,
    should_stop: Optional[Callable[[], bool]] = None,
) -> Optional[EnumOutcome]:
    """Block SVP for BKZ; None when cancelled before completion."""
    outcome = enumerate_block(state, start, end, should_stop=should_stop)
    return outcome if outcome.completed else None


def insert_block_vector(rows: list[list[int]], start: int, coeffs: tuple[int, ...]) -> None:
    """Replace rows[start:start+len(coeffs)] by a unimodular transform whose
    first row is the combination given by coeffs (which must be primitive)."""
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    assert g == 1, "shortest block vector must have primitive coefficients"
    u = complete_to_unimodular(list(coeffs))
    size = len(coeffs)
    block = rows[start : start + size]
    width = len(block[0])
    new_block = [
        [sum(u[i][t] * block[t][j] for t in range(size)) for j in range(width)]
        for i in range(size)
    ]
    rows[start : start + size] = new_block
