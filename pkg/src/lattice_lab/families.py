"""Seeded basis generators for three lattice families.

uniform    dense n x n matrix, entries drawn mod 2**bits
qary       block matrix [[q*I, 0], [A, I]] with A uniform mod q
circulant  cyclic right-shifts of one uniform row (structured stand-in)

Generation is a pure function of (family, n, seed).
"""

from dataclasses import dataclass

from . import linalg
from .basis import MAX_DIM, MIN_DIM, Basis
from .errors import GenerationError, ParameterError
from .rng import MASK64, SplitMix64

FAMILY_KINDS = ("uniform", "qary", "circulant")

MAX_RANK_RETRIES = 16


@dataclass(frozen=True)
class LatticeFamily:
    kind: str
    bits: int = 30
    q: int = 12289

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}; expected one of {FAMILY_KINDS}")
        if not 4 <= self.bits <= 64:
            raise ParameterError(f"bits must be in [4, 64], got {self.bits}")
        if self.q < 3 or not is_prime(self.q):
            raise ParameterError(f"q must be a prime >= 3, got {self.q}")


def is_prime(x: int) -> bool:
    """Deterministic Miller-Rabin, exact for x < 3317044064679887385961981."""
    if x < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if x % p == 0:
            return x == p
    d = x - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        y = pow(a, d, x)
        if y in (1, x - 1):
            continue
        for _ in range(r - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def gen_basis(family: LatticeFamily, n: int, seed: int) -> Basis:
    """Deterministic basis for (family, n, seed).

    Rank-deficient draws (possible for uniform/circulant) restart from the
    stream seeded with seed+1, seed+2, ... up to MAX_RANK_RETRIES times.
    """
    if not MIN_DIM <= n <= MAX_DIM:
        raise ParameterError(f"n must be in [{MIN_DIM}, {MAX_DIM}], got {n}")
    if family.kind == "qary":
        return _gen_qary(family, n, seed)
    maker = _gen_uniform_rows if family.kind == "uniform" else _gen_circulant_rows
    for attempt in range(MAX_RANK_RETRIES + 1):
        rng = SplitMix64((seed + attempt) & MASK64)
        rows = maker(family, n, rng)
        if linalg.is_full_rank(rows):
            return Basis.from_rows(rows)
    raise GenerationError(
        f"no full-rank {family.kind} basis after {MAX_RANK_RETRIES} retries (n={n}, seed={seed})"
    )


def _gen_uniform_rows(family: LatticeFamily, n: int, rng: SplitMix64) -> list[list[int]]:
    mask = (1 << family.bits) - 1
    return [[rng.next_u64() & mask for _ in range(n)] for _ in range(n)]


def _gen_circulant_rows(family: LatticeFamily, n: int, rng: SplitMix64) -> list[list[int]]:
    mask = (1 << family.bits) - 1
    first = [rng.next_u64() & mask for _ in range(n)]
    rows = [first]
    for _ in range(n - 1):
        prev = rows[-1]
        rows.append([prev[-1]] + prev[:-1])
    return rows


def _gen_qary(family: LatticeFamily, n: int, seed: int) -> Basis:
    if n % 2 != 0:
        raise ParameterError(f"qary family needs even n, got {n}")
    h = n // 2
    q = family.q
    rng = SplitMix64(seed)
    a = [[rng.below(q) for _ in range(h)] for _ in range(h)]
    rows = []
    for i in range(h):
        row = [0] * n
        row[i] = q
        rows.append(row)
    for i in range(h):
        rows.append(a[i] + [1 if j == i else 0 for j in range(h)])
    # det = q**h regardless of A, so no rank retry is ever needed
    return Basis.from_rows(rows)
