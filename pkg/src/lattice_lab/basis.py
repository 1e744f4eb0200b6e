"""Integer lattice bases: the Basis value type, exact Gram-Schmidt data,
squared determinant, and the plain-text basis format.

A basis is n full-rank integer rows of length m (m >= n). All derived
quantities are exact: Gram-Schmidt coefficients and norms are
fractions.Fraction, determinants are ints.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import BasisParseError, ParameterError, RankDeficientError

MIN_DIM = 2
MAX_DIM = 128


@dataclass(frozen=True)
class Basis:
    """Immutable full-rank integer basis; rows are the basis vectors."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.rows
        n = len(rows)
        if not MIN_DIM <= n <= MAX_DIM:
            raise ParameterError(f"basis must have between {MIN_DIM} and {MAX_DIM} rows, got {n}")
        m = len(rows[0])
        if m < n:
            raise ParameterError(f"basis needs at least as many columns as rows ({n}x{m})")
        for row in rows:
            if len(row) != m:
                raise ParameterError("ragged basis rows")
            for x in row:
                if not isinstance(x, int):
                    raise ParameterError(f"basis entries must be ints, got {type(x).__name__}")
        if not linalg.is_full_rank(self.row_lists()):
            raise RankDeficientError("basis rows are linearly dependent")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Basis":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def row_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class GramSchmidtData:
    """Exact Gram-Schmidt coefficients mu[i][j] (j < i) and squared norms
    of the orthogonalized vectors."""

    mu: tuple[tuple[Fraction, ...], ...]
    bstar_norms_sq: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.bstar_norms_sq)


def gram_schmidt(basis: Basis) -> GramSchmidtData:
    """Classic Gram-Schmidt over the rationals, no rounding anywhere.

    Satisfies b_i = b*_i + sum_{j<i} mu[i][j] b*_j with pairwise
    orthogonal b*_i.
    """
    rows = basis.rows
    n = basis.n
    bstar: list[list[Fraction]] = []
    mu: list[tuple[Fraction, ...]] = []
    norms: list[Fraction] = []
    for i in range(n):
        vec = [Fraction(x) for x in rows[i]]
        mu_row = []
        for j in range(i):
            coeff = sum(Fraction(x) * y for x, y in zip(rows[i], bstar[j])) / norms[j]
            mu_row.append(coeff)
            if coeff:
                for k in range(len(vec)):
                    vec[k] -= coeff * bstar[j][k]
        norm = sum(x * x for x in vec)
        if norm == 0:
            raise RankDeficientError(f"row {i} is dependent on earlier rows")
        bstar.append(vec)
        norms.append(norm)
        mu.append(tuple(mu_row))
    return GramSchmidtData(mu=tuple(mu), bstar_norms_sq=tuple(norms))


def gram_det_sq(basis: Basis) -> int:
    """det(B * B^T): the squared lattice determinant, exactly."""
    return linalg.gram_det(basis.row_lists())


def format_basis(basis: Basis) -> str:
    """Canonical text form: 'n m' header then one space-separated row per line."""
    lines = [f"{basis.n} {basis.m}"]
    lines.extend(" ".join(str(x) for x in row) for row in basis.rows)
    return "\n".join(lines) + "\n"


def parse_basis(text: str) -> Basis:
    """Parse the basis text format; errors carry the offending line number."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise BasisParseError(1, "empty input")
    header = lines[0].split(" ")
    if len(header) != 2:
        raise BasisParseError(1, "header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise BasisParseError(1, f"non-integer header token in {lines[0]!r}") from None
    if len(lines) - 1 < n:
        raise BasisParseError(len(lines) + 1, f"expected {n} rows, found {len(lines) - 1}")
    if len(lines) - 1 > n:
        raise BasisParseError(n + 2, f"expected {n} rows, found extra data")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        tokens = line.split(" ")
        if len(tokens) != m:
            raise BasisParseError(i, f"expected {m} entries, found {len(tokens)}")
        row = []
        for tok in tokens:
            if not _is_int_token(tok):
                raise BasisParseError(i, f"non-integer token {tok!r}")
            row.append(int(tok))
        rows.append(tuple(row))
    return Basis(tuple(rows))


def _is_int_token(tok: str) -> bool:
    body = tok[1:] if tok.startswith("-") else tok
    return body.isdigit() and bool(body)
