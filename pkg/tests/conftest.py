"""Shared exact-arithmetic checkers used across the suite.

Verification always goes through the public fraction-based gram_schmidt,
which is an independent code path from the integer engine that the
reducers and the enumerator run on.
"""

from fractions import Fraction

from lattice_lab import Basis, gram_det_sq, gram_schmidt
from lattice_lab.linalg import coefficients_in_rows

HALF = Fraction(1, 2)


def assert_size_reduced(basis: Basis):
    gs = gram_schmidt(basis)
    for i in range(gs.n):
        for j in range(i):
            assert abs(gs.mu[i][j]) <= HALF, f"mu[{i}][{j}] = {gs.mu[i][j]}"


def assert_lovasz(basis: Basis, delta: Fraction):
    gs = gram_schmidt(basis)
    for i in range(1, gs.n):
        lhs = delta * gs.bstar_norms_sq[i - 1]
        rhs = gs.bstar_norms_sq[i] + gs.mu[i][i - 1] ** 2 * gs.bstar_norms_sq[i - 1]
        assert lhs <= rhs, f"Lovasz fails at {i}: {lhs} > {rhs}"


def assert_same_lattice(original: Basis, reduced: Basis):
    assert gram_det_sq(original) == gram_det_sq(reduced)
    rows = reduced.row_lists()
    for row in original.rows:
        coeffs = coefficients_in_rows(rows, list(row))
        assert coeffs is not None, "input row not in the span of the output"
        assert all(c.denominator == 1 for c in coeffs), f"non-integral coefficients {coeffs}"


def assert_lll_reduced(original: Basis, reduced: Basis, delta: Fraction):
    assert_size_reduced(reduced)
    assert_lovasz(reduced, delta)
    assert_same_lattice(original, reduced)
