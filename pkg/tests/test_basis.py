from fractions import Fraction

import pytest

from lattice_lab import (
    Basis,
    BasisParseError,
    LatticeFamily,
    ParameterError,
    RankDeficientError,
    format_basis,
    gen_basis,
    gram_det_sq,
    gram_schmidt,
    parse_basis,
)


def test_gram_schmidt_hand_example():
    gs = gram_schmidt(Basis.from_rows([[3, 0], [1, 2]]))
    assert gs.mu[1][0] == Fraction(1, 3)
    assert gs.bstar_norms_sq == (Fraction(9), Fraction(4))


def test_gram_schmidt_identity():
    eye = Basis.from_rows([[1 if i == j else 0 for j in range(4)] for i in range(4)])
    gs = gram_schmidt(eye)
    assert all(x == 0 for row in gs.mu for x in row)
    assert gs.bstar_norms_sq == (Fraction(1),) * 4


def test_gram_schmidt_duplicate_row_rejected():
    with pytest.raises(RankDeficientError):
        Basis.from_rows([[2, 0], [2, 0]])


def test_gram_schmidt_reconstruction():
    # b_i = b*_i + sum_{j<i} mu[i][j] b*_j recovers the rows exactly
    for seed in range(6):
        basis = gen_basis(LatticeFamily("uniform", bits=16), 7, seed)
        gs = gram_schmidt(basis)
        bstar = []
        for i in range(basis.n):
            vec = [Fraction(x) for x in basis.rows[i]]
            for j in range(i):
                for k in range(basis.m):
                    vec[k] -= gs.mu[i][j] * bstar[j][k]
            bstar.append(vec)
            rebuilt = [
                bstar[i][k] + sum(gs.mu[i][j] * bstar[j][k] for j in range(i))
                for k in range(basis.m)
            ]
            assert rebuilt == [Fraction(x) for x in basis.rows[i]]


def test_norm_product_equals_gram_det():
    for kind in ("uniform", "qary", "circulant"):
        for n in (2, 4, 8, 20):
            basis = gen_basis(LatticeFamily(kind, bits=12), n, seed=3)
            gs = gram_schmidt(basis)
            prod = Fraction(1)
            for x in gs.bstar_norms_sq:
                prod *= x
            assert prod == gram_det_sq(basis)


def test_gram_det_examples():
    eye3 = Basis.from_rows([[1 if i == j else 0 for j in range(3)] for i in range(3)])
    assert gram_det_sq(eye3) == 1
    assert gram_det_sq(Basis.from_rows([[2, 0], [0, 3]])) == 36
    assert gram_det_sq(Basis.from_rows([[5, 3], [3, 2]])) == 1


def test_basis_validation():
    with pytest.raises(ParameterError):
        Basis.from_rows([[1, 0]])  # too few rows
    with pytest.raises(ParameterError):
        Basis.from_rows([[1], [1]])  # m < n
    with pytest.raises(ParameterError):
        Basis(((1.5, 0.0), (0.0, 1.0)))  # floats stored directly
    with pytest.raises(ParameterError):
        Basis.from_rows([[1, 0], [0]])  # ragged


def test_rectangular_basis_allowed():
    b = Basis.from_rows([[1, 0, 0], [0, 1, 1]])
    assert (b.n, b.m) == (2, 3)
    assert gram_det_sq(b) == 2


def test_parse_format_roundtrip():
    text = "2 2\n1 0\n0 1\n"
    b = parse_basis(text)
    assert b.rows == ((1, 0), (0, 1))
    assert format_basis(b) == text
    # negatives and big entries
    b2 = Basis.from_rows([[-(10**30), 2], [3, 10**25]])
    assert parse_basis(format_basis(b2)) == b2


def test_parse_roundtrip_seeded_bases():
    for kind in ("uniform", "qary", "circulant"):
        b = gen_basis(LatticeFamily(kind), 6, seed=11)
        assert parse_basis(format_basis(b)) == b


@pytest.mark.parametrize(
    "text,line",
    [
        ("2 2\n1 0\n", 3),  # missing row
        ("2\n1 0\n0 1\n", 1),  # bad header
        ("2 2\n1 x\n0 1\n", 2),  # non-integer token
        ("2 2\n1 0 0\n0 1\n", 2),  # wrong column count
        ("2 2\n1 0\n0 1\n9 9\n", 4),  # extra row
        ("", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(BasisParseError) as err:
        parse_basis(text)
    assert err.value.line == line
