from fractions import Fraction

import pytest

from lattice_lab import (
    Basis,
    LatticeFamily,
    ParameterError,
    ReductionParams,
    bkz,
    bruteforce_svp,
    gen_basis,
    gram_det_sq,
    gram_schmidt,
    lll,
    size_reduce,
)
from conftest import assert_lll_reduced, assert_lovasz, assert_same_lattice, assert_size_reduced


def eye(n):
    return Basis.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def test_params_validation():
    with pytest.raises(ParameterError):
        ReductionParams(delta=Fraction(1, 4))
    with pytest.raises(ParameterError):
        ReductionParams(delta=Fraction(1))  # termination not guaranteed
    with pytest.raises(ParameterError):
        ReductionParams(beta=1)
    with pytest.raises(ParameterError):
        ReductionParams(max_rounds=0)


def test_size_reduce_identity_unchanged():
    b = eye(3)
    assert size_reduce(b).rows == b.rows


def test_size_reduce_hand_example():
    out = size_reduce(Basis.from_rows([[1, 0], [3, 1]]))
    assert out.rows == ((1, 0), (0, 1))


def test_size_reduce_postconditions_and_idempotence():
    for seed in range(5):
        basis = gen_basis(LatticeFamily("uniform", bits=14), 8, seed)
        out = size_reduce(basis)
        assert_size_reduced(out)
        # Gram-Schmidt norms unchanged
        assert gram_schmidt(basis).bstar_norms_sq == gram_schmidt(out).bstar_norms_sq
        assert_same_lattice(basis, out)
        assert size_reduce(out).rows == out.rows


def test_lll_identity():
    rep = lll(eye(5))
    assert rep.basis.rows == eye(5).rows
    assert rep.swaps == 0
    assert rep.status == "ok"


def test_lll_det_one_lattice():
    rep = lll(Basis.from_rows([[5, 3], [3, 2]]))
    norms = [sum(x * x for x in row) for row in rep.basis.rows]
    assert norms == [1, 1]


def test_lll_attains_minimum_in_dim_2():
    basis = Basis.from_rows([[5, 3], [3, 2]])
    oracle = bruteforce_svp(basis, 8)
    rep = lll(basis)
    assert sum(x * x for x in rep.basis.rows[0]) == oracle.norm_sq == 1


@pytest.mark.parametrize("kind", ["uniform", "qary", "circulant"])
@pytest.mark.parametrize("n", [2, 5, 10])
def test_lll_postconditions_grid(kind, n):
    if kind == "qary" and n % 2:
        n += 1
    delta = Fraction(99, 100)
    for seed in (1, 2, 3):
        basis = gen_basis(LatticeFamily(kind, bits=20), n, seed)
        rep = lll(basis, ReductionParams(delta=delta))
        assert rep.status == "ok"
        assert rep.swaps >= 0 and rep.wall_time_s >= 0
        assert_lll_reduced(basis, rep.basis, delta)


def test_lll_quality_bound_delta_three_quarters():
    # ||b1||^2 <= 2^((n-1)/2) * det(L)^(2/n), compared exactly by raising
    # both sides to the 2n-th power
    delta = Fraction(3, 4)
    for kind in ("uniform", "qary", "circulant"):
        for n in (4, 8, 16, 20):
            basis = gen_basis(LatticeFamily(kind, bits=16), n, seed=9)
            rep = lll(basis, ReductionParams(delta=delta))
            norm1 = sum(x * x for x in rep.basis.rows[0])
            gds = gram_det_sq(basis)
            assert norm1 ** (2 * n) <= 2 ** (n * (n - 1)) * gds**2


def test_lll_deterministic():
    basis = gen_basis(LatticeFamily("uniform"), 12, 4)
    a = lll(basis)
    b = lll(basis)
    assert a.basis == b.basis and a.swaps == b.swaps and a.rounds == b.rounds


def test_lll_cancellation_preserves_lattice():
    basis = gen_basis(LatticeFamily("uniform"), 16, 2)
    calls = [0]

    def stop_after_three():
        calls[0] += 1
        return calls[0] > 3

    rep = lll(basis, should_stop=stop_after_three)
    assert rep.status == "cancelled"
    assert_same_lattice(basis, rep.basis)


def test_bkz_full_block_solves_svp():
    # diag(2,3,5,7) scrambled by unimodular row operations
    rows = [[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 5, 0], [0, 0, 0, 7]]
    rows[0] = [a + 3 * b for a, b in zip(rows[0], rows[2])]
    rows[3] = [a - 2 * b for a, b in zip(rows[3], rows[1])]
    rows[1] = [a + 5 * b for a, b in zip(rows[1], rows[0])]
    rows[2] = [a - b for a, b in zip(rows[2], rows[3])]
    scrambled = Basis.from_rows(rows)
    oracle = bruteforce_svp(scrambled, 8)
    rep = bkz(scrambled, ReductionParams(beta=4))
    assert rep.status == "ok"
    first_norm = sum(x * x for x in rep.basis.rows[0])
    assert first_norm == oracle.norm_sq == 4
    assert_same_lattice(scrambled, rep.basis)


def test_bkz_beta_2_matches_lll_postconditions():
    delta = Fraction(3, 4)
    basis = gen_basis(LatticeFamily("uniform", bits=12), 6, 8)
    rep = bkz(basis, ReductionParams(beta=2, delta=delta))
    assert rep.status == "ok"
    assert_lll_reduced(basis, rep.basis, delta)


def test_bkz_identity_unchanged():
    for beta in (2, 3, 6):
        rep = bkz(eye(6), ReductionParams(beta=beta))
        assert rep.basis.rows == eye(6).rows


def test_bkz_beta_exceeds_n():
    with pytest.raises(ParameterError):
        bkz(eye(4), ReductionParams(beta=5))


def test_bkz_block_postcondition():
    # after a clean pass, ||b*_i||^2 is the exact block minimum; check the
    # first block against the brute-force oracle on the reduced basis
    basis = gen_basis(LatticeFamily("uniform", bits=12), 6, 3)
    rep = bkz(basis, ReductionParams(beta=3))
    assert rep.status == "ok"
    reduced = rep.basis
    oracle = bruteforce_svp(reduced, 8)
    gs = gram_schmidt(reduced)
    # block [0, beta-1] projects trivially: first GS vector is b_0 itself
    assert gs.bstar_norms_sq[0] <= oracle.norm_sq or sum(
        x * x for x in reduced.rows[0]
    ) == oracle.norm_sq


def test_bkz_full_block_grid_matches_oracle():
    for seed in range(4):
        basis = gen_basis(LatticeFamily("uniform", bits=10), 5, seed)
        rep = bkz(basis, ReductionParams(beta=5))
        oracle = bruteforce_svp(lll(basis).basis, 8)
        assert sum(x * x for x in rep.basis.rows[0]) == oracle.norm_sq
        assert_lovasz(rep.basis, Fraction(99, 100))
        assert_same_lattice(basis, rep.basis)
