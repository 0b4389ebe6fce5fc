import pytest
from hypothesis import given, settings

from _strategies import nontrivial_partitions
from slodowy.errors import DegenerateAmbient, SamplingExhausted
from slodowy.liealg import (
    ad_matrix,
    bracket,
    centralizer_basis,
    expected_slice_basis_dim,
    image_of_ad,
    jordan_nilpotent,
    slice_sample_dim,
    sl2_completion,
    slodowy_slice_basis,
    transversality_check,
)
from slodowy.linalg import Matrix
from slodowy.partitions import Partition, all_partitions, dual, orbit_dim
from slodowy.quiverlab import nilpotent_partition
from slodowy.slices import make_slice_pair, slice_dim

P = Partition
M = Matrix


def test_jordan_examples():
    assert jordan_nilpotent(P([2])) == M([[0, 1], [0, 0]])
    assert jordan_nilpotent(P([2, 1])) == M([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert jordan_nilpotent(P([1, 1])).is_zero()


def test_sl2_examples():
    t = sl2_completion(P([2]))
    assert t.y == M([[0, 0], [1, 0]]) and t.h == M([[1, 0], [0, -1]])
    t = sl2_completion(P([3]))
    assert t.y == M([[0, 0, 0], [2, 0, 0], [0, 2, 0]])
    assert t.h == M([[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    # [x, y] = h by direct multiplication
    assert t.x @ t.y - t.y @ t.x == t.h
    with pytest.raises(DegenerateAmbient):
        sl2_completion(P([1, 1, 1]))


def test_triples_exhaustive():
    for n in range(2, 9):
        for d in all_partitions(n):
            if d.is_trivial():
                continue
            t = sl2_completion(d)
            assert bracket(t.x, t.y) == t.h
            assert bracket(t.h, t.x) == 2 * t.x
            assert bracket(t.h, t.y) == -2 * t.y
            assert t.x.trace() == t.y.trace() == t.h.trace() == 0
            assert nilpotent_partition(t.x) == d


def test_ad_matches_bracket():
    x = jordan_nilpotent(P([3, 1]))
    v = M([[1, 2, 0, 0], [0, 3, 0, 1], [4, 0, 0, 0], [0, 0, 5, 6]])
    got = Matrix.unvec([sum(ad_matrix(x)[r, c] * v.vec()[c] for c in range(16)) for r in range(16)], 4, 4)
    assert got == bracket(x, v)


def test_centralizer_dimensions_exhaustive():
    for n in range(2, 9):
        for d in all_partitions(n):
            squares = sum(a * a for a in dual(d))
            x = jordan_nilpotent(d)
            assert image_of_ad(x).ncols == n * n - squares == orbit_dim(d)
            if not d.is_trivial():
                y = sl2_completion(d).y
                assert centralizer_basis(y, traceless=False).ncols == squares
                assert centralizer_basis(y).ncols == squares - 1


def test_slice_basis_examples():
    t = sl2_completion(P([2]))
    basis = slodowy_slice_basis(t)
    assert len(basis) == 1
    assert basis[0].rank() == 1 and bracket(basis[0], t.y).is_zero()
    # spanned by y
    assert Matrix([basis[0].vec(), t.y.vec()]).rank() == 1
    t = sl2_completion(P([2, 1]))
    basis = slodowy_slice_basis(t)
    assert len(basis) == 4 == expected_slice_basis_dim(P([2, 1]))
    assert all(b.trace() == 0 and bracket(t.y, b).is_zero() for b in basis)


def test_transversality_examples():
    assert transversality_check(sl2_completion(P([2])), P([2]))
    assert transversality_check(sl2_completion(P([2, 1])), P([2, 1]))
    assert not transversality_check(sl2_completion(P([2, 1])), P([3]))


def test_transversality_exhaustive():
    for n in range(2, 8):
        for d in all_partitions(n):
            if not d.is_trivial():
                assert transversality_check(sl2_completion(d), d)


@settings(max_examples=15, deadline=None)
@given(nontrivial_partitions(max_n=9))
def test_slice_basis_dimension(d):
    assert len(slodowy_slice_basis(sl2_completion(d))) == expected_slice_basis_dim(d)


@pytest.mark.parametrize(
    "dp, d, expected",
    [([2, 1], [2, 1], 0), ([1, 1], [2], 2), ([2, 2, 1], [3, 2], 4), ([1, 1, 1], [2, 1], 4), ([2, 1], [3], 2)],
)
def test_slice_sample_dim(dp, d, expected):
    sp = make_slice_pair(P(dp), P(d))
    assert slice_sample_dim(sp, trials=10, seed=1) == expected == slice_dim(sp)


def test_slice_sample_dim_is_seeded():
    sp = make_slice_pair(P([2, 2, 1, 1]), P([3, 2, 1]))
    assert slice_sample_dim(sp, 5, seed=3) == slice_sample_dim(sp, 5, seed=3) == slice_dim(sp)


def test_slice_sample_dim_reports_exhaustion():
    sp = make_slice_pair(P([2, 2, 1]), P([3, 2]))
    with pytest.raises(SamplingExhausted):
        slice_sample_dim(sp, trials=0)
