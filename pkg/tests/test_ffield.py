import pytest
from hypothesis import given, settings, strategies as st

from qtbinomial.boxes import BoxedPartition, partition_weight
from qtbinomial.exprcore import we_to_poly
from qtbinomial.ffield import (
    EchelonMatrix, csv_row, dickson_coefficient_formula, dickson_identity_check, dickson_product,
    enumerate_subspaces, is_prime, parametrization_positions, pivot_sets, subspace_distance,
    subspace_partition, subspace_statistic, subspace_sum, subspace_sums_by_shape,
)
from qtbinomial.qtnum import qt_binomial
from qtbinomial.tpoly import FpPoly2, TPoly
import oracles

WORKED_PIVOTS = (8, 6, 3, 1)


def test_worked_echelon_shape_and_distances():
    assert subspace_partition(WORKED_PIVOTS, 10) == (4, 3, 1, 0)
    positions = parametrization_positions(WORKED_PIVOTS, 10)
    assert positions == [(1, 2), (1, 4), (1, 5), (1, 7), (2, 2), (2, 4), (2, 5), (3, 2)]
    U = EchelonMatrix(2, 10, 4, WORKED_PIVOTS, {pos: 0 for pos in positions})
    dists = [subspace_distance(U, i, j) for i, j in positions]
    assert dists == [3, 4, 5, 6, 2, 3, 4, 1]


def test_echelon_validation():
    with pytest.raises(ValueError):
        EchelonMatrix(2, 3, 2, (1, 2), {})
    with pytest.raises(ValueError):
        EchelonMatrix(2, 3, 1, (2,), {(1, 1): 2})
    assert not is_prime(4) and is_prime(5)
    with pytest.raises(ValueError):
        list(enumerate_subspaces(3, 1, 4))


def test_pivot_sets_colex():
    assert pivot_sets(3, 2) == [(2, 1), (3, 1), (3, 2)]


@pytest.mark.parametrize("n,k,p", [(3, 1, 2), (4, 2, 2), (3, 2, 3), (4, 2, 3), (4, 3, 2)])
def test_enumeration_is_a_bijection_onto_subspaces(n, k, p):
    mats = list(enumerate_subspaces(n, k, p))
    assert len(mats) == oracles.gaussian_count(n, k, p)
    forms = {oracles.rref(U.rows(), p) for U in mats}
    assert len(forms) == len(mats)
    assert forms == oracles.all_subspaces(n, k, p)


def test_largest_count():
    assert sum(1 for _ in enumerate_subspaces(5, 2, 3)) == 1210


@pytest.mark.parametrize("p", [2, 3])
def test_subspace_sum_matches_binomial(p):
    for n in range(5):
        for k in range(n + 1):
            assert subspace_sum(n, k, p) == qt_binomial(n, k, p)


def test_sums_by_shape_match_partition_weights():
    for (n, k, p) in [(4, 2, 2), (4, 2, 3), (5, 3, 2)]:
        for lam, poly in subspace_sums_by_shape(n, k, p).items():
            assert poly == we_to_poly(partition_weight(BoxedPartition(lam, k)), p)


@settings(max_examples=10, deadline=None)
@given(st.permutations([0, 1]), st.permutations([1, 2]))
def test_sum_invariant_under_labelings(perm0, perm1):
    phi0 = lambda a: perm0[a]
    phi1 = lambda a: perm1[a]
    assert subspace_sum(4, 2, 2, phi0, phi1) == qt_binomial(4, 2, 2)


@settings(max_examples=10, deadline=None)
@given(st.permutations([0, 1, 2]), st.permutations([1, 2, 3]))
def test_sum_invariant_under_labelings_mod3(perm0, perm1):
    assert subspace_sum(3, 2, 3, perm0.__getitem__, perm1.__getitem__) == qt_binomial(3, 2, 3)


def test_csv_row():
    U = EchelonMatrix(2, 3, 1, (3,), {(1, 1): 1, (1, 2): 0})
    assert csv_row(U) == ("3", "1 0", "2", str(subspace_statistic(U)))


def test_dickson_worked_product():
    # y^4 + (1 + t + t^2) y^2 + (t + t^2) y over F_2
    expected = FpPoly2(2, {(4, 0): 1, (2, 0): 1, (2, 1): 1, (2, 2): 1, (1, 1): 1, (1, 2): 1})
    assert dickson_product(2, 2) == expected


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 5)])
def test_dickson_identity(n, p):
    assert dickson_identity_check(n, p)


def test_dickson_needs_sign_in_odd_characteristic():
    # prod_{c in F_3} (y + c) = y^3 - y: the y coefficient is -1, not +1
    assert dickson_product(1, 3).y_coefficient(1) == TPoly.monomial(0, 2)
    assert not dickson_identity_check(1, 3, literal=True)
    assert dickson_identity_check(2, 2, literal=True)
    assert dickson_coefficient_formula(2, 1, 2) == dickson_coefficient_formula(2, 1, 2, literal=True)


def test_dickson_limit():
    with pytest.raises(OverflowError):
        dickson_product(7, 3)
