import pytest
from hypothesis import given, strategies as st

from qfock.canonfock import (
    WedgeSpace,
    check_basis,
    column_alphas,
    column_seed,
    compare_bases,
    decomposition_matrix,
    hall_basis,
    hall_fock_action,
    inversion_check,
    lt_basis,
    lt_basis_from_psi_matrix,
)
from qfock.combinat import orbit_of_partition
from qfock.hallalg import HallVector, generator, hall_canonical
from qfock.laurent import ONE, parse_laurent

P = parse_laurent


def _table(weight, n, kind="+", l=None):
    t = lt_basis(weight, n, kind, l)
    return {lam: {mu: str(c) for mu, c in col.items()} for lam, col in t.columns.items()}


def test_small_weights():
    assert lt_basis(0, 2).columns == {(): {(): ONE}}
    assert lt_basis(1, 2).columns == {(1,): {(1,): ONE}}
    assert hall_basis(0, 2).columns == {(): {(): ONE}}
    assert hall_basis(1, 2).columns == {(1,): {(1,): ONE}}


def test_weight_two_level_two():
    assert _table(2, 2) == {(2,): {(2,): "1", (1, 1): "v"}, (1, 1): {(1, 1): "1"}}


# classical tables of the level-two and level-three Fock spaces
def test_weight_three_level_two():
    assert _table(3, 2) == {
        (3,): {(3,): "1", (1, 1, 1): "v"},
        (2, 1): {(2, 1): "1"},
        (1, 1, 1): {(1, 1, 1): "1"},
    }


def test_weight_four_level_two():
    assert _table(4, 2) == {
        (4,): {(4,): "1", (3, 1): "v", (2, 1, 1): "v", (1, 1, 1, 1): "v^2"},
        (3, 1): {(3, 1): "1", (2, 2): "v", (2, 1, 1): "v^2"},
        (2, 2): {(2, 2): "1", (2, 1, 1): "v"},
        (2, 1, 1): {(2, 1, 1): "1", (1, 1, 1, 1): "v"},
        (1, 1, 1, 1): {(1, 1, 1, 1): "1"},
    }


def test_weight_three_level_three():
    assert _table(3, 3) == {
        (3,): {(3,): "1", (2, 1): "v"},
        (2, 1): {(2, 1): "1", (1, 1, 1): "v"},
        (1, 1, 1): {(1, 1, 1): "1"},
    }


def test_decomposition_matrices():
    assert decomposition_matrix(1, 2) == ([(1,)], [[1]])
    assert decomposition_matrix(2, 2) == ([(2,), (1, 1)], [[1, 0], [1, 1]])
    order, mat = decomposition_matrix(4, 2)
    assert order == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert mat == [[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [1, 1, 1, 1, 0], [1, 0, 0, 1, 1]]


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("kind", ["+", "-"])
def test_lt_bases_are_canonical(n, kind):
    for w in range(6):
        check_basis(lt_basis(w, n, kind, check=False))


@pytest.mark.parametrize("n, l", [(2, None), (3, None), (2, 2), (3, 2)])
def test_two_constructions_agree(n, l):
    for w in range(5):
        for kind in "+-":
            assert not compare_bases(lt_basis(w, n, kind, l), lt_basis_from_psi_matrix(w, n, kind, l))


@pytest.mark.parametrize("n", [2, 3])
def test_hall_basis_equals_plus_basis(n):
    for w in range(5):
        assert not compare_bases(hall_basis(w, n), lt_basis(w, n, "+"))


def test_finite_wedge_hall_basis():
    for w in range(6):
        assert not compare_bases(hall_basis(w, 3, 2), lt_basis(w, 3, "+", 2))


@pytest.mark.parametrize("n", [2, 3])
def test_inversion_identity(n):
    for w in range(5):
        assert inversion_check(w, n)


@pytest.mark.parametrize("n", [2, 3])
def test_decomposition_matrices_are_unitriangular_and_nonnegative(n):
    for w in range(6):
        order, mat = decomposition_matrix(w, n)
        for i in range(len(order)):
            assert mat[i][i] == 1
            assert all(x == 0 for x in mat[i][i + 1:])
            assert all(x >= 0 for x in mat[i])


@given(st.sampled_from([(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2), (3, 1)]), st.sampled_from([2, 3]))
def test_column_seed_is_psi_fixed_and_led_by_lam(lam, n):
    space = WedgeSpace(n)
    seed = column_seed(lam, space)
    assert seed[lam] == ONE
    assert space.psi(seed) == seed
    assert sum(sum(a) for a in column_alphas(lam, n)) == sum(lam)


def test_vacuum_actions():
    space = WedgeSpace(2)
    unit = HallVector.orbit(orbit_of_partition((), 2))
    assert hall_fock_action(unit, space.vacuum(), space) == space.vacuum()
    assert hall_fock_action(generator(2, (1, 0)), space.vacuum(), space) == {(1,): ONE}
    b = hall_canonical(orbit_of_partition((1,), 2))
    assert hall_fock_action(b, space.vacuum(), space) == {(1,): ONE}


def test_json_shape():
    data = lt_basis(2, 2).to_json()
    assert data["order"] == [[2], [1, 1]]
    assert data["columns"]["2"] == {"2": [[0, 1]], "1,1": [[1, 1]]}


def test_bad_arguments():
    with pytest.raises(ValueError):
        WedgeSpace(1)
    with pytest.raises(ValueError):
        lt_basis(2, 2, "x")
