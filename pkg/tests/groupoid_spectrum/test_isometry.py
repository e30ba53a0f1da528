import pytest

from digraph_matrix.exact_matrix import (
    ExactMatrix,
    MatrixMembershipError,
    NotNormalisingError,
)
from groupoid_spectrum.isometry import partial_homeo_of_isometry


def test_t7_isometry_moves_diagonal_units(t7) -> None:
    isometry = ExactMatrix.from_entries(7, {(1, 3): 1, (2, 7): 1, (4, 5): 1})

    homeo = partial_homeo_of_isometry(isometry, t7)

    assert homeo.mapping == {3: 1, 5: 4, 7: 2}
    assert homeo.domain == [3, 5, 7]
    assert homeo.range == [1, 2, 4]


def test_unimodular_complex_entries_are_allowed() -> None:
    isometry = ExactMatrix.from_entries(2, {(1, 2): (0, 1), (2, 1): -1})

    assert partial_homeo_of_isometry(isometry).mapping == {1: 2, 2: 1}


def test_zero_matrix_has_empty_action() -> None:
    assert partial_homeo_of_isometry(ExactMatrix.zeros(3)).mapping == {}


def test_two_entries_in_a_row_are_rejected() -> None:
    with pytest.raises(NotNormalisingError):
        partial_homeo_of_isometry(ExactMatrix.from_entries(2, {(1, 1): 1, (1, 2): 1}))


def test_entries_must_have_modulus_one() -> None:
    with pytest.raises(NotNormalisingError):
        partial_homeo_of_isometry(ExactMatrix.from_entries(2, {(1, 2): 2}))


def test_isometry_must_lie_in_the_algebra(t7) -> None:
    with pytest.raises(MatrixMembershipError):
        partial_homeo_of_isometry(ExactMatrix.from_entries(7, {(3, 1): 1}), t7)
