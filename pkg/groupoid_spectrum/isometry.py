from dataclasses import dataclass
from typing import Dict, List, Optional

from digraph_matrix.exact_matrix import (
    ExactMatrix,
    NotNormalisingError,
    check_membership,
)
from digraph_matrix.generation import matrix_unit
from relation_core.pairs import SupportRelation


@dataclass
class PartialHomeomorphism:
    """The partial map j -> i on diagonal indices with v e_jj v* = e_ii."""

    mapping: Dict[int, int]

    @property
    def domain(self) -> List[int]:
        return sorted(self.mapping)

    @property
    def range(self) -> List[int]:
        return sorted(self.mapping.values())


def partial_homeo_of_isometry(
    isometry: ExactMatrix, relation: Optional[SupportRelation] = None
) -> PartialHomeomorphism:
    """Action of a normalising partial isometry on the diagonal matrix units.

    Args:
        isometry: Matrix with at most one nonzero entry per row and column,
            each of modulus one.
        relation: When given, the isometry must also lie in A(P).

    Raises:
        NotNormalisingError: If the matrix is not such a partial isometry or
            some v e_jj v* is not a diagonal matrix unit.
        MatrixMembershipError: If relation is given and v is outside A(P).
    """
    if relation is not None:
        check_membership(relation, isometry)

    pairs = isometry.support().pairs
    rows = [i for i, _ in pairs]
    cols = [j for _, j in pairs]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise NotNormalisingError(
            "A normalising partial isometry has at most one entry per row and column"
        )
    for i, j in pairs:
        real, imaginary = isometry.entry(i, j)
        if real * real + imaginary * imaginary != 1:
            raise NotNormalisingError(f"Entry ({i}, {j}) does not have modulus one")

    n = isometry.n
    adjoint = isometry.adjoint()
    mapping: Dict[int, int] = {}
    for j in range(1, n + 1):
        image = isometry @ matrix_unit(n, j, j) @ adjoint
        if image.is_zero():
            continue
        support = image.support().pairs
        if len(support) != 1 or support[0][0] != support[0][1]:
            raise NotNormalisingError(f"v e_{j}{j} v* is not a diagonal matrix unit")
        i = support[0][0]
        if image != matrix_unit(n, i, i):
            raise NotNormalisingError(f"v e_{j}{j} v* is not a projection")
        mapping[j] = i
    return PartialHomeomorphism(mapping)
