"""Matrix units, compressions and numeric ideal generation inside A(P)."""

import logging
from typing import Dict, List, Optional, Set, Tuple

from sympy import prime

from digraph_matrix.exact_matrix import (
    ExactMatrix,
    FixedPointError,
    check_membership,
)
from relation_core.errors import IndexRangeError
from relation_core.pairs import Pair, PairSet, SupportRelation

logger = logging.getLogger("digraph_matrix.generation")


def matrix_unit(n: int, i: int, j: int) -> ExactMatrix:
    """e_ij: a single 1 at position (i, j)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexRangeError(f"Matrix unit ({i}, {j}) is outside 1..{n}")
    return ExactMatrix.from_entries(n, {(i, j): 1})


def compress(i: int, matrix: ExactMatrix, j: int) -> ExactMatrix:
    """e_ii A e_jj: keeps only the entry a_ij."""
    n = matrix.n
    return matrix_unit(n, i, i) @ matrix @ matrix_unit(n, j, j)


def indicator_matrix(pair_set: PairSet) -> ExactMatrix:
    """Sum of e_ij over the pair-set."""
    return ExactMatrix.from_entries(pair_set.n, {pair: 1 for pair in pair_set.pairs})


def generic_matrix(pair_set: PairSet) -> ExactMatrix:
    """Matrix supported on the pair-set with the k-th prime on the k-th pair.

    Pairs are numbered in row-major order; distinct primes keep sums of
    products from cancelling by accident.
    """
    return ExactMatrix.from_entries(
        pair_set.n,
        {pair: int(prime(k)) for k, pair in enumerate(pair_set.pairs, start=1)},
    )


def numeric_generated_support(
    relation: SupportRelation,
    generator: ExactMatrix,
    max_iters: Optional[int] = None,
) -> PairSet:
    """Support of the two-sided ideal of A(P) generated by a matrix.

    The spanning set starts at {g}. Every iteration multiplies the newest
    matrices on the left by each matrix unit of P, then the results together
    with the newest matrices on the right by each matrix unit of P. Products
    that are structurally zero are skipped. Multiplying by a matrix unit
    relocates one row or column, so the support of a product depends only on
    the support of its factor; matrices are therefore deduplicated by support.
    Iteration stops once an iteration leaves the support unchanged.

    Args:
        relation: Support relation P.
        generator: Matrix g in A(P).
        max_iters: Iteration cap; defaults to n * n.

    Returns:
        Union of the supports of all matrices reached.

    Raises:
        MatrixMembershipError: If g has an entry outside P.
        FixedPointError: If the support is still changing after max_iters.
    """
    check_membership(relation, generator)
    n = relation.n
    if max_iters is None:
        max_iters = n * n

    if generator.is_zero():
        return PairSet.empty(n)

    units: Dict[Pair, ExactMatrix] = {
        pair: matrix_unit(n, *pair) for pair in relation.pairs
    }
    seen: Set[PairSet] = {generator.support()}
    frontier: List[ExactMatrix] = [generator]
    support = generator.support()

    for iteration in range(1, max_iters + 1):
        left = _multiply_all(frontier, units, seen, on_left=True)
        right = _multiply_all(frontier + left, units, seen, on_left=False)
        frontier = left + right

        widened = support
        for matrix in frontier:
            widened = widened.union(matrix.support())

        logger.debug(
            "Iteration %s added %s matrices, support %s -> %s",
            iteration,
            len(frontier),
            len(support),
            len(widened),
        )

        if widened == support:
            return support
        support = widened

    raise FixedPointError(
        f"Generated support did not stabilise within {max_iters} iterations"
    )


def _multiply_all(
    matrices: List[ExactMatrix],
    units: Dict[Pair, ExactMatrix],
    seen: Set[PairSet],
    on_left: bool,
) -> List[ExactMatrix]:
    produced: List[ExactMatrix] = []
    for matrix in matrices:
        rows, cols = _occupied(matrix)
        for (a, b), unit in units.items():
            if on_left:
                if b not in rows:
                    continue
                product = unit @ matrix
            else:
                if a not in cols:
                    continue
                product = matrix @ unit

            key = product.support()
            if key in seen:
                continue
            seen.add(key)
            produced.append(product)
    return produced


def _occupied(matrix: ExactMatrix) -> Tuple[Set[int], Set[int]]:
    pairs = matrix.support().pairs
    return {i for i, _ in pairs}, {j for _, j in pairs}
