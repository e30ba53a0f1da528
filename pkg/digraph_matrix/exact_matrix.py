"""Exact Gaussian-rational matrices backed by sympy's DomainMatrix over QQ_I.

Entries are a + b*i with a, b rational, so supports computed from products are
never disturbed by rounding.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from relation_core.errors import (
    GroupoidalError,
    IndexRangeError,
    PayloadFormatError,
    SizeMismatchError,
)
from relation_core.pairs import Pair, PairSet, SupportRelation

Scalar = Union[int, Fraction, Tuple[Fraction, Fraction]]


class MatrixError(GroupoidalError):
    """Base exception for exact matrix errors."""


class MatrixMembershipError(MatrixError):
    """A matrix has a nonzero entry outside the support relation of A(P)."""


class FixedPointError(MatrixError):
    """An iterated generation did not stabilise within its iteration cap."""


class NotNormalisingError(MatrixError):
    """A matrix is not a partial isometry normalising the diagonal."""


def to_element(value: Scalar) -> Any:
    """Converts an int, Fraction or (real, imaginary) pair into a QQ_I element."""
    if isinstance(value, tuple):
        real, imaginary = (Fraction(part) for part in value)
    else:
        real, imaginary = Fraction(value), Fraction(0)
    return QQ_I(
        QQ(real.numerator, real.denominator),
        QQ(imaginary.numerator, imaginary.denominator),
    )


def element_parts(element: Any) -> Tuple[Fraction, Fraction]:
    return (
        Fraction(int(element.x.numerator), int(element.x.denominator)),
        Fraction(int(element.y.numerator), int(element.y.denominator)),
    )


def conjugate_element(element: Any) -> Any:
    return QQ_I(element.x, -element.y)


def is_zero_element(element: Any) -> bool:
    return element.x == 0 and element.y == 0


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """A square matrix with exact Gaussian-rational entries."""

    matrix: DomainMatrix

    def __post_init__(self) -> None:
        rows, cols = self.matrix.shape
        if rows != cols or rows < 1:
            raise SizeMismatchError(
                f"Matrix must be square and nonempty, got {rows}x{cols}"
            )
        if self.matrix.domain != QQ_I:
            object.__setattr__(self, "matrix", self.matrix.convert_to(QQ_I))

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls.from_entries(n, {})

    @classmethod
    def from_entries(cls, n: int, entries: Dict[Pair, Scalar]) -> "ExactMatrix":
        """Builds a matrix from a sparse map of 1-based positions to values."""
        if n < 1:
            raise IndexRangeError(f"Matrix size must be positive, got {n}")
        rows = [[QQ_I.zero for _ in range(n)] for _ in range(n)]
        for (i, j), value in entries.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexRangeError(f"Entry ({i}, {j}) is outside 1..{n}")
            rows[i - 1][j - 1] = to_element(value)
        return cls(DomainMatrix(rows, (n, n), QQ_I))

    @classmethod
    def from_rows(cls, rows: List[List[Scalar]]) -> "ExactMatrix":
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise SizeMismatchError("Rows do not form a square matrix")
        return cls.from_entries(
            n,
            {
                (i + 1, j + 1): value
                for i, row in enumerate(rows)
                for j, value in enumerate(row)
            },
        )

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    def elements(self) -> List[List[Any]]:
        return self.matrix.to_list()

    def entry(self, i: int, j: int) -> Tuple[Fraction, Fraction]:
        """Entry (i, j) as (real, imaginary) fractions, 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexRangeError(f"Entry ({i}, {j}) is outside 1..{self.n}")
        return element_parts(self.elements()[i - 1][j - 1])

    def support(self) -> PairSet:
        elements = self.elements()
        return PairSet.from_pairs(
            self.n,
            [
                (i + 1, j + 1)
                for i in range(self.n)
                for j in range(self.n)
                if not is_zero_element(elements[i][j])
            ],
        )

    def is_zero(self) -> bool:
        return self.support().is_empty()

    def key(self) -> Tuple[Tuple[Tuple[Fraction, Fraction], ...], ...]:
        """Hashable snapshot of all entries."""
        return tuple(
            tuple(element_parts(element) for element in row)
            for row in self.elements()
        )

    def adjoint(self) -> "ExactMatrix":
        elements = self.elements()
        rows = [
            [conjugate_element(elements[j][i]) for j in range(self.n)]
            for i in range(self.n)
        ]
        return ExactMatrix(DomainMatrix(rows, (self.n, self.n), QQ_I))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_size(other)
        return ExactMatrix(self.matrix.matmul(other.matrix))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_size(other)
        return ExactMatrix(self.matrix.add(other.matrix))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.n == other.n and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"ExactMatrix(n={self.n}, support={self.support().pairs})"

    def _require_same_size(self, other: "ExactMatrix") -> None:
        if self.n != other.n:
            raise SizeMismatchError(f"Matrix sizes differ: {self.n} != {other.n}")

    def to_payload(self) -> Dict[str, Any]:
        """Serialises entries as [num, den, num_im, den_im] quadruples."""
        entries = []
        for row in self.elements():
            encoded_row = []
            for element in row:
                real, imaginary = element_parts(element)
                encoded_row.append(
                    [
                        real.numerator,
                        real.denominator,
                        imaginary.numerator,
                        imaginary.denominator,
                    ]
                )
            entries.append(encoded_row)
        return {"n": self.n, "entries": entries}

    @classmethod
    def from_payload(cls, payload: Any) -> "ExactMatrix":
        if not isinstance(payload, dict):
            raise PayloadFormatError("Matrix payload must be a JSON object")
        n = payload.get("n")
        entries = payload.get("entries")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise PayloadFormatError(f"'n' must be a positive integer, got {n!r}")
        if not isinstance(entries, list) or len(entries) != n:
            raise PayloadFormatError(f"'entries' must hold {n} rows")

        rows: List[List[Scalar]] = []
        for row in entries:
            if not isinstance(row, list) or len(row) != n:
                raise PayloadFormatError(f"Every row must hold {n} entries")
            decoded_row: List[Scalar] = []
            for item in row:
                if (
                    not isinstance(item, list)
                    or len(item) != 4
                    or not all(isinstance(x, int) for x in item)
                    or item[1] == 0
                    or item[3] == 0
                ):
                    raise PayloadFormatError(f"Malformed entry {item!r}")
                decoded_row.append(
                    (Fraction(item[0], item[1]), Fraction(item[2], item[3]))
                )
            rows.append(decoded_row)
        return cls.from_rows(rows)

    def to_star_pattern(self) -> str:
        """Renders nonzero entries as '*' and zeros as '0', one row per line."""
        elements = self.elements()
        return "\n".join(
            " ".join("0" if is_zero_element(element) else "*" for element in row)
            for row in elements
        )


def check_membership(relation: SupportRelation, matrix: ExactMatrix) -> None:
    """Raises MatrixMembershipError unless the matrix lies in A(P)."""
    if matrix.n != relation.n:
        raise SizeMismatchError(
            f"Matrix size {matrix.n} does not match relation size {relation.n}"
        )
    outside = matrix.support().difference(relation)
    if not outside.is_empty():
        raise MatrixMembershipError(
            f"Matrix has nonzero entries outside the support relation: {outside.pairs}"
        )
