"""Coordinates of arrows over the unit square, for external plotting."""

import csv
from fractions import Fraction
from typing import Iterable, List, Sequence, TextIO, Tuple

from groupoid_spectrum.gsets import Arrow
from groupoid_spectrum.words import check_word

CSV_HEADER = ["pi_u", "pi_v", "pi_u_exact", "pi_v_exact"]


def pi_coordinate(word: Sequence[int], r: int) -> Fraction:
    """Truncated pi(x) = sum over k of (x_k - 1) r^-k."""
    return pi_coordinate_mixed(word, (r,) * len(word))


def pi_coordinate_mixed(word: Sequence[int], alphabet: Sequence[int]) -> Fraction:
    """pi for mixed alphabets: digit k weighs 1 / (r_1 r_2 ... r_k)."""
    check_word(word, alphabet)
    value = Fraction(0)
    scale = 1
    for letter, size in zip(word, alphabet):
        scale *= size
        value += Fraction(letter - 1, scale)
    return value


def pi_rows(
    arrows: Iterable[Arrow], alphabet: Sequence[int]
) -> List[Tuple[Fraction, Fraction]]:
    """(pi(u), pi(v)) for every arrow, sorted."""
    return sorted(
        (pi_coordinate_mixed(u, alphabet), pi_coordinate_mixed(v, alphabet))
        for u, v in arrows
    )


def write_pi_csv(
    arrows: Iterable[Arrow], alphabet: Sequence[int], stream: TextIO
) -> int:
    """Writes one row per arrow with decimal and exact coordinates.

    Returns:
        Number of data rows written.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    rows = pi_rows(arrows, alphabet)
    for pi_u, pi_v in rows:
        writer.writerow([float(pi_u), float(pi_v), str(pi_u), str(pi_v)])
    return len(rows)
