"""Words over level alphabets and their identification with matrix-unit indices.

A depth-k word (x_1, ..., x_k) has 1 <= x_m <= r_m, where r_1 is the base
size of a tower and r_{m+1} the multiplicity of its m-th embedding. Words of
depth k are the diagonal matrix units of level k; which index 1..n_k a word
names depends on the embedding kinds: a refinement step appends the new
coordinate as the least significant digit, a standard step as the most
significant one.
"""

import itertools
from dataclasses import dataclass
from math import prod
from typing import Dict, List, Sequence, Tuple

from config.settings import DEFAULT_GROUPOID_MAX_WORDS
from groupoid_spectrum.errors import DepthMismatchError
from relation_core.errors import BoundExceededError, IndexRangeError
from tower.models import EmbeddingKind, Tower

Word = Tuple[int, ...]
Alphabet = Tuple[int, ...]


@dataclass(frozen=True)
class MultiIndex:
    """A word checked against its alphabet sizes."""

    word: Word
    alphabet: Alphabet

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        check_word(self.word, self.alphabet)

    @property
    def depth(self) -> int:
        return len(self.word)


def check_word(word: Sequence[int], alphabet: Sequence[int]) -> None:
    if len(word) != len(alphabet):
        raise DepthMismatchError(
            f"Word {tuple(word)} has depth {len(word)}, alphabet has {len(alphabet)}"
        )
    for position, (letter, size) in enumerate(zip(word, alphabet), start=1):
        if not 1 <= letter <= size:
            raise IndexRangeError(
                f"Coordinate {position} of {tuple(word)} is outside 1..{size}"
            )


def check_alphabet(alphabet: Sequence[int]) -> Alphabet:
    alphabet = tuple(alphabet)
    if not alphabet or any(size < 1 for size in alphabet):
        raise IndexRangeError(f"Alphabet sizes must be positive, got {alphabet}")
    return alphabet


def word_count(alphabet: Sequence[int]) -> int:
    return prod(alphabet)


def all_words(
    alphabet: Sequence[int], max_words: int = DEFAULT_GROUPOID_MAX_WORDS
) -> List[Word]:
    """Every word over the alphabet in lexicographic order."""
    alphabet = check_alphabet(alphabet)
    count = word_count(alphabet)
    if count > max_words:
        raise BoundExceededError(
            f"Alphabet {alphabet} has {count} words, above the bound {max_words}"
        )
    return [
        tuple(word) for word in itertools.product(*(range(1, r + 1) for r in alphabet))
    ]


def alphabet_from_tower(tower: Tower, depth: int) -> Alphabet:
    """(n_1, q_1, ..., q_{depth-1}): the alphabets of the first depth levels."""
    tower.level_size(depth)
    return (tower.base_size,) + tuple(
        spec.multiplicity for spec in tower.levels[: depth - 1]
    )


def kinds_from_tower(tower: Tower, depth: int) -> Tuple[str, ...]:
    return tuple(spec.kind for spec in tower.levels[: depth - 1])


def word_index(word: Sequence[int], alphabet: Sequence[int], kinds: Sequence[str]) -> int:
    """1-based index of the word at its level, for the given embedding kinds."""
    check_word(word, alphabet)
    if len(kinds) != len(alphabet) - 1:
        raise DepthMismatchError(
            f"{len(alphabet)} alphabets need {len(alphabet) - 1} embedding kinds"
        )
    index = word[0]
    size = alphabet[0]
    for letter, q, kind in zip(word[1:], alphabet[1:], kinds):
        if kind == EmbeddingKind.REFINEMENT:
            index = (index - 1) * q + letter
        else:
            index = index + (letter - 1) * size
        size *= q
    return index


def index_table(
    alphabet: Sequence[int],
    kinds: Sequence[str],
    max_words: int = DEFAULT_GROUPOID_MAX_WORDS,
) -> Dict[Word, int]:
    return {
        word: word_index(word, alphabet, kinds)
        for word in all_words(alphabet, max_words)
    }
