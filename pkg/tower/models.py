import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from config.settings import DEFAULT_TOWER_MAX_DEPTH, DEFAULT_TOWER_MAX_TOP_SIZE
from relation_core.errors import BoundExceededError, GroupoidalError, PayloadFormatError
from relation_core.pairs import SupportRelation, upper_triangular

logger = logging.getLogger("tower.models")


class TowerError(GroupoidalError):
    """Base exception for embedding tower errors."""


class LevelMismatchError(TowerError):
    """An object does not live at the tower level it is used at."""


class EmbeddingError(TowerError):
    """An embedded image leaves the algebra it is required to land in."""


class EmbeddingKind:
    REFINEMENT = "refinement"
    STANDARD = "standard"

    ALL = (REFINEMENT, STANDARD)


@dataclass(frozen=True)
class EmbeddingSpec:
    """One step of a tower: the embedding kind and the multiplicity q."""

    kind: str
    multiplicity: int

    def __post_init__(self) -> None:
        if self.kind not in EmbeddingKind.ALL:
            raise TowerError(f"Unknown embedding kind: {self.kind!r}")
        if self.multiplicity < 1:
            raise TowerError(
                f"Embedding multiplicity must be positive, got {self.multiplicity}"
            )

    def to_payload(self) -> Dict[str, Any]:
        return {"kind": self.kind, "q": self.multiplicity}


@dataclass(frozen=True)
class Tower:
    """A direct system of level algebras T_{n_1} -> T_{n_2} -> ...

    Level k (1-based) has size n_k; the embedding from level k to level k + 1
    is levels[k - 1], so a tower with m embeddings has m + 1 levels.
    """

    base_size: int
    levels: Tuple[EmbeddingSpec, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.base_size < 1:
            raise TowerError(f"Base size must be positive, got {self.base_size}")
        object.__setattr__(self, "levels", tuple(self.levels))

    @classmethod
    def uniform(cls, base_size: int, kind: str, q: int, embeddings: int) -> "Tower":
        return cls(base_size, tuple(EmbeddingSpec(kind, q) for _ in range(embeddings)))

    @classmethod
    def alternating(cls, base_size: int, q: int, embeddings: int) -> "Tower":
        """Refinement and standard embeddings used alternately, refinement first."""
        kinds = [EmbeddingKind.REFINEMENT, EmbeddingKind.STANDARD]
        return cls(
            base_size,
            tuple(EmbeddingSpec(kinds[k % 2], q) for k in range(embeddings)),
        )

    @property
    def length(self) -> int:
        return len(self.levels) + 1

    @property
    def level_sizes(self) -> List[int]:
        sizes = [self.base_size]
        for spec in self.levels:
            sizes.append(sizes[-1] * spec.multiplicity)
        return sizes

    def level_size(self, level: int) -> int:
        self._require_level(level)
        return self.level_sizes[level - 1]

    def level_relation(self, level: int) -> SupportRelation:
        return upper_triangular(self.level_size(level))

    def embedding(self, level: int) -> EmbeddingSpec:
        """Embedding from level to level + 1."""
        if not 1 <= level < self.length:
            raise LevelMismatchError(
                f"No embedding leaves level {level} of a tower with {self.length} levels"
            )
        return self.levels[level - 1]

    def check_depth(
        self,
        depth: int,
        max_depth: int = DEFAULT_TOWER_MAX_DEPTH,
        max_top_size: int = DEFAULT_TOWER_MAX_TOP_SIZE,
    ) -> None:
        """Validates a truncation depth against the tower and the desk-scale bounds.

        Raises:
            LevelMismatchError: If the tower has fewer than depth levels.
            BoundExceededError: If depth or the size of level depth is too large.
        """
        self._require_level(depth)
        if depth > max_depth:
            logger.warning("Tower depth %s exceeds bound %s", depth, max_depth)
            raise BoundExceededError(f"Tower depth {depth} exceeds the bound {max_depth}")
        top_size = self.level_size(depth)
        if top_size > max_top_size:
            logger.warning("Tower top size %s exceeds bound %s", top_size, max_top_size)
            raise BoundExceededError(
                f"Level {depth} has size {top_size}, above the bound {max_top_size}"
            )

    def _require_level(self, level: int) -> None:
        if not 1 <= level <= self.length:
            raise LevelMismatchError(
                f"Level {level} is outside 1..{self.length} for this tower"
            )

    def to_payload(self) -> Dict[str, Any]:
        return {
            "base": self.base_size,
            "levels": [spec.to_payload() for spec in self.levels],
        }

    @classmethod
    def from_payload(cls, payload: Any) -> "Tower":
        if not isinstance(payload, dict):
            raise PayloadFormatError("Tower payload must be a JSON object")
        base = payload.get("base")
        levels = payload.get("levels", [])
        if not isinstance(base, int) or isinstance(base, bool) or base < 1:
            raise PayloadFormatError(f"'base' must be a positive integer, got {base!r}")
        if not isinstance(levels, list):
            raise PayloadFormatError("'levels' must be a list")

        specs = []
        for item in levels:
            if not isinstance(item, dict):
                raise PayloadFormatError(f"Malformed level {item!r}")
            kind = item.get("kind")
            q = item.get("q")
            if kind not in EmbeddingKind.ALL:
                raise PayloadFormatError(f"Unknown embedding kind {kind!r}")
            if not isinstance(q, int) or isinstance(q, bool) or q < 1:
                raise PayloadFormatError(f"'q' must be a positive integer, got {q!r}")
            specs.append(EmbeddingSpec(kind, q))
        return cls(base, tuple(specs))
