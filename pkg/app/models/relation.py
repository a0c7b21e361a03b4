"""
Relation and functional dependency models.
Attribute sets are tuples of header positions in ascending order.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, NonNegativeInt, field_validator, model_validator

from ..core.errors import DomainError
from .results import GeneralizedNodes

AttributeSet = tuple[int, ...]


class Relation(BaseModel):
    """Header plus rows of opaque string values; duplicate rows are kept."""
    model_config = ConfigDict(frozen=True)

    attributes: tuple[str, ...]
    tuples: tuple[tuple[str, ...], ...] = ()

    @field_validator("attributes")
    @classmethod
    def _unique_names(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        if not value:
            raise ValueError("a relation needs at least one attribute")
        duplicates = sorted({name for name in value if value.count(name) > 1})
        if duplicates:
            raise ValueError(f"duplicate attribute names: {duplicates}")
        return value

    @model_validator(mode="after")
    def _check_arity(self) -> "Relation":
        for i, row in enumerate(self.tuples):
            if len(row) != len(self.attributes):
                raise ValueError(f"tuple {i} has {len(row)} values, expected {len(self.attributes)}")
        return self

    @property
    def arity(self) -> int:
        return len(self.attributes)

    def position(self, name: str) -> int:
        try:
            return self.attributes.index(name)
        except ValueError:
            raise DomainError(f"unknown attribute {name!r}") from None

    def names(self, positions: AttributeSet) -> tuple[str, ...]:
        return tuple(self.attributes[p] for p in sorted(positions))


class AgreeSetTable(BaseModel):
    """Agree sets of all tuple pairs, each with the (i, j), i < j, pairs producing it."""
    model_config = ConfigDict(frozen=True)

    attributes: tuple[str, ...]
    entries: dict[AttributeSet, tuple[tuple[NonNegativeInt, NonNegativeInt], ...]]

    @field_validator("entries")
    @classmethod
    def _ordered_pairs(cls, value: dict) -> dict:
        for key, pairs in value.items():
            if any(i >= j for i, j in pairs):
                raise ValueError(f"agree set {key} has a pair that is not i < j")
        return value

    def sets(self) -> list[AttributeSet]:
        return sorted(self.entries)

    def nonempty(self) -> list[AttributeSet]:
        return [s for s in self.sets() if s]

    def pairs_for(self, agree_set: AttributeSet) -> tuple[tuple[int, int], ...]:
        return self.entries.get(agree_set, ())

    def label(self, agree_set: AttributeSet) -> str:
        return "".join(self.attributes[p] for p in agree_set) or "∅"


class Fd(BaseModel):
    """premise -> conclusion, premise in schema order."""
    model_config = ConfigDict(frozen=True)

    premise: tuple[str, ...] = ()
    conclusion: str

    @model_validator(mode="after")
    def _conclusion_outside_premise(self) -> "Fd":
        if self.conclusion in self.premise:
            raise ValueError(f"conclusion {self.conclusion!r} appears in the premise")
        return self

    def line(self) -> str:
        return f"{','.join(self.premise)} -> {self.conclusion}"


class FdCover(BaseModel):
    model_config = ConfigDict(frozen=True)

    attributes: tuple[str, ...]
    fds: tuple[Fd, ...] = ()
    # vertices of each group are attribute positions
    per_attribute_gn: Optional[dict[str, GeneralizedNodes]] = None

    @field_validator("fds")
    @classmethod
    def _canonical(cls, value: tuple[Fd, ...]) -> tuple[Fd, ...]:
        unique = {fd.line(): fd for fd in value}
        return tuple(unique[line] for line in sorted(unique))

    def __len__(self) -> int:
        return len(self.fds)

    def lines(self) -> list[str]:
        return [fd.line() for fd in self.fds]

    def for_conclusion(self, name: str) -> list[Fd]:
        return [fd for fd in self.fds if fd.conclusion == name]


class ConditionalFd(BaseModel):
    """A dependency checked on the tuples whose pairs generated the max sets of its attribute."""
    model_config = ConfigDict(frozen=True)

    fd: Fd
    tuples: tuple[NonNegativeInt, ...]
    pairs: tuple[tuple[NonNegativeInt, NonNegativeInt], ...]
    holds_on_subrelation: bool

    def line(self) -> str:
        return f"{self.fd.line()} on {' '.join(f't{i + 1}' for i in self.tuples)}"
