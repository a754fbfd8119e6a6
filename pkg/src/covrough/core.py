"""Universes, subsets, coverings and covering approximation spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Union

from covrough import _bits


class CoveringError(ValueError):
    """Base class for every domain error; ``code`` is the stable short name."""

    code = "CoveringError"

    def __str__(self) -> str:
        detail = super().__str__()
        return f"{self.code}: {detail}" if detail else self.code


class EmptyBlock(CoveringError):
    code = "EmptyBlock"


class NotACover(CoveringError):
    code = "NotACover"


class DuplicateBlock(CoveringError):
    code = "DuplicateBlock"


class UnknownElement(CoveringError):
    code = "UnknownElement"


class UniverseMismatch(CoveringError):
    code = "UniverseMismatch"


class BadIndex(CoveringError):
    code = "BadIndex"


class NotAMember(CoveringError):
    code = "NotAMember"


class NotUnary(CoveringError):
    code = "NotUnary"


class SizeLimit(CoveringError):
    code = "SizeLimit"


class UnknownPredicate(CoveringError):
    code = "UnknownPredicate"


@dataclass(frozen=True)
class Universe:
    """A finite ground set. Elements are the indices ``0..size-1``; labels are for display."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        if not labels:
            raise ValueError("a universe needs at least one element")
        if len(set(labels)) != len(labels):
            raise ValueError(f"universe labels must be distinct: {labels}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        """Universe labelled ``1..n``."""
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: object) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownElement(f"{label!r} is not an element of the universe") from None

    def mask_of(self, labels: Iterable[object]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def subset(self, labels: Iterable[object] = ()) -> "Subset":
        return Subset(self, self.mask_of(labels))

    def from_mask(self, bits: int) -> "Subset":
        return Subset(self, bits)

    @property
    def full(self) -> "Subset":
        return Subset(self, _bits.full_mask(self.size))

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    def all_subsets(self) -> Iterator["Subset"]:
        for bits in range(1 << self.size):
            yield Subset(self, bits)


@dataclass(frozen=True)
class Subset:
    """An immutable subset of a universe stored as a bitmask."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.universe.size:
            raise ValueError(f"mask {self.bits:#x} does not fit a universe of size {self.universe.size}")

    def _same(self, other: "Subset") -> int:
        if not isinstance(other, Subset):
            return NotImplemented
        if other.universe != self.universe:
            raise UniverseMismatch("set operation between subsets of different universes")
        return other.bits

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits | self._same(other))

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits & self._same(other))

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits & ~self._same(other))

    def __invert__(self) -> "Subset":
        return complement(self)

    def __le__(self, other: "Subset") -> bool:
        return self.bits & ~self._same(other) == 0

    def __lt__(self, other: "Subset") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "Subset") -> bool:
        return other <= self

    def __gt__(self, other: "Subset") -> bool:
        return other < self

    def __contains__(self, label: object) -> bool:
        return bool(self.bits >> self.universe.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return (self.universe.labels[i] for i in _bits.iter_bits(self.bits))

    def __len__(self) -> int:
        return _bits.popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_bits.iter_bits(self.bits))

    def __str__(self) -> str:
        return "{" + ",".join(self) + "}"

    def __repr__(self) -> str:
        return f"Subset({self})"


def complement(x: Subset) -> Subset:
    """``U \\ X``."""
    return Subset(x.universe, _bits.full_mask(x.universe.size) & ~x.bits)


SubsetLike = Union[Subset, Iterable[object]]


def as_subset(universe: Universe, x: SubsetLike) -> Subset:
    """Accept a ``Subset`` of ``universe`` or an iterable of element labels."""
    if isinstance(x, Subset):
        if x.universe != universe:
            raise UniverseMismatch("subset belongs to a different universe")
        return x
    return universe.subset(x)


@dataclass(frozen=True, eq=False)
class Covering:
    """A validated covering. Block order is kept for output; equality ignores it."""

    universe: Universe
    blocks: tuple[Subset, ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(b.bits for b in self.blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Covering):
            return NotImplemented
        return self.universe == other.universe and frozenset(self.masks) == frozenset(other.masks)

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self.masks)))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join(str(b) for b in self.blocks) + "}"

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> "Covering":
        blocks = tuple(Subset(universe, m) for m in masks)
        _validate(universe, [b.bits for b in blocks])
        return cls(universe, blocks)

    def without(self, k: int) -> "Covering":
        """The family with block ``k`` dropped (validated, so it may raise ``NotACover``)."""
        if not 0 <= k < len(self.blocks):
            raise BadIndex(f"block index {k} out of range 0..{len(self.blocks) - 1}")
        return Covering.from_masks(self.universe, self.masks[:k] + self.masks[k + 1 :])


def _validate(universe: Universe, masks: list[int]) -> None:
    seen: set[int] = set()
    for pos, m in enumerate(masks):
        if m == 0:
            raise EmptyBlock(f"block #{pos + 1} is empty; covering blocks must be nonempty")
        if m in seen:
            shown = universe.from_mask(m)
            raise DuplicateBlock(f"block #{pos + 1} {shown} repeats an earlier block")
        seen.add(m)
    missing = _bits.full_mask(universe.size) & ~_bits.union_all(masks)
    if missing:
        raise NotACover(f"the union of the blocks misses {universe.from_mask(missing)}")


def new_covering(universe: Universe, blocks: Iterable[SubsetLike]) -> Covering:
    """Validate ``blocks`` against ``universe`` and build a ``Covering``.

    Raises ``UnknownElement``, ``EmptyBlock``, ``DuplicateBlock`` or
    ``NotACover``. Duplicates are rejected rather than merged.
    """
    subsets = [as_subset(universe, b) for b in blocks]
    _validate(universe, [s.bits for s in subsets])
    return Covering(universe, tuple(subsets))


@dataclass(frozen=True, eq=False)
class ApproxSpace:
    """A covering approximation space with lazily cached derived structure."""

    covering: Covering
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def of(cls, universe: Universe, blocks: Iterable[SubsetLike]) -> "ApproxSpace":
        return cls(new_covering(universe, blocks))

    @property
    def universe(self) -> Universe:
        return self.covering.universe

    @property
    def n(self) -> int:
        return self.covering.universe.size

    @property
    def full(self) -> int:
        return _bits.full_mask(self.n)

    @property
    def masks(self) -> tuple[int, ...]:
        return self.covering.masks

    # Each cached value is a pure function of the covering, so a racing
    # double computation stores an identical result.
    def _cached(self, key: str, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    @property
    def neighborhood_masks(self) -> tuple[int, ...]:
        return self._cached("nbhd", lambda: _bits.neighborhoods(self.masks, self.n))

    @property
    def md_masks(self) -> tuple[tuple[int, ...], ...]:
        return self._cached(
            "md", lambda: tuple(_bits.minimal_description(self.masks, i) for i in range(self.n))
        )

    @property
    def reduct_masks(self) -> tuple[int, ...]:
        return self._cached("reduct", lambda: _bits.reduct(self.masks))

    @property
    def unary(self) -> bool:
        return self._cached("unary", lambda: all(len(md) == 1 for md in self.md_masks))

    @property
    def fl_table(self) -> list[int]:
        """``fl`` on all ``2**n`` subsets; only sensible for small universes."""
        return self._cached("fl_table", lambda: _bits.fl_table(self.masks, self.n))

    @property
    def xl_table(self) -> list[int]:
        return self._cached("xl_table", lambda: _bits.xl_table(self.neighborhood_masks, self.n))

    def element(self, x: object) -> int:
        """Index of the element labelled ``x`` (``2`` and ``"2"`` are the same label)."""
        return self.universe.index(x)

    def subset(self, x: SubsetLike) -> Subset:
        return as_subset(self.universe, x)
