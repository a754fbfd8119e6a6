"""Reducible blocks and the reduct of a covering."""

from __future__ import annotations

from covrough import _bits
from covrough.core import ApproxSpace, BadIndex, Covering


def is_reducible(space: ApproxSpace, k: int) -> bool:
    """Whether block ``k`` (0-based position in the covering) is a union of other blocks."""
    masks = space.masks
    if not 0 <= k < len(masks):
        raise BadIndex(f"block index {k} out of range 0..{len(masks) - 1}")
    return _bits.is_reducible(masks, masks[k])


def reducible_indices(space: ApproxSpace) -> list[int]:
    masks = space.masks
    return [i for i, k in enumerate(masks) if _bits.is_reducible(masks, k)]


def reduct(space: ApproxSpace) -> Covering:
    """Drop reducible blocks until the covering is irreducible.

    Blocks are scanned in ascending mask order and the first reducible one
    is removed each round; any order gives the same result.
    """
    return Covering.from_masks(space.universe, space.reduct_masks)


def reduct_is_partition(space: ApproxSpace) -> bool:
    return _bits.is_partition(space.reduct_masks, space.n)
