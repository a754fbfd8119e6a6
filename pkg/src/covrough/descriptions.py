"""Neighborhoods, minimal descriptions and the unary test."""

from __future__ import annotations

from covrough import _bits
from covrough.core import ApproxSpace, Subset


def neighborhood(space: ApproxSpace, x: object) -> Subset:
    """Intersection of every block containing ``x``."""
    return space.universe.from_mask(space.neighborhood_masks[space.element(x)])


def neighborhoods(space: ApproxSpace) -> dict[str, Subset]:
    u = space.universe
    return {label: u.from_mask(m) for label, m in zip(u.labels, space.neighborhood_masks)}


def minimal_description(space: ApproxSpace, x: object) -> tuple[Subset, ...]:
    """The inclusion-minimal blocks containing ``x``, sorted by mask."""
    u = space.universe
    return tuple(u.from_mask(m) for m in space.md_masks[space.element(x)])


def is_unary(space: ApproxSpace) -> bool:
    return space.unary


def intersections_are_block_unions(space: ApproxSpace) -> bool:
    """True iff every pairwise block intersection is a union of blocks.

    An empty intersection counts as the empty union.
    """
    blocks = space.masks
    for i, a in enumerate(blocks):
        for b in blocks[i + 1 :]:
            meet = a & b
            if _bits.fl(blocks, meet) != meet:
                return False
    return True


def neighborhoods_form_partition(space: ApproxSpace) -> bool:
    return _bits.is_partition(space.neighborhood_masks, space.n)
