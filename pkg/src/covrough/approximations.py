"""First-type (block based) and sixth-type (neighborhood based) approximations."""

from __future__ import annotations

from covrough import _bits
from covrough.core import ApproxSpace, Subset, SubsetLike


def fl(space: ApproxSpace, x: SubsetLike) -> Subset:
    """Union of the blocks contained in ``x``."""
    s = space.subset(x)
    return space.universe.from_mask(_bits.fl(space.masks, s.bits))


def fh(space: ApproxSpace, x: SubsetLike) -> Subset:
    """Union of the blocks meeting ``x``."""
    s = space.subset(x)
    return space.universe.from_mask(_bits.fh(space.masks, s.bits))


def xl(space: ApproxSpace, x: SubsetLike) -> Subset:
    """Elements whose neighborhood lies inside ``x``."""
    s = space.subset(x)
    return space.universe.from_mask(_bits.xl(space.neighborhood_masks, s.bits))


def xh(space: ApproxSpace, x: SubsetLike) -> Subset:
    """Elements whose neighborhood meets ``x``."""
    s = space.subset(x)
    return space.universe.from_mask(_bits.xh(space.neighborhood_masks, s.bits))


OPERATORS = {"fl": fl, "fh": fh, "xl": xl, "xh": xh}
