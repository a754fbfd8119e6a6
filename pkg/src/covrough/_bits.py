"""Integer bitmask kernels shared by every public module.

Subsets of an ``n``-element universe are plain ``int`` masks: bit ``i`` set
means element ``i`` is present. Python integers are unbounded, so the same
code serves small and large universes alike.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def union_all(masks: Iterable[int]) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def neighborhoods(blocks: Sequence[int], n: int) -> tuple[int, ...]:
    """Intersection of the blocks containing each element."""
    full = full_mask(n)
    out = [full] * n
    for k in blocks:
        for i in iter_bits(k):
            out[i] &= k
    return tuple(out)


def minimal_description(blocks: Sequence[int], i: int) -> tuple[int, ...]:
    bit = 1 << i
    holding = [k for k in blocks if k & bit]
    keep = [k for k in holding if not any(s != k and s & ~k == 0 for s in holding)]
    return tuple(sorted(keep))


def is_reducible(blocks: Sequence[int], k: int) -> bool:
    # the union of every other block inside k is the largest candidate
    acc = 0
    for s in blocks:
        if s != k and s & ~k == 0:
            acc |= s
    return acc == k


def reducible_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    return tuple(k for k in blocks if is_reducible(blocks, k))


def reduct(blocks: Sequence[int]) -> tuple[int, ...]:
    """Remove the first reducible block in ascending mask order until none is left.

    Survivors keep their original relative order.
    """
    current = list(blocks)
    while True:
        for k in sorted(current):
            if is_reducible(current, k):
                current.remove(k)
                break
        else:
            return tuple(current)


def is_partition(sets: Iterable[int], n: int) -> bool:
    seen = 0
    for s in set(sets):
        if s == 0 or seen & s:
            return False
        seen |= s
    return seen == full_mask(n)


def fl(blocks: Sequence[int], x: int) -> int:
    acc = 0
    for k in blocks:
        if k & ~x == 0:
            acc |= k
    return acc


def fh(blocks: Sequence[int], x: int) -> int:
    acc = 0
    for k in blocks:
        if k & x:
            acc |= k
    return acc


def xl(nbhd: Sequence[int], x: int) -> int:
    acc = 0
    for i, nb in enumerate(nbhd):
        if nb & ~x == 0:
            acc |= 1 << i
    return acc


def xh(nbhd: Sequence[int], x: int) -> int:
    acc = 0
    for i, nb in enumerate(nbhd):
        if nb & x:
            acc |= 1 << i
    return acc


def union_closure(generators: Iterable[int]) -> list[int]:
    """All unions of zero or more generators, sorted ascending."""
    closed = {0}
    for g in set(generators):
        if g in closed:
            continue
        closed |= {c | g for c in closed}
    return sorted(closed)


def intersection_closure(generators: Iterable[int], top: int) -> list[int]:
    """All intersections of zero or more generators (the empty one is ``top``)."""
    closed = {top}
    for g in set(generators):
        closed |= {c & g for c in closed}
    return sorted(closed)


def fl_table(blocks: Sequence[int], n: int) -> list[int]:
    """``fl`` evaluated on every subset, indexed by mask.

    Built incrementally: a block fits inside ``x`` iff it fits inside
    ``x`` minus its top element or contains that element, so each entry
    reuses the entry for the mask with the highest bit cleared.
    """
    size = 1 << n
    table = [0] * size
    by_top: list[list[int]] = [[] for _ in range(n)]
    for k in blocks:
        by_top[k.bit_length() - 1].append(k)
    for x in range(1, size):
        top = x.bit_length() - 1
        acc = table[x ^ (1 << top)]
        for k in by_top[top]:
            if k & ~x == 0:
                acc |= k
        table[x] = acc
    return table


def xl_table(nbhd: Sequence[int], n: int) -> list[int]:
    size = 1 << n
    table = [0] * size
    for x in range(1, size):
        top = x.bit_length() - 1
        acc = table[x ^ (1 << top)]
        # adding element ``top`` can only admit elements whose neighborhood holds it
        for i, nb in enumerate(nbhd):
            if nb >> top & 1 and nb & ~x == 0:
                acc |= 1 << i
        table[x] = acc
    return table
