"""Example coverings shared by the tests."""

from covrough import ApproxSpace, Universe

U4 = Universe.of_size(4)

NON_STONE_P = [[1, 2, 3], [1], [1, 3, 4], [2, 3]]
NON_DISTRIBUTIVE = [[1, 2], [2, 3], [1, 3, 4]]
UNARY_NON_STONE = [[3], [1], [1, 3, 4], [2, 3]]
PARTITION = [[1, 2], [3, 4]]


def space(blocks, n=4):
    return ApproxSpace.of(Universe.of_size(n), blocks)


def S(sp, *labels):
    return sp.universe.subset(labels)
