"""Covering-based rough sets and the lattices of their fixed points."""

from covrough.approximations import fh, fl, xh, xl
from covrough.core import (
    ApproxSpace,
    BadIndex,
    Covering,
    CoveringError,
    DuplicateBlock,
    EmptyBlock,
    NotACover,
    NotAMember,
    NotUnary,
    SizeLimit,
    Subset,
    UniverseMismatch,
    Universe,
    UnknownElement,
    UnknownPredicate,
    complement,
    new_covering,
)
from covrough.descriptions import (
    intersections_are_block_unions,
    is_unary,
    minimal_description,
    neighborhood,
    neighborhoods_form_partition,
)
from covrough.lattices import (
    ClassificationReport,
    FixedPointFamily,
    HasseDiagram,
    build_F,
    build_P,
    classify,
    hasse,
    join_irreducibles,
)
from covrough.reduction import is_reducible, reduct

