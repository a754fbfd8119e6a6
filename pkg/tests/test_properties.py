"""Randomized laws over coverings drawn by hypothesis."""

from hypothesis import given, settings
from hypothesis import strategies as st

from covrough import build_F, build_P, classify
from covrough.core import ApproxSpace, Covering, Universe, complement
from covrough.lattices import (
    dual_F_mask,
    dual_P_mask,
    dual_pseudocomplement_masks,
    pc_F_mask,
    pc_P_mask,
    pseudocomplement_masks,
)


@st.composite
def coverings(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    full = (1 << n) - 1
    masks = draw(st.sets(st.integers(1, full), min_size=1, max_size=8))
    missing = full & ~sum_or(masks)
    masks = sorted(masks) + [1 << i for i in range(n) if missing >> i & 1]
    return ApproxSpace(Covering.from_masks(Universe.of_size(n), masks))


def sum_or(masks):
    acc = 0
    for m in masks:
        acc |= m
    return acc


@given(coverings(), st.data())
def test_de_morgan_and_involution(sp, data):
    u = sp.universe
    a = u.from_mask(data.draw(st.integers(0, sp.full)))
    b = u.from_mask(data.draw(st.integers(0, sp.full)))
    assert complement(a | b) == complement(a) & complement(b)
    assert complement(a & b) == complement(a) | complement(b)
    assert complement(complement(a)) == a


@given(coverings())
def test_fixed_points_are_closed(sp):
    P, F = build_P(sp), build_F(sp)
    pm, fm = set(P.masks), set(F.masks)
    fl = sp.fl_table
    for x in P.masks:
        for y in P.masks:
            assert x | y in pm and x & y in pm
    for x in F.masks:
        for y in F.masks:
            assert x | y in fm and fl[x & y] in fm
    assert 0 in pm and sp.full in pm and 0 in fm and sp.full in fm


@given(coverings())
def test_P_is_a_distributive_double_p_algebra(sp):
    P = build_P(sp)
    r = classify(P)
    assert r.distributive and r.double_p_algebra and r.complete
    assert pseudocomplement_masks(P) == [pc_P_mask(sp, x) for x in P.masks]
    assert dual_pseudocomplement_masks(P) == [dual_P_mask(sp, x) for x in P.masks]


@given(coverings())
def test_unary_F_is_a_distributive_double_p_algebra(sp):
    if not sp.unary:
        return
    F = build_F(sp)
    r = classify(F)
    assert r.distributive and r.double_p_algebra
    assert pseudocomplement_masks(F) == [pc_F_mask(sp, x) for x in F.masks]
    assert dual_pseudocomplement_masks(F) == [dual_F_mask(sp, x) for x in F.masks]


@settings(max_examples=60)
@given(coverings(max_n=7))
def test_reduct_preserves_families(sp):
    red = ApproxSpace(Covering.from_masks(sp.universe, sp.reduct_masks))
    assert build_P(red).masks == build_P(sp).masks
    assert build_F(red).masks == build_F(sp).masks
