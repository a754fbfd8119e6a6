import pytest

from covrough import NotAMember, NotUnary, SizeLimit, build_F, build_P, classify, hasse, join_irreducibles
from covrough.core import ApproxSpace
from covrough.lattices import (
    arbitrary_join,
    arbitrary_meet,
    dual_formula_F,
    dual_formula_P,
    dual_pseudocomplement,
    dual_pseudocomplement_masks,
    is_complete,
    join,
    join_irreducible_masks,
    meet,
    pseudocomplement,
    pseudocomplement_formula_F,
    pseudocomplement_formula_P,
    pseudocomplement_masks,
    recheck,
    Witness,
    _complete_by_closure,
    _complete_by_enumeration,
)
from covrough.verification import enumerate_coverings, random_covering

import oracles
from helpers import S, space


def names(sets):
    return [str(s) for s in sets]


# expected member lists below come from tests/oracles.py brute force
P_NON_STONE = ["{}", "{1}", "{3}", "{1,3}", "{2,3}", "{1,2,3}", "{1,3,4}", "{1,2,3,4}"]
F_ND = ["{}", "{1,2}", "{2,3}", "{1,2,3}", "{1,3,4}", "{1,2,3,4}"]


def test_build_P_non_stone(nstone):
    assert names(build_P(nstone).members) == P_NON_STONE
    assert names(build_P(nstone, strategy="scan").members) == P_NON_STONE


def test_build_P_trivial(single, part):
    assert names(build_P(single).members) == ["{}", "{1,2,3,4}"]
    assert names(build_P(part).members) == ["{}", "{1,2}", "{3,4}", "{1,2,3,4}"]


def test_build_F_examples(ex_nd, unary_cov, single):
    assert names(build_F(ex_nd).members) == F_ND
    assert set(names(build_F(unary_cov).members)) == {
        "{}", "{1}", "{3}", "{1,3}", "{2,3}", "{1,2,3}", "{1,3,4}", "{1,2,3,4}"
    }
    assert names(build_F(single, strategy="scan").members) == ["{}", "{1,2,3,4}"]


def test_scan_size_limit():
    sp = space([list(range(1, 22))], n=21)
    with pytest.raises(SizeLimit):
        build_P(sp, strategy="scan")
    assert len(build_F(sp)) == 2


def test_hard_cap_is_not_overridable():
    sp = space([list(range(1, 26))], n=25)
    with pytest.raises(SizeLimit):
        build_F(sp, strategy="scan", scan_cap=100)


def test_join_and_meet_in_F(ex_nd):
    F = build_F(ex_nd)
    assert join(F, [1, 3, 4], [1, 2]) == ex_nd.universe.full
    assert meet(F, [1, 2, 3], [1, 3, 4]) == ex_nd.universe.empty
    assert meet(F, [1, 2, 3], [1, 2]) == S(ex_nd, 1, 2)
    assert meet(F, [1, 2], ex_nd.universe.full) == S(ex_nd, 1, 2)


def test_join_and_meet_in_P(nstone):
    P = build_P(nstone)
    assert join(P, [1], [3]) == S(nstone, 1, 3)
    assert join(P, [2, 3], []) == S(nstone, 2, 3)
    assert meet(P, [2, 3], [1, 3, 4]) == S(nstone, 3)


def test_non_member_rejected(nstone):
    P = build_P(nstone)
    with pytest.raises(NotAMember):
        join(P, [2], [1])


def test_arbitrary_join_and_meet(nstone, ex_nd):
    P = build_P(nstone)
    assert arbitrary_join(P, P.members) == nstone.universe.full
    assert arbitrary_join(P, []) == nstone.universe.empty
    assert arbitrary_meet(P, []) == nstone.universe.full
    F = build_F(ex_nd)
    assert arbitrary_meet(F, [[1, 2], [2, 3], [1, 3, 4]]) == ex_nd.universe.empty
    assert arbitrary_meet(F, [[1, 2], [1, 2, 3]]) == S(ex_nd, 1, 2)


def test_join_irreducibles(nstone, ex_nd, single):
    assert set(names(join_irreducibles(build_P(nstone)))) == {"{1}", "{3}", "{2,3}", "{1,3,4}"}
    assert set(names(join_irreducibles(build_F(ex_nd)))) == {"{1,2}", "{2,3}", "{1,3,4}"}
    assert names(join_irreducibles(build_P(single))) == ["{1,2,3,4}"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_join_irreducible_methods_agree(n):
    for cov in enumerate_coverings(n):
        sp = ApproxSpace(cov)
        for fam in (build_P(sp), build_F(sp)):
            pairs = join_irreducibles(fam, "pairs")
            assert pairs == join_irreducibles(fam, "hasse")
            assert [m.bits for m in pairs] == join_irreducible_masks(fam)


def test_pseudocomplements_in_P(nstone):
    P = build_P(nstone)
    assert pseudocomplement(P, [2, 3]) == S(nstone, 1)
    assert dual_pseudocomplement(P, [2, 3]) == S(nstone, 1, 3, 4)
    assert pseudocomplement(P, []) == nstone.universe.full
    assert dual_pseudocomplement(P, nstone.universe.full) == nstone.universe.empty


def test_pseudocomplements_unary_F(unary_cov):
    F = build_F(unary_cov)
    assert pseudocomplement(F, [3]) == S(unary_cov, 1)
    assert dual_pseudocomplement(F, [2, 3]) == S(unary_cov, 1, 3, 4)


def test_no_pseudocomplement_in_non_distributive_F(ex_nd):
    F = build_F(ex_nd)
    # {1,2} meets both {2,3} and {1,3,4} at the bottom, but their join is U
    assert pseudocomplement(F, [1, 2]) is None


def test_formulas_P(nstone):
    assert pseudocomplement_formula_P(nstone, [2, 3]) == S(nstone, 1)
    assert pseudocomplement_formula_P(nstone, [1]) == S(nstone, 2, 3)
    assert dual_formula_P(nstone, [2, 3]) == S(nstone, 1, 3, 4)
    assert dual_formula_P(nstone, [1, 3, 4]) == S(nstone, 2, 3)
    assert pseudocomplement_formula_P(nstone, nstone.universe.full) == nstone.universe.empty
    assert dual_formula_P(nstone, nstone.universe.full) == nstone.universe.empty
    with pytest.raises(NotAMember):
        dual_formula_P(nstone, [2])


def test_formulas_F(unary_cov, nstone):
    assert pseudocomplement_formula_F(unary_cov, [3]) == S(unary_cov, 1)
    assert pseudocomplement_formula_F(unary_cov, [1]) == S(unary_cov, 2, 3)
    assert dual_formula_F(unary_cov, [2, 3]) == S(unary_cov, 1, 3, 4)
    assert dual_formula_F(unary_cov, [1, 3, 4]) == S(unary_cov, 2, 3)
    assert pseudocomplement_formula_F(unary_cov, []) == unary_cov.universe.full
    assert dual_formula_F(unary_cov, []) == unary_cov.universe.full
    with pytest.raises(NotUnary):
        pseudocomplement_formula_F(nstone, [1])
    with pytest.raises(NotAMember):
        dual_formula_F(unary_cov, [2])


def test_classify_non_stone_P(nstone):
    r = classify(build_P(nstone))
    assert r.distributive and r.double_p_algebra and r.complete and r.bounded
    assert not r.stone and not r.dual_stone and not r.boolean
    assert r.stone_witness.members == (S(nstone, 2, 3),)
    assert r.dual_stone_witness.members == (S(nstone, 2, 3),)


def test_classify_non_distributive(ex_nd):
    F = build_F(ex_nd)
    r = classify(F)
    assert not r.distributive
    assert recheck(F, r.distributive_witness)
    assert names(r.distributive_witness.members) == ["{1,2}", "{2,3}", "{1,3,4}"]
    other_triple = Witness("distributive", (S(ex_nd, 1, 2, 3), S(ex_nd, 1, 3, 4), S(ex_nd, 1, 2)))
    assert recheck(F, other_triple)


def test_classify_partition(part):
    for fam in (build_P(part), build_F(part)):
        r = classify(fam)
        assert r.boolean and r.double_stone and not r.witnesses()


def test_classify_two_element_chain(single):
    r = classify(build_P(single))
    assert r.boolean and r.double_stone


def test_hasse_examples(single, ex_nd, part):
    h = hasse(build_P(single))
    assert [(str(a), str(b)) for a, b in h.edges] == [("{}", "{1,2,3,4}")]
    h = hasse(build_F(ex_nd))
    assert sorted((str(a), str(b)) for a, b in h.edges) == sorted(
        [
            ("{}", "{1,2}"),
            ("{}", "{2,3}"),
            ("{}", "{1,3,4}"),
            ("{1,2}", "{1,2,3}"),
            ("{2,3}", "{1,2,3}"),
            ("{1,2,3}", "{1,2,3,4}"),
            ("{1,3,4}", "{1,2,3,4}"),
        ]
    )
    h = hasse(build_P(part))
    assert len(h.edges) == 4
    assert names(h.nodes) == ["{}", "{1,2}", "{3,4}", "{1,2,3,4}"]


def test_dot_is_deterministic(ex_nd):
    a = hasse(build_F(ex_nd)).to_dot("F")
    b = hasse(build_F(ApproxSpace(ex_nd.covering))).to_dot("F")
    assert a == b
    assert a.startswith("digraph F {") and a.count("->") == 7


def _oracle_meet(fam, C):
    if fam.name == "P":
        return lambda a, b: a & b
    return lambda a, b: oracles.fl(C, a & b)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classification_against_oracle(n):
    for cov in enumerate_coverings(n):
        sp = ApproxSpace(cov)
        C = [frozenset(b) for b in cov.blocks]
        U = frozenset(sp.universe.labels)
        for fam in (build_P(sp), build_F(sp)):
            members = [frozenset(m) for m in fam.members]
            mt = _oracle_meet(fam, C)
            r = classify(fam)
            assert r.distributive == oracles.distributive(members, mt)
            pcs = [oracles.pseudocomplement(members, mt, x) for x in members]
            dps = [oracles.dual_pseudocomplement(members, U, x) for x in members]
            assert r.pseudocomplemented == all(p is not None for p in pcs)
            assert r.dual_pseudocomplemented == all(d is not None for d in dps)
            got_pc = [None if p is None else frozenset(sp.universe.from_mask(p)) for p in pseudocomplement_masks(fam)]
            got_dp = [None if d is None else frozenset(sp.universe.from_mask(d)) for d in dual_pseudocomplement_masks(fam)]
            assert got_pc == pcs and got_dp == dps
            for x in fam.members:
                assert pseudocomplement(fam, x) == (None if pcs[fam.position(x.bits)] is None else sp.universe.subset(pcs[fam.position(x.bits)]))
            complemented = all(any(not mt(x, y) and x | y == U for y in members) for x in members)
            assert r.complemented == complemented
            if r.pseudocomplemented and r.distributive:
                byx = dict(zip(members, pcs))
                stone = all(byx[x] | byx[byx[x]] == U for x in members)
                assert r.stone == stone
            for w in r.witnesses().values():
                assert recheck(fam, w)


def test_completeness_strategies_agree():
    for cov in enumerate_coverings(3):
        sp = ApproxSpace(cov)
        for fam in (build_P(sp), build_F(sp)):
            assert _complete_by_enumeration(fam) and _complete_by_closure(fam)


def test_incomplete_family_detected(nstone):
    # drop {1,3} from P: {1} and {3} lose their join
    P = build_P(nstone)
    broken = type(P)(P.kind, P.space, tuple(m for m in P.masks if m != 0b0101))
    assert not _complete_by_enumeration(broken)
    assert not _complete_by_closure(broken)
    assert not is_complete(broken, enumerate_up_to=0)


def test_large_family_classification_uses_closure():
    sp = ApproxSpace(random_covering(8, 0.08, 3))
    F = build_F(sp)
    assert len(F) > 12
    assert classify(F).complete


@pytest.mark.parametrize("seed", range(0, 200, 20))
def test_strategies_agree_n12(seed):
    sp = ApproxSpace(random_covering(12, 0.004, seed))
    assert build_P(sp).masks == build_P(sp, strategy="scan").masks
    assert build_F(sp).masks == build_F(sp, strategy="scan").masks
