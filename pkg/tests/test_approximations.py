import pytest

from covrough import UniverseMismatch, Universe, fh, fl, xh, xl
from covrough.core import ApproxSpace
from covrough.verification import enumerate_coverings, random_covering

import oracles
from helpers import S


def test_fl_examples(ex_nd, unary_cov):
    assert fl(ex_nd, [2]) == ex_nd.universe.empty
    assert fl(ex_nd, []) == ex_nd.universe.empty
    assert fl(unary_cov, [1, 2, 4]) == S(unary_cov, 1)


def test_fh_examples(nstone):
    u = nstone.universe
    assert fh(nstone, [2]) == S(nstone, 1, 2, 3)
    assert fh(nstone, []) == u.empty
    assert fh(nstone, u.full) == u.full


def test_xl_examples(nstone):
    assert xl(nstone, [1, 4]) == S(nstone, 1)
    assert xl(nstone, [2, 3, 4]) == S(nstone, 2, 3)
    assert xl(nstone, nstone.universe.full) == nstone.universe.full


def test_xh_examples(nstone):
    u = nstone.universe
    assert xh(nstone, [3]) == S(nstone, 2, 3, 4)
    assert xh(nstone, []) == u.empty
    assert xh(nstone, u.full) == u.full


def test_universe_mismatch(nstone):
    with pytest.raises(UniverseMismatch):
        fl(nstone, Universe.of_size(3).subset([1]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_operators_match_oracle(n):
    for cov in enumerate_coverings(n):
        sp = ApproxSpace(cov)
        C = [frozenset(b) for b in cov.blocks]
        U = frozenset(sp.universe.labels)
        for X in sp.universe.all_subsets():
            fx = frozenset(X)
            assert frozenset(fl(sp, X)) == oracles.fl(C, fx)
            assert frozenset(fh(sp, X)) == oracles.fh(C, fx)
            assert frozenset(xl(sp, X)) == oracles.xl(C, U, fx)
            assert frozenset(xh(sp, X)) == oracles.xh(C, U, fx)


def test_tables_match_direct_evaluation():
    for seed in range(50):
        sp = ApproxSpace(random_covering(7, 0.05, seed))
        for X in sp.universe.all_subsets():
            assert sp.fl_table[X.bits] == fl(sp, X).bits
            assert sp.xl_table[X.bits] == xl(sp, X).bits


def _laws(sp, op):
    u = sp.universe
    assert op(sp, u.empty) == u.empty
    assert op(sp, u.full) == u.full
    subsets = list(u.all_subsets())
    for X in subsets:
        v = op(sp, X)
        assert v <= X
        assert op(sp, v) == v
    for Y in subsets:
        vy = op(sp, Y)
        for X in subsets:
            if X <= Y:
                assert op(sp, X) <= vy
    for K in sp.covering.blocks:
        assert op(sp, K) == K


@pytest.mark.parametrize("seed", range(10))
def test_lower_approximation_laws_random_n6(seed):
    sp = ApproxSpace(random_covering(6, 0.08, seed))
    _laws(sp, fl)
    _laws(sp, xl)


def test_invariance_under_reduct_random_n8():
    for seed in range(40):
        sp = ApproxSpace(random_covering(8, 0.04, seed))
        red = ApproxSpace(sp.covering.from_masks(sp.universe, sp.reduct_masks))
        assert red.fl_table == sp.fl_table
        assert red.xl_table == sp.xl_table
        for k, K in enumerate(sp.masks):
            if K in sp.reduct_masks:
                continue
            # K was removed, hence reducible in the original covering
            assert ApproxSpace(sp.covering.without(k)).fl_table == sp.fl_table
