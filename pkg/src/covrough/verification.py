"""Covering generators, the theorem suite, and a counterexample finder.

Every check works on raw masks over precomputed ``fl``/``xl`` tables so
that the full suite over all 32297 coverings of a 4-element universe runs
in a single process in reasonable time.
"""

from __future__ import annotations

import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from covrough import _bits
from covrough.core import (
    ApproxSpace,
    Covering,
    SizeLimit,
    Universe,
    UnknownPredicate,
)
from covrough.lattices import (
    ClassificationReport,
    FixedPointFamily,
    Witness,
    build_F,
    build_P,
    classify,
    dual_F_mask,
    dual_P_mask,
    dual_pseudocomplement_masks,
    join_irreducible_masks,
    pc_F_mask,
    pc_P_mask,
    pseudocomplement_masks,
    recheck,
)

log = logging.getLogger(__name__)

ENUMERATION_CAP = 4
SUBSET_CAP = 10
HARD_SUBSET_CAP = 24
#: full removal-order search when at most this many blocks are reducible
CONFLUENCE_EXHAUSTIVE_UP_TO = 5
CONFLUENCE_SAMPLED_ORDERS = 24

#: number of labelled coverings of an n-element universe by distinct nonempty
#: blocks, from an independent brute force over all sub-families
COVERING_COUNTS = {1: 1, 2: 5, 3: 109, 4: 32297}


# --------------------------------------------------------------------------
# generators


def enumerate_coverings(
    n: int,
    limit: Optional[int] = None,
    cap: int = ENUMERATION_CAP,
    subset_order: Optional[Sequence[int]] = None,
) -> Iterator[Covering]:
    """Every covering of ``{1..n}``, once each, in a fixed order.

    Families are visited as bitmasks over the nonempty subsets taken in
    ``subset_order`` (ascending masks by default).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise SizeLimit(f"covering enumeration for n={n} exceeds the cap of {cap}")
    universe = Universe.of_size(n)
    full = _bits.full_mask(n)
    subsets = list(subset_order) if subset_order is not None else list(range(1, full + 1))
    if sorted(subsets) != list(range(1, full + 1)):
        raise ValueError("subset_order must be a permutation of the nonempty subsets")
    produced = 0
    for family in range(1, 1 << len(subsets)):
        blocks = [subsets[i] for i in _bits.iter_bits(family)]
        if _bits.union_all(blocks) != full:
            continue
        yield Covering.from_masks(universe, blocks)
        produced += 1
        if limit is not None and produced >= limit:
            return


def enumerate_partitions(n: int) -> Iterator[Covering]:
    """Every partition of ``{1..n}`` as a covering (restricted growth strings)."""
    universe = Universe.of_size(n)

    def grow(i: int, blocks: list[int]) -> Iterator[list[int]]:
        if i == n:
            yield list(blocks)
            return
        bit = 1 << i
        for j in range(len(blocks)):
            blocks[j] |= bit
            yield from grow(i + 1, blocks)
            blocks[j] ^= bit
        blocks.append(bit)
        yield from grow(i + 1, blocks)
        blocks.pop()

    for blocks in grow(0, []):
        yield Covering.from_masks(universe, blocks)


def random_covering(n: int, density: float, seed: int) -> Covering:
    """Each nonempty subset joins independently with probability ``density``.

    Elements left uncovered are patched with singleton blocks in index order,
    so the result is always valid and depends only on ``(n, density, seed)``.
    """
    if not 0 < density < 1:
        raise ValueError("density must lie strictly between 0 and 1")
    rng = random.Random(seed)
    full = _bits.full_mask(n)
    blocks = [s for s in range(1, full + 1) if rng.random() < density]
    missing = full & ~_bits.union_all(blocks)
    blocks.extend(1 << i for i in _bits.iter_bits(missing))
    return Covering.from_masks(Universe.of_size(n), blocks)


# --------------------------------------------------------------------------
# the suite


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one check. ``holds`` is False only together with a witness."""

    theorem: str
    hypothesis_satisfied: bool
    holds: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "holds": self.holds,
            "witness": self.witness,
        }


class _Ctx:
    """Everything the checks share for one covering."""

    def __init__(self, space: ApproxSpace):
        self.space = space
        self.n = space.n
        self.full = space.full
        self.blocks = space.masks
        self.nbhd = space.neighborhood_masks
        self.fl = space.fl_table
        self.xl = space.xl_table
        self.reducible = [k for k in self.blocks if _bits.is_reducible(self.blocks, k)]
        self.reduct = space.reduct_masks
        self.P = build_P(space)
        self.F = build_F(space)
        self._reports: dict[str, ClassificationReport] = {}

    def show(self, mask: int) -> str:
        return str(self.space.universe.from_mask(mask))

    def report(self, fam: FixedPointFamily) -> ClassificationReport:
        if fam.name not in self._reports:
            self._reports[fam.name] = classify(fam)
        return self._reports[fam.name]


Check = Callable[[_Ctx], Optional[dict]]


def _lower_laws(table: list[int], blocks: Iterable[int], full: int) -> Optional[dict]:
    if table[0] != 0:
        return {"law": 1}
    if table[full] != full:
        return {"law": 2}
    for x, v in enumerate(table):
        if v & ~x:
            return {"law": 3, "X": x}
        if table[v] != v:
            return {"law": 4, "X": x}
    for y in range(full + 1):
        ty = table[y]
        x = y
        while x:
            x = (x - 1) & y
            if table[x] & ~ty:
                return {"law": 5, "X": x, "Y": y}
    for k in blocks:
        if table[k] != k:
            return {"law": 6, "K": k}
    return None


def check_fl_laws(c: _Ctx) -> Optional[dict]:
    return _lower_laws(c.fl, c.blocks, c.full)


def check_xl_laws(c: _Ctx) -> Optional[dict]:
    return _lower_laws(c.xl, c.blocks, c.full)


def check_unary_block_unions(c: _Ctx) -> Optional[dict]:
    unary = c.space.unary
    block_unions = all(c.fl[a & b] == a & b for a in c.blocks for b in c.blocks)
    if unary != block_unions:
        return {"unary": unary, "intersections_are_block_unions": block_unions}
    return None


def check_descriptions(c: _Ctx) -> Optional[dict]:
    for i, md in enumerate(c.space.md_masks):
        if not md:
            return {"element": i, "reason": "empty minimal description"}
        inter = c.full
        for k in md:
            inter &= k
        if inter != c.nbhd[i]:
            return {"element": i, "reason": "N(x) differs from the intersection of Md(x)"}
        for j in _bits.iter_bits(c.nbhd[i]):
            if c.nbhd[j] & ~c.nbhd[i]:
                return {"element": i, "other": j, "reason": "N(y) not inside N(x) for y in N(x)"}
    return None


def check_removal_keeps_cover(c: _Ctx) -> Optional[dict]:
    for k in c.reducible:
        rest = [b for b in c.blocks if b != k]
        if _bits.union_all(rest) != c.full:
            return {"K": k}
    return None


def check_reducibility_preserved(c: _Ctx) -> Optional[dict]:
    for k in c.reducible:
        rest = [b for b in c.blocks if b != k]
        for k1 in rest:
            if _bits.is_reducible(c.blocks, k1) != _bits.is_reducible(rest, k1):
                return {"K": k, "K1": k1}
    return None


def check_fl_removal_invariance(c: _Ctx) -> Optional[dict]:
    for k in c.reducible:
        rest = [b for b in c.blocks if b != k]
        table = _bits.fl_table(rest, c.n)
        if table != c.fl:
            x = next(i for i, (a, b) in enumerate(zip(table, c.fl)) if a != b)
            return {"K": k, "X": x}
    return None


def check_fl_reduct_invariance(c: _Ctx) -> Optional[dict]:
    table = _bits.fl_table(c.reduct, c.n)
    if table != c.fl:
        return {"X": next(i for i, (a, b) in enumerate(zip(table, c.fl)) if a != b)}
    return None


def check_xl_reduct_invariance(c: _Ctx) -> Optional[dict]:
    table = _bits.xl_table(_bits.neighborhoods(c.reduct, c.n), c.n)
    if table != c.xl:
        return {"X": next(i for i, (a, b) in enumerate(zip(table, c.xl)) if a != b)}
    return None


def reduct_outcomes(blocks: Sequence[int], seed: int = 0) -> set[frozenset[int]]:
    """Final block sets reachable by removing reducible blocks in any order.

    Every removal sequence is explored (with memoisation) when at most
    ``CONFLUENCE_EXHAUSTIVE_UP_TO`` blocks are reducible at the start;
    otherwise a seeded sample of random sequences is followed.
    """
    start = frozenset(blocks)
    if len(_bits.reducible_blocks(blocks)) <= CONFLUENCE_EXHAUSTIVE_UP_TO:
        memo: dict[frozenset[int], set[frozenset[int]]] = {}

        def finals(state: frozenset[int]) -> set[frozenset[int]]:
            if state not in memo:
                cur = tuple(state)
                options = [k for k in cur if _bits.is_reducible(cur, k)]
                if not options:
                    memo[state] = {state}
                else:
                    memo[state] = set().union(*(finals(state - {k}) for k in options))
            return memo[state]

        return finals(start)
    rng = random.Random(seed)
    outcomes = set()
    for _ in range(CONFLUENCE_SAMPLED_ORDERS):
        cur = list(blocks)
        while True:
            options = [k for k in cur if _bits.is_reducible(cur, k)]
            if not options:
                break
            cur.remove(rng.choice(options))
        outcomes.add(frozenset(cur))
    return outcomes


def check_confluence(c: _Ctx) -> Optional[dict]:
    outcomes = reduct_outcomes(c.blocks, seed=sum(c.blocks))
    expected = frozenset(c.reduct)
    if outcomes != {expected}:
        return {"outcomes": sorted(sorted(o) for o in outcomes), "reduct": sorted(expected)}
    if _bits.reducible_blocks(c.reduct) or _bits.reduct(c.reduct) != c.reduct:
        return {"reason": "reduct is not irreducible or not idempotent"}
    return None


def check_strategies(c: _Ctx) -> Optional[dict]:
    p_scan = tuple(x for x, v in enumerate(c.xl) if v == x)
    f_scan = tuple(x for x, v in enumerate(c.fl) if v == x)
    if p_scan != c.P.masks:
        return {"family": "P"}
    if f_scan != c.F.masks:
        return {"family": "F"}
    return None


def check_P_membership(c: _Ctx) -> Optional[dict]:
    member = set(c.P.masks)
    for x in range(c.full + 1):
        gen = _bits.union_all(c.nbhd[i] for i in _bits.iter_bits(x))
        if (gen == x) != (x in member):
            return {"X": x}
    return None


def check_P_reduct(c: _Ctx) -> Optional[dict]:
    other = _bits.union_closure(_bits.neighborhoods(c.reduct, c.n))
    if tuple(other) != c.P.masks:
        return {"reason": "P differs for the reduct"}
    return None


def check_F_reduct(c: _Ctx) -> Optional[dict]:
    for k in c.reducible:
        rest = [b for b in c.blocks if b != k]
        if tuple(x for x, v in enumerate(_bits.fl_table(rest, c.n)) if v == x) != c.F.masks:
            return {"K": k}
    if tuple(_bits.union_closure(c.reduct)) != c.F.masks:
        return {"reason": "F differs for the reduct"}
    return None


def _lattice_laws(fam: FixedPointFamily, meet: Callable[[int, int], int]) -> Optional[dict]:
    masks = fam.masks
    member = set(masks)
    glb: dict[int, int] = {}
    lub: dict[int, int] = {}
    for i, x in enumerate(masks):
        for y in masks[i:]:
            j, m = x | y, meet(x, y)
            if j not in member or m not in member:
                return {"X": x, "Y": y, "reason": "not closed"}
            # order-theoretic bounds straight from inclusion
            s = x & y
            if s not in glb:
                below = [z for z in masks if z & ~s == 0]
                top = _bits.union_all(below)
                glb[s] = top if top in member else -1
            if j not in lub:
                above = [z for z in masks if j & ~z == 0]
                bottom = fam.space.full
                for z in above:
                    bottom &= z
                lub[j] = bottom if bottom in member else -1
            if glb[s] != m or lub[j] != j:
                return {"X": x, "Y": y, "reason": "formula differs from glb/lub"}
    return None


def check_P_lattice(c: _Ctx) -> Optional[dict]:
    return _lattice_laws(c.P, lambda a, b: a & b)


def check_F_lattice(c: _Ctx) -> Optional[dict]:
    fl = c.fl
    return _lattice_laws(c.F, lambda a, b: fl[a & b])


def _complete(c: _Ctx, fam: FixedPointFamily) -> Optional[dict]:
    r = c.report(fam)
    if not (r.bounded and r.complete):
        return {"bounded": r.bounded, "complete": r.complete}
    return None


def check_P_complete(c: _Ctx) -> Optional[dict]:
    return _complete(c, c.P)


def check_F_complete(c: _Ctx) -> Optional[dict]:
    return _complete(c, c.F)


def check_P_neighborhoods(c: _Ctx) -> Optional[dict]:
    irreducible = set(join_irreducible_masks(c.P))
    for i, nb in enumerate(c.nbhd):
        if nb not in irreducible:
            return {"element": i, "N": nb}
    return None


def check_F_blocks(c: _Ctx) -> Optional[dict]:
    member = set(c.F.masks)
    irreducible = set(join_irreducible_masks(c.F))
    reducible = set(c.reducible)
    for k in c.blocks:
        if k not in member:
            return {"K": k, "reason": "block not in F"}
        if (k in irreducible) == (k in reducible):
            return {"K": k, "reducible_in_C": k in reducible}
    return None


def check_P_distributive(c: _Ctx) -> Optional[dict]:
    r = c.report(c.P)
    if not r.distributive:
        return r.distributive_witness.to_json()
    return None


def _formulas(fam: FixedPointFamily, pc: Callable[[int], int], dual: Callable[[int], int]) -> Optional[dict]:
    found_pc = pseudocomplement_masks(fam)
    found_dual = dual_pseudocomplement_masks(fam)
    for x, a, b in zip(fam.masks, found_pc, found_dual):
        if a is None or a != pc(x):
            return {"X": x, "pseudocomplement": a, "formula": pc(x)}
        if b is None or b != dual(x):
            return {"X": x, "dual_pseudocomplement": b, "formula": dual(x)}
    return None


def check_P_double_p(c: _Ctx) -> Optional[dict]:
    r = c.report(c.P)
    if not r.double_p_algebra:
        return {"reason": "not a double p-algebra"}
    space = c.space
    return _formulas(c.P, lambda x: pc_P_mask(space, x), lambda x: dual_P_mask(space, x))


def check_reports(c: _Ctx) -> Optional[dict]:
    """Classification flags are mutually consistent and every witness re-checks."""
    for fam in (c.P, c.F):
        r = c.report(fam)
        if r.boolean and not (r.complemented and r.distributive):
            return {"family": fam.name, "reason": "boolean without complemented+distributive"}
        if r.double_stone and not (r.stone and r.dual_stone):
            return {"family": fam.name, "reason": "double_stone without stone+dual_stone"}
        if r.double_p_algebra != (r.pseudocomplemented and r.dual_pseudocomplemented):
            return {"family": fam.name, "reason": "double_p_algebra mismatch"}
        for flag in ("distributive", "complemented", "stone", "dual_stone"):
            w = getattr(r, f"{flag}_witness")
            if getattr(r, flag) != (w is None):
                return {"family": fam.name, "flag": flag, "reason": "witness presence mismatch"}
            if w is not None and not recheck(fam, w):
                return {"family": fam.name, "flag": flag, "witness": w.to_json()}
    return None


def partition_branch(c: _Ctx) -> Optional[dict]:
    r = c.report(c.P)
    if not (r.boolean and r.double_stone):
        return {"boolean": r.boolean, "double_stone": r.double_stone}
    for x, a, b in zip(c.P.masks, pseudocomplement_masks(c.P), dual_pseudocomplement_masks(c.P)):
        comp = c.full & ~x
        if a != comp or b != comp:
            return {"X": x, "pseudocomplement": a, "dual": b}
    return None


def unary_branch(c: _Ctx) -> Optional[dict]:
    r = c.report(c.F)
    if not r.distributive:
        return r.distributive_witness.to_json()
    member = set(c.F.masks)
    for x in c.F.masks:
        for y in c.F.masks:
            if x & y not in member:
                return {"X": x, "Y": y, "reason": "intersection left F"}
    space = c.space
    return _formulas(c.F, lambda x: pc_F_mask(space, x), lambda x: dual_F_mask(space, x))


def reduct_partition_branch(c: _Ctx) -> Optional[dict]:
    if not c.space.unary:
        return {"reason": "reduct is a partition but the covering is not unary"}
    r = c.report(c.F)
    if not (r.boolean and r.double_stone):
        return {"boolean": r.boolean, "double_stone": r.double_stone}
    return None


#: id -> (hypothesis or None, check)
SUITE: dict[str, tuple[Optional[Callable[[_Ctx], bool]], Check]] = {
    "fl-laws": (None, check_fl_laws),
    "xl-laws": (None, check_xl_laws),
    "unary-iff-block-unions": (None, check_unary_block_unions),
    "descriptions": (None, check_descriptions),
    "removal-keeps-cover": (None, check_removal_keeps_cover),
    "reducibility-preserved": (None, check_reducibility_preserved),
    "fl-removal-invariance": (None, check_fl_removal_invariance),
    "fl-reduct-invariance": (None, check_fl_reduct_invariance),
    "xl-reduct-invariance": (None, check_xl_reduct_invariance),
    "reduct-confluence": (None, check_confluence),
    "build-strategies": (None, check_strategies),
    "P-membership": (None, check_P_membership),
    "P-reduct-invariance": (None, check_P_reduct),
    "F-reduct-invariance": (None, check_F_reduct),
    "P-lattice": (None, check_P_lattice),
    "F-lattice": (None, check_F_lattice),
    "P-complete": (None, check_P_complete),
    "F-complete": (None, check_F_complete),
    "P-neighborhood-join-irreducible": (None, check_P_neighborhoods),
    "F-blocks-join-irreducible": (None, check_F_blocks),
    "P-distributive": (None, check_P_distributive),
    "P-double-p-formulas": (None, check_P_double_p),
    "report-consistency": (None, check_reports),
    "P-partition-boolean-double-stone": (
        lambda c: _bits.is_partition(c.nbhd, c.n),
        partition_branch,
    ),
    "F-unary-distributive-formulas": (lambda c: c.space.unary, unary_branch),
    "F-reduct-partition-boolean-double-stone": (
        lambda c: _bits.is_partition(c.reduct, c.n),
        reduct_partition_branch,
    ),
}


def run_theorem_suite(space: ApproxSpace, subset_cap: int = SUBSET_CAP) -> list[TheoremReport]:
    """Run every registered check against one covering.

    Conditional checks run only when their hypothesis holds; otherwise
    they are reported with ``hypothesis_satisfied=False`` and hold vacuously.
    """
    cap = min(subset_cap, HARD_SUBSET_CAP)
    if space.n > cap:
        raise SizeLimit(f"the theorem suite scans 2^{space.n} subsets; cap is {cap}")
    ctx = _Ctx(space)
    out = []
    for name, (hypothesis, check) in SUITE.items():
        if hypothesis is not None and not hypothesis(ctx):
            out.append(TheoremReport(name, False, True))
            continue
        witness = check(ctx)
        out.append(TheoremReport(name, True, witness is None, witness))
    return out


@dataclass
class SuiteSummary:
    """Aggregated suite results over many coverings."""

    coverings: int = 0
    hypothesis_hits: dict[str, int] = field(default_factory=lambda: {k: 0 for k in SUITE})
    failures: list[tuple[str, str, dict]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, covering: Covering, reports: list[TheoremReport]) -> None:
        self.coverings += 1
        for r in reports:
            if r.hypothesis_satisfied:
                self.hypothesis_hits[r.theorem] += 1
            if not r.holds:
                self.failures.append((str(covering), r.theorem, r.witness))

    def to_json(self) -> dict:
        return {
            "coverings": self.coverings,
            "ok": self.ok,
            "hypothesis_hits": self.hypothesis_hits,
            "failures": [{"covering": c, "theorem": t, "witness": w} for c, t, w in self.failures],
        }


def _suite_for(covering: Covering) -> list[TheoremReport]:
    return run_theorem_suite(ApproxSpace(covering))


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("THREADS", "1")))
    except ValueError:
        return 1


def verify_coverings(coverings: Iterable[Covering], workers: Optional[int] = None) -> SuiteSummary:
    """Run the suite on each covering; results merge in input order."""
    summary = SuiteSummary()
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        for cov in coverings:
            summary.add(cov, _suite_for(cov))
        return summary
    covs = list(coverings)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for cov, reports in zip(covs, pool.map(_suite_for, covs, chunksize=256)):
            summary.add(cov, reports)
    return summary


def verify_exhaustive(n: int, cap: int = ENUMERATION_CAP, workers: Optional[int] = None) -> SuiteSummary:
    summary = verify_coverings(enumerate_coverings(n, cap=cap), workers)
    log.info("exhaustive n=%d: %d coverings, %d failures", n, summary.coverings, len(summary.failures))
    return summary


RANDOM_DENSITIES = (0.01, 0.02, 0.04, 0.08)


def random_coverings(n: int, trials: int, seed: int = 0, densities: Sequence[float] = RANDOM_DENSITIES) -> Iterator[Covering]:
    """``trials`` coverings with seeds ``seed, seed+1, ...``, cycling through ``densities``."""
    for i in range(trials):
        yield random_covering(n, densities[i % len(densities)], seed + i)


def verify_random(n: int, trials: int, seed: int = 0, workers: Optional[int] = None) -> SuiteSummary:
    return verify_coverings(random_coverings(n, trials, seed), workers)


# --------------------------------------------------------------------------
# counterexamples


def _flag_predicate(which: str, flag: str) -> Callable[[ApproxSpace], Optional[Witness | dict]]:
    def predicate(space: ApproxSpace):
        fam = build_P(space) if which == "P" else build_F(space)
        r = classify(fam)
        if getattr(r, flag):
            return None
        w = getattr(r, f"{flag}_witness", None)
        if w is None:
            # flags without their own witness fall back to a component's
            for part in ("distributive", "complemented", "stone", "dual_stone"):
                w = getattr(r, f"{part}_witness")
                if w is not None:
                    break
        return w if w is not None else {"flag": flag, "value": False}

    return predicate


def _unary_iff_block_unions(space: ApproxSpace):
    from covrough.descriptions import intersections_are_block_unions

    if space.unary != intersections_are_block_unions(space):
        return {"unary": space.unary}
    return None


PREDICATES: dict[str, Callable[[ApproxSpace], object]] = {
    f"{fam}-{flag.replace('_', '-')}": _flag_predicate(fam, flag)
    for fam in ("P", "F")
    for flag in (
        "distributive",
        "complemented",
        "boolean",
        "pseudocomplemented",
        "dual_pseudocomplemented",
        "stone",
        "dual_stone",
        "double_p_algebra",
        "double_stone",
        "complete",
    )
}
PREDICATES["unary-iff-block-unions"] = _unary_iff_block_unions


@dataclass(frozen=True)
class GeneratorConfig:
    """Where ``find_counterexample`` looks.

    ``mode`` is ``exhaustive`` (all coverings of size ``n``), ``partitions``
    (all partitions of size ``n``) or ``random`` (``trials`` seeded coverings).
    """

    mode: str = "exhaustive"
    n: int = 4
    trials: int = 1000
    seed: int = 0
    budget: Optional[int] = None

    def coverings(self) -> Iterator[Covering]:
        if self.mode == "exhaustive":
            it: Iterable[Covering] = enumerate_coverings(self.n)
        elif self.mode == "partitions":
            it = enumerate_partitions(self.n)
        elif self.mode == "random":
            it = random_coverings(self.n, self.trials, self.seed)
        else:
            raise ValueError(f"unknown generator mode {self.mode!r}")
        for i, cov in enumerate(it):
            if self.budget is not None and i >= self.budget:
                return
            yield cov


@dataclass(frozen=True)
class Counterexample:
    covering: Covering
    witness: object


def evaluate_predicate(predicate_id: str, space: ApproxSpace):
    """The failing witness of ``predicate_id`` on ``space``, or None when it holds."""
    try:
        predicate = PREDICATES[predicate_id]
    except KeyError:
        raise UnknownPredicate(f"no predicate named {predicate_id!r}; known: {', '.join(sorted(PREDICATES))}") from None
    return predicate(space)


def find_counterexample(predicate_id: str, config: GeneratorConfig = GeneratorConfig()) -> Optional[Counterexample]:
    """First covering in generator order on which the predicate fails."""
    if predicate_id not in PREDICATES:
        raise UnknownPredicate(f"no predicate named {predicate_id!r}; known: {', '.join(sorted(PREDICATES))}")
    for cov in config.coverings():
        w = evaluate_predicate(predicate_id, ApproxSpace(cov))
        if w is not None:
            return Counterexample(cov, w)
    return None
