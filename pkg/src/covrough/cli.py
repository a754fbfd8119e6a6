"""Command-line front end.

Exit codes: 0 success, 1 input or size error, 2 a checked property failed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from covrough import descriptions, lattices, reduction
from covrough.approximations import OPERATORS
from covrough.core import ApproxSpace, CoveringError
from covrough.formats import covering_to_json, load_covering, parse_subset
from covrough.verification import (
    ENUMERATION_CAP,
    HARD_SUBSET_CAP,
    SUBSET_CAP,
    GeneratorConfig,
    SuiteSummary,
    enumerate_coverings,
    find_counterexample,
    random_coverings,
    run_theorem_suite,
    verify_coverings,
)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _load(path: str) -> ApproxSpace:
    try:
        return ApproxSpace(load_covering(path))
    except CoveringError as exc:
        _fail(str(exc))
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}")


def _fmt_family(sets) -> str:
    return "{" + ",".join(str(s) for s in sets) + "}"


def _emit_json(data: dict) -> None:
    click.echo(json.dumps(data, indent=2))


@click.group()
def main() -> None:
    """Covering-based rough sets and the lattices of their fixed points."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def analyze(file: str, as_json: bool) -> None:
    """Neighborhoods, minimal descriptions, unary flag and reduct of a covering."""
    space = _load(file)
    u = space.universe
    nbhd = descriptions.neighborhoods(space)
    md = {label: descriptions.minimal_description(space, label) for label in u.labels}
    red = reduction.reduct(space)
    info = {
        "unary": descriptions.is_unary(space),
        "neighborhoods_partition": descriptions.neighborhoods_form_partition(space),
        "reduct_partition": reduction.reduct_is_partition(space),
    }
    if as_json:
        out = covering_to_json(space.covering)
        out["size"] = u.size
        out["neighborhoods"] = {k: list(v) for k, v in nbhd.items()}
        out["minimal_descriptions"] = {k: [list(b) for b in v] for k, v in md.items()}
        out["reduct"] = [list(b) for b in red.blocks]
        out.update(info)
        _emit_json(out)
        return
    click.echo(f"universe: {u.size} elements {u.full}")
    click.echo(f"blocks: {space.covering}")
    click.echo("neighborhoods:")
    for label, s in nbhd.items():
        click.echo(f"  N({label})={s}")
    click.echo("minimal descriptions:")
    for label, blocks in md.items():
        click.echo(f"  Md({label})={_fmt_family(blocks)}")
    click.echo(f"unary={str(info['unary']).lower()}")
    click.echo(f"neighborhoods_partition={str(info['neighborhoods_partition']).lower()}")
    click.echo(f"reduct={red}")
    click.echo(f"reduct_partition={str(info['reduct_partition']).lower()}")


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--set", "set_spec", required=True, help='Subset such as "1,4" or "{}".')
@click.option("--op", type=click.Choice(sorted(OPERATORS)), required=True)
def approx(file: str, set_spec: str, op: str) -> None:
    """Apply one approximation operator to a subset."""
    space = _load(file)
    try:
        x = parse_subset(space.universe, set_spec)
    except CoveringError as exc:
        _fail(str(exc))
    click.echo(str(OPERATORS[op](space, x)))


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--family", type=click.Choice(["P", "F"]), default="P", show_default=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write the Hasse diagram here.")
@click.option("--json", "as_json", is_flag=True)
def lattice(file: str, family: str, dot_path: str | None, as_json: bool) -> None:
    """Members, join-irreducibles and classification of P or F."""
    space = _load(file)
    fam = lattices.build(space, family)
    report = lattices.classify(fam)
    irreducible = lattices.join_irreducibles(fam)
    if dot_path:
        Path(dot_path).write_text(lattices.hasse(fam).to_dot(family), encoding="utf-8")
    if as_json:
        out = covering_to_json(space.covering)
        out["members"] = [str(m) for m in fam.members]
        out["join_irreducibles"] = [str(m) for m in irreducible]
        out["classification"] = report.to_json()
        _emit_json(out)
        return
    click.echo(f"{family}: {len(fam)} members")
    click.echo("members: " + " ".join(str(m) for m in fam.members))
    click.echo("join-irreducibles: " + " ".join(str(m) for m in irreducible))
    witnesses = report.witnesses()
    for flag in report.FLAGS:
        line = f"{flag}={str(getattr(report, flag)).lower()}"
        if flag in witnesses:
            line += f"  witness {witnesses[flag]}"
        click.echo(line)


def _print_summary(summary: SuiteSummary, as_json: bool) -> None:
    if as_json:
        _emit_json(summary.to_json())
        return
    click.echo(f"coverings checked: {summary.coverings}")
    for name, hits in summary.hypothesis_hits.items():
        click.echo(f"  {name}: ran on {hits}")
    if summary.ok:
        click.echo("all applicable theorems hold")
    else:
        click.echo(f"{len(summary.failures)} failure(s)")
        for cov, theorem, witness in summary.failures:
            click.echo(json.dumps({"covering": cov, "theorem": theorem, "witness": witness}))


@main.command()
@click.argument("file", required=False, type=click.Path(dir_okay=False))
@click.option("--exhaustive", "exhaustive_n", type=int, help="Check every covering of {1..N}.")
@click.option("--random", "random_n", type=int, help="Check random coverings of {1..N}.")
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-n", type=int, help="Raise the size guard (never above 24).")
@click.option("--json", "as_json", is_flag=True)
def verify(file, exhaustive_n, random_n, trials, seed, max_n, as_json) -> None:
    """Run the theorem suite; exit 2 if any applicable check fails."""
    chosen = [x is not None for x in (file, exhaustive_n, random_n)]
    if sum(chosen) != 1:
        _fail("give exactly one of FILE, --exhaustive N or --random N")
    if max_n is not None and max_n > HARD_SUBSET_CAP:
        _fail(f"SizeLimit: --max-n {max_n} is above the hard cap {HARD_SUBSET_CAP}")
    try:
        if file is not None:
            space = _load(file)
            reports = run_theorem_suite(space, subset_cap=max_n or SUBSET_CAP)
            summary = SuiteSummary()
            summary.add(space.covering, reports)
        elif exhaustive_n is not None:
            cap = max_n or ENUMERATION_CAP
            summary = verify_coverings(enumerate_coverings(exhaustive_n, cap=cap))
        else:
            cap = max_n or SUBSET_CAP
            if random_n > cap:
                _fail(f"SizeLimit: random verification scans 2^{random_n} subsets; cap is {cap}")
            summary = verify_coverings(random_coverings(random_n, trials, seed))
    except CoveringError as exc:
        _fail(str(exc))
    _print_summary(summary, as_json)
    sys.exit(0 if summary.ok else 2)


@main.command()
@click.argument("predicate")
@click.option("--mode", type=click.Choice(["exhaustive", "partitions", "random"]), default="exhaustive")
@click.option("-n", "n", type=int, default=4, show_default=True)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def counterexample(predicate, mode, n, trials, seed, as_json) -> None:
    """Search for the first covering on which PREDICATE (e.g. P-stone) fails."""
    try:
        found = find_counterexample(predicate, GeneratorConfig(mode=mode, n=n, trials=trials, seed=seed))
    except CoveringError as exc:
        _fail(str(exc))
    if found is None:
        if as_json:
            _emit_json({"predicate": predicate, "found": False})
        else:
            click.echo("no counterexample found")
        return
    w = found.witness
    w_json = w.to_json() if hasattr(w, "to_json") else w
    if as_json:
        out = {"predicate": predicate, "found": True}
        out.update(covering_to_json(found.covering))
        out["witness"] = w_json
        _emit_json(out)
        return
    click.echo(f"covering: {found.covering}")
    click.echo(f"witness: {w}")


if __name__ == "__main__":  # pragma: no cover
    main()
