"""Reading and writing covering files.

Two input formats are accepted:

JSON::

    {"universe": ["1", "2", "3", "4"], "covering": [["1", "2", "3"], ["1"]]}

Plain text, one block per line with whitespace separated labels, an
optional ``universe: a b c`` header, ``#`` comments, and ``{}`` for an
empty block. Without a header the universe is the union of the blocks, so
such a file can never fail with ``NotACover``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from covrough.core import Covering, CoveringError, Subset, Universe, new_covering


class FormatError(CoveringError):
    code = "FormatError"


def _labels(values, what: str) -> list[str]:
    if not isinstance(values, list):
        raise FormatError(f"{what} must be a list")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise FormatError(f"{what} holds {v!r}; labels must be strings or integers")
        out.append(str(v))
    return out


def covering_from_json(data: object) -> Covering:
    if not isinstance(data, dict) or "covering" not in data:
        raise FormatError('expected an object with a "covering" list')
    blocks = data["covering"]
    if not isinstance(blocks, list):
        raise FormatError('"covering" must be a list of blocks')
    blocks = [_labels(b, "a block") for b in blocks]
    if "universe" in data:
        labels = _labels(data["universe"], '"universe"')
    else:
        labels = _first_seen(blocks)
    try:
        universe = Universe(tuple(labels))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return new_covering(universe, blocks)


def _first_seen(blocks: list[list[str]]) -> list[str]:
    seen: dict[str, None] = {}
    for b in blocks:
        for label in b:
            seen.setdefault(label, None)
    return list(seen)


def covering_from_text(text: str) -> Covering:
    universe_labels = None
    blocks: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("universe:"):
            universe_labels = line.split(":", 1)[1].split()
            continue
        blocks.append([] if line in ("{}", "∅") else line.split())
    labels = universe_labels if universe_labels is not None else _first_seen(blocks)
    try:
        universe = Universe(tuple(labels))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return new_covering(universe, blocks)


def parse_covering(text: str) -> Covering:
    stripped = text.lstrip()
    if stripped.startswith("{") and stripped[:2] != "{}":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        return covering_from_json(data)
    return covering_from_text(text)


def load_covering(path: Union[str, Path]) -> Covering:
    return parse_covering(Path(path).read_text(encoding="utf-8"))


def covering_to_json(covering: Covering) -> dict:
    return {
        "universe": list(covering.universe.labels),
        "covering": [list(b) for b in covering.blocks],
    }


def parse_subset(universe: Universe, spec: str) -> Subset:
    """``"1,4"``, ``"{1,4}"``, ``"1 4"``; ``"{}"``, ``""`` and ``"∅"`` are empty."""
    body = spec.strip()
    if body in ("∅",):
        body = ""
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    labels = [p for p in body.replace(",", " ").split() if p]
    return universe.subset(labels)
