"""Named example functions with their documented classifications and golden machines.

Entries live as JSON files under ``respoly/data/gallery``. Loading a unary
entry re-checks every claimed classification against the oracles.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from respoly.resorder import MEMBERSHIP
from respoly.transducer import HTransducer, transducer_from_json
from respoly.zseries import Series, UnaryQP, Zero, series_from_json


class GalleryError(ValueError):
    pass


@dataclass(frozen=True)
class Claim:
    cls: str
    k: int
    expected: bool
    source: str


@dataclass(frozen=True)
class Build:
    """Expected outcome of the builder at level ``k``: a golden name or ``fuel-exhausted``."""

    k: int
    golden: str | None = None
    outcome: str = "success"


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    description: str
    series: Series
    claims: tuple[Claim, ...] = ()
    goldens: dict[str, HTransducer] = field(default_factory=dict)
    builds: tuple[Build, ...] = ()
    variants: dict[str, Series] = field(default_factory=dict)
    raw: dict = field(default_factory=dict, repr=False)


def _data_dir():
    return resources.files("respoly") / "data" / "gallery"


def names() -> list[str]:
    return sorted(p.name[:-5] for p in _data_dir().iterdir() if p.name.endswith(".json"))


def _verify(entry: GalleryEntry) -> None:
    s = entry.series
    if not (isinstance(s, UnaryQP) or (isinstance(s, Zero) and s.alphabet.is_unary)):
        return
    for c in entry.claims:
        got = MEMBERSHIP[c.cls](s, c.k)
        if got != c.expected:
            raise GalleryError(f"{entry.name}: claimed {c.cls}[{c.k}] = {c.expected}, oracle says {got}")


@lru_cache(maxsize=None)
def load(name: str) -> GalleryEntry:
    path = _data_dir() / f"{name}.json"
    if not path.is_file():
        raise GalleryError(f"unknown gallery entry {name!r}; known: {', '.join(names())}")
    raw = json.loads(path.read_text(encoding="utf-8"))
    entry = GalleryEntry(
        name=raw["name"],
        description=raw.get("description", ""),
        series=series_from_json(raw["series"]),
        claims=tuple(Claim(c["class"], c["k"], c["expected"], c.get("source", "")) for c in raw.get("claims", [])),
        goldens={k: transducer_from_json(t) for k, t in raw.get("goldens", {}).items()},
        builds=tuple(Build(b["k"], b.get("golden"), b.get("outcome", "success")) for b in raw.get("builds", [])),
        variants={k: series_from_json(v) for k, v in raw.get("variants", {}).items()},
        raw=raw,
    )
    _verify(entry)
    return entry


def all_entries() -> list[GalleryEntry]:
    return [load(n) for n in names()]
