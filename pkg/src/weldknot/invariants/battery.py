"""Peripheral coloring multisets and level-tagged invariant batteries."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Sequence

from ..codec import GaussCode
from ..knotgroup import PeripheralStructure, Word, invert, peripheral
from .algebra import FiniteGroup, FiniteQuandle, builtin_group, builtin_quandle
from .bracket import f_polynomial
from .coloring import iter_homs, quandle_colorings
from .fox import alexander
from .laurent import LaurentPoly

__all__ = [
    "Level",
    "Palette",
    "DEFAULT_PALETTE",
    "PALETTE_VERSION",
    "InvariantBattery",
    "peripheral_multiset",
    "battery",
    "first_difference",
]


class Level(str, Enum):
    VIRTUAL = "virtual"
    WELDED = "welded"
    TUBE = "tube"


PALETTE_VERSION = "palette-v1"
DEFAULT_GROUPS = ("Z2", "Z3", "Z4", "Z5", "S3", "D4", "D5", "D6", "A4", "S4")
DEFAULT_QUANDLES = ("R3", "R4", "R5", "R6", "R7", "R8", "R9")


@dataclass(frozen=True)
class Palette:
    """Coloring targets for a battery.  Comparisons are only meaningful
    between batteries built from the same palette."""

    groups: tuple[str, ...] = DEFAULT_GROUPS
    quandles: tuple[str, ...] = DEFAULT_QUANDLES

    @property
    def version(self) -> str:
        if (self.groups, self.quandles) == (DEFAULT_GROUPS, DEFAULT_QUANDLES):
            return PALETTE_VERSION
        return f"{PALETTE_VERSION}+custom"

    def to_json(self) -> dict:
        return {"version": self.version, "groups": list(self.groups), "quandles": list(self.quandles)}


DEFAULT_PALETTE = Palette()


@lru_cache(maxsize=None)
def _group(name: str) -> FiniteGroup:
    return builtin_group(name)


@lru_cache(maxsize=None)
def _quandle(name: str) -> FiniteQuandle:
    return builtin_quandle(name)


def _evaluate(word: Word, images: Sequence[int], group: FiniteGroup) -> int:
    t, inv = group.table, group.inverse
    x = group.identity
    for g, e in word:
        y = images[g]
        x = t[x][y if e > 0 else inv[y]]
    return x


def _orbit_rep(x: int, y: int, group: FiniteGroup, invert_longitude: bool) -> tuple[int, int]:
    best = None
    ys = (y, group.inverse[y]) if invert_longitude else (y,)
    for yy in ys:
        for g in range(group.order):
            cand = (group.conj(x, g), group.conj(yy, g))
            if best is None or cand < best:
                best = cand
    return best


def peripheral_multiset(
    ps: PeripheralStructure, group: FiniteGroup, normalize: Level | str = Level.WELDED
) -> tuple[tuple[tuple[int, int], int], ...]:
    """Multiset of ``(rho(m), rho(l))`` over all homomorphisms ``rho``.

    Pairs are reduced to the least member of their orbit under simultaneous
    conjugation; at Tube level ``(x, y)`` is also identified with
    ``(x, y**-1)``.  Returned as sorted ``((x, y), count)`` items.
    """
    return _peripheral_data(ps, group, Level(normalize) is Level.TUBE)[1]


def _conjugacy_classes(group: FiniteGroup) -> list[tuple[int, int]]:
    """``(least element, class size)`` for each conjugacy class."""
    seen: set[int] = set()
    out = []
    for x in range(group.order):
        if x in seen:
            continue
        cls = {group.conj(x, g) for g in range(group.order)}
        seen |= cls
        out.append((x, len(cls)))
    return out


def _peripheral_data(ps: PeripheralStructure, group: FiniteGroup, tube: bool) -> tuple[int, tuple]:
    """Hom count and peripheral multiset.

    Conjugating a homomorphism keeps its orbit representative, so only
    homomorphisms whose meridian image is a class representative are
    enumerated, each weighted by the class size.
    """
    if ps.meridian != ((0, 1),):
        raise ValueError("meridian must be generator 0")
    cache: dict[tuple[int, int], tuple[int, int]] = {}
    counts: Counter[tuple[int, int]] = Counter()
    total = 0
    for x, size in _conjugacy_classes(group):
        for images in iter_homs(ps.group, group, meridian_image=x):
            pair = (x, _evaluate(ps.longitude, images, group))
            rep = cache.get(pair)
            if rep is None:
                rep = cache[pair] = _orbit_rep(*pair, group, tube)
            counts[rep] += size
            total += size
    return total, tuple(sorted(counts.items()))


def _label_multiset(items, group: FiniteGroup) -> list:
    return [[[group.labels[x], group.labels[y]], n] for (x, y), n in items]


@dataclass(frozen=True)
class InvariantBattery:
    """Normalized invariant values of one diagram at one comparison level."""

    level: Level
    palette: Palette
    alexander: LaurentPoly
    hom_counts: tuple[tuple[str, int], ...]
    quandle_counts: tuple[tuple[str, int], ...]
    peripheral_multisets: tuple[tuple[str, tuple], ...]
    f_polynomial: LaurentPoly | None = None
    source: GaussCode | None = field(default=None, compare=False)

    def entries(self) -> dict[str, Any]:
        """Comparable entries in a fixed order."""
        out: dict[str, Any] = {"alexander": self.alexander}
        for name, n in self.hom_counts:
            out[f"hom_counts[{name}]"] = n
        for name, n in self.quandle_counts:
            out[f"quandle_counts[{name}]"] = n
        for name, ms in self.peripheral_multisets:
            out[f"peripheral_multisets[{name}]"] = ms
        if self.level is Level.VIRTUAL:
            out["f_polynomial"] = self.f_polynomial
        return out

    def to_json(self) -> dict:
        entries: dict[str, Any] = {
            "alexander": self.alexander.to_json(),
            "hom_counts": dict(self.hom_counts),
            "quandle_counts": dict(self.quandle_counts),
            "peripheral_multisets": {
                name: _label_multiset(ms, _group(name)) for name, ms in self.peripheral_multisets
            },
        }
        if self.f_polynomial is not None:
            entries["f_polynomial"] = self.f_polynomial.to_json()
        return {"level": self.level.value, "palette": self.palette.to_json(), "entries": entries}


def battery(
    code: GaussCode, level: Level | str = Level.WELDED, palette: Palette = DEFAULT_PALETTE
) -> InvariantBattery:
    """Compute the invariant battery of a diagram.

    Welded: Alexander polynomial, hom counts, quandle coloring counts and
    conjugation-normalized peripheral multisets.  Virtual adds the
    f-polynomial.  Tube replaces the peripheral multisets by their
    longitude-inversion quotient.
    """
    level = Level(level)
    ps = peripheral(code)
    groups = [_group(g) for g in palette.groups]
    tube = level is Level.TUBE
    hom_counts = []
    multisets = []
    for g in groups:
        count, multiset = _peripheral_data(ps, g, tube)
        hom_counts.append((g.name, count))
        multisets.append((g.name, multiset))
    return InvariantBattery(
        level=level,
        palette=palette,
        alexander=alexander(ps.group),
        hom_counts=tuple(hom_counts),
        quandle_counts=tuple((q, quandle_colorings(code, _quandle(q))) for q in palette.quandles),
        peripheral_multisets=tuple(multisets),
        f_polynomial=f_polynomial(code) if level is Level.VIRTUAL else None,
        source=code,
    )


def first_difference(a: InvariantBattery, b: InvariantBattery) -> str | None:
    """Name of the first entry where two batteries differ, else ``None``.

    Raises:
        ValueError: if the batteries are at different levels or palettes.
    """
    if a.level is not b.level:
        raise ValueError(f"cannot compare {a.level.value} battery with {b.level.value} battery")
    if a.palette != b.palette:
        raise ValueError("cannot compare batteries built from different palettes")
    ea, eb = a.entries(), b.entries()
    for name, value in ea.items():
        if eb.get(name) != value:
            return name
    return None


def with_longitude_inverted(ps: PeripheralStructure) -> PeripheralStructure:
    return PeripheralStructure(ps.group, ps.meridian, invert(ps.longitude), ps.writhe, ps.source)
