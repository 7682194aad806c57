"""Wirtinger presentation, meridian and longitude of a welded knot diagram.

Arcs run between consecutive under-passes.  Arc 0 is the arc containing the
basepoint, so for under-passes at positions ``u_0 < u_1 < ... < u_{n-1}``
the crossing at ``u_j`` has incoming under-arc ``j`` and outgoing under-arc
``j + 1 (mod n)``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .codec import GaussCode

__all__ = [
    "Word",
    "Crossing",
    "Presentation",
    "PeripheralStructure",
    "reduce_word",
    "invert",
    "exponent_sum",
    "wirtinger",
    "longitude",
    "peripheral",
]

Letter = tuple[int, int]
Word = tuple[Letter, ...]


def reduce_word(letters: Iterable[Letter]) -> Word:
    """Freely reduce a sequence of ``(generator, +-1)`` letters."""
    stack: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +-1, got {e}")
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def invert(word: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def exponent_sum(word: Sequence[Letter]) -> int:
    return sum(e for _, e in word)


@dataclass(frozen=True)
class Crossing:
    """A Wirtinger relation ``outgoing = over**-sign * incoming * over**sign``."""

    label: int
    incoming: int
    outgoing: int
    over: int
    sign: int

    def relator(self) -> Word:
        e = self.sign
        return reduce_word([(self.outgoing, -1), (self.over, -e), (self.incoming, 1), (self.over, e)])


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    crossings: tuple[Crossing, ...] = ()
    generator_labels: tuple[str, ...] = ()

    @property
    def relations(self) -> list[Word]:
        return [c.relator() for c in self.crossings]

    def to_json(self) -> dict:
        return {
            "generators": list(range(self.generator_count)),
            "labels": list(self.generator_labels),
            "relations": [[list(x) for x in r] for r in self.relations],
        }


@dataclass(frozen=True)
class PeripheralStructure:
    group: Presentation
    meridian: Word
    longitude: Word
    writhe: int
    source: GaussCode = field(default_factory=GaussCode, compare=False)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "meridian": [list(x) for x in self.meridian],
            "longitude": [list(x) for x in self.longitude],
            "writhe": self.writhe,
        }


def _arc_layout(code: GaussCode) -> tuple[list[int], list[int]]:
    """Under-pass positions and the arc index of every position."""
    unders = [i for i, s in enumerate(code) if not s.over]
    n = len(unders)
    arc_of = []
    for i in range(len(code)):
        # arcs start just after each under-pass; arc 0 wraps over the basepoint
        j = bisect_left(unders, i)
        arc_of.append(j % n if n else 0)
    return unders, arc_of


def wirtinger(code: GaussCode) -> Presentation:
    """Wirtinger presentation with one generator per arc."""
    unders, arc_of = _arc_layout(code)
    n = len(unders)
    if n == 0:
        return Presentation(1, (), ("arc0[basepoint]",))
    over_pos = {s.crossing: i for i, s in enumerate(code) if s.over}
    crossings = []
    for j, u in enumerate(unders):
        s = code[u]
        crossings.append(
            Crossing(
                label=s.crossing,
                incoming=j,
                outgoing=(j + 1) % n,
                over=arc_of[over_pos[s.crossing]],
                sign=s.sign,
            )
        )
    labels = []
    for j in range(n):
        start = unders[j - 1] + 1 if j else unders[-1] + 1
        end = unders[j]
        labels.append(f"arc{j}[{start % len(code)}..{end}]")
    return Presentation(n, tuple(crossings), tuple(labels))


def longitude(code: GaussCode) -> tuple[Word, int]:
    """Combinatorial longitude and writhe.

    Reads the over-arc generator at each under-pass from the basepoint, with
    the crossing sign as exponent, then appends ``m**-writhe``.
    """
    pres = wirtinger(code)
    letters: list[Letter] = [(c.over, c.sign) for c in pres.crossings]
    k = code.writhe()
    meridian = 0
    letters.extend([(meridian, -1 if k > 0 else 1)] * abs(k))
    return reduce_word(letters), k


def peripheral(code: GaussCode) -> PeripheralStructure:
    pres = wirtinger(code)
    word, k = longitude(code)
    return PeripheralStructure(pres, ((0, 1),), word, k, code)
