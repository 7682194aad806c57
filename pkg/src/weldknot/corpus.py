"""Built-in corpus of classical knots.

Each entry is produced from a braid word and carries the Alexander
polynomial from the standard tables.  ``weld corpus verify`` recomputes the
polynomial of every entry and refuses to pass on a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codec import GaussCode, GaussSymbol, StructureError
from .invariants.laurent import LaurentPoly


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    code: GaussCode
    expected_alexander: LaurentPoly
    classical_origin: bool = True
    chiral_classical: bool = False
    braid: tuple[int, ...] = ()


def braid_closure(word: Sequence[int], strands: int | None = None) -> GaussCode:
    """Gauss code of the closure of a braid word.

    Generators are 1-based; ``i`` is a positive crossing where the strand in
    position ``i`` passes over the one in position ``i + 1``, and ``-i`` its
    inverse.  The closure must have a single component.
    """
    if not word:
        return GaussCode()
    if strands is None:
        strands = max(abs(g) for g in word) + 1
    symbols: list[GaussSymbol] = []
    pos = 1
    while True:
        for k, g in enumerate(word, start=1):
            i = abs(g)
            if pos not in (i, i + 1):
                continue
            over = (pos == i) if g > 0 else (pos == i + 1)
            symbols.append(GaussSymbol(over, k, 1 if g > 0 else -1))
            pos = i + 1 if pos == i else i
        if pos == 1:
            break
    if len(symbols) != 2 * len(word):
        raise StructureError(f"braid closure of {list(word)} has more than one component")
    return GaussCode(symbols)


def _poly(*coeffs: int) -> LaurentPoly:
    """Polynomial from ascending coefficients."""
    return LaurentPoly({e: c for e, c in enumerate(coeffs) if c})


_TABLE: list[tuple[str, tuple[int, ...], LaurentPoly, bool]] = [
    ("3_1", (1, 1, 1), _poly(1, -1, 1), True),
    ("4_1", (1, -2, 1, -2), _poly(1, -3, 1), False),
    ("5_1", (1, 1, 1, 1, 1), _poly(1, -1, 1, -1, 1), True),
    ("5_2", (1, 1, 1, 2, -1, 2), _poly(2, -3, 2), True),
    ("6_1", (1, 1, 2, -1, -3, 2, -3), _poly(2, -5, 2), True),
    ("6_2", (1, 1, 1, -2, 1, -2), _poly(1, -3, 3, -3, 1), True),
    ("6_3", (1, 1, -2, 1, -2, -2), _poly(1, -3, 5, -3, 1), False),
    ("7_1", (1,) * 7, _poly(1, -1, 1, -1, 1, -1, 1), True),
]


def _build() -> dict[str, CorpusEntry]:
    out = {}
    for name, braid, alex, chiral in _TABLE:
        out[name] = CorpusEntry(
            name=name,
            code=braid_closure(braid),
            expected_alexander=alex,
            classical_origin=True,
            chiral_classical=chiral,
            braid=braid,
        )
    return out


CORPUS: dict[str, CorpusEntry] = _build()


def get(name: str) -> CorpusEntry:
    try:
        return CORPUS[name]
    except KeyError:
        raise KeyError(f"unknown corpus knot {name!r}; known: {', '.join(CORPUS)}") from None


def lookup(code: GaussCode) -> CorpusEntry | None:
    """Corpus entry whose code has the same canonical form, if any."""
    from .codec import canonical_key

    key = canonical_key(code)
    for entry in CORPUS.values():
        if canonical_key(entry.code) == key:
            return entry
    return None
