"""Signed Gauss codes for one-component welded knot diagrams.

A diagram is stored as the cyclic word of classical crossings met along the
knot, starting at the basepoint.  Each crossing appears twice, once as an
over-pass (``O``) and once as an under-pass (``U``), both tagged with the
crossing sign.  Welded crossings are not recorded.

Text format::

    code   := symbol*
    symbol := ("O" | "U") digits ("+" | "-")

Whitespace between symbols is ignored and the empty string is the unknot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable, Sequence

__all__ = [
    "GaussCodeError",
    "GaussSyntaxError",
    "StructureError",
    "GaussSymbol",
    "GaussCode",
    "Symmetry",
    "parse",
    "parse_symbol",
    "symmetry",
    "canonical",
    "canonical_key",
]


class GaussCodeError(ValueError):
    """Base class for malformed diagrams."""


class GaussSyntaxError(GaussCodeError):
    """A token does not match the symbol grammar."""


class StructureError(GaussCodeError):
    """The symbols do not form a valid double-occurrence word."""


@total_ordering
@dataclass(frozen=True)
class GaussSymbol:
    """One pass through a crossing.

    Symbols order as Over before Under, then by id, then Plus before Minus;
    :func:`canonical` relies on this.
    """

    over: bool
    crossing: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.crossing <= 0:
            raise ValueError(f"crossing id must be positive, got {self.crossing!r}")

    def sort_key(self) -> tuple[int, int, int]:
        return (0 if self.over else 1, self.crossing, 0 if self.sign > 0 else 1)

    def __lt__(self, other: "GaussSymbol") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def role(self) -> str:
        return "O" if self.over else "U"

    def __str__(self) -> str:
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


_TOKEN = re.compile(r"\s*([OU])(\d+)([+-])")


class GaussCode(Sequence[GaussSymbol]):
    """An immutable, validated signed Gauss code.

    Behaves as a sequence of :class:`GaussSymbol`.  Equality and hashing are
    by exact symbol sequence; use :func:`canonical` to compare diagrams up to
    basepoint and relabelling.
    """

    __slots__ = ("_symbols", "_hash")

    def __init__(self, symbols: Iterable[GaussSymbol] = ()) -> None:
        self._symbols: tuple[GaussSymbol, ...] = tuple(symbols)
        _validate(self._symbols)
        self._hash = hash(self._symbols)

    @classmethod
    def _trusted(cls, symbols: tuple[GaussSymbol, ...]) -> "GaussCode":
        obj = cls.__new__(cls)
        obj._symbols = symbols
        obj._hash = hash(symbols)
        return obj

    @property
    def symbols(self) -> tuple[GaussSymbol, ...]:
        return self._symbols

    def __len__(self) -> int:
        return len(self._symbols)

    def __getitem__(self, index):  # type: ignore[override]
        return self._symbols[index]

    def __iter__(self):
        return iter(self._symbols)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussCode):
            return self._symbols == other._symbols
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "".join(str(s) for s in self._symbols)

    def __repr__(self) -> str:
        return f"GaussCode({str(self)!r})"

    @property
    def crossing_count(self) -> int:
        return len(self._symbols) // 2

    def crossings(self) -> list[int]:
        """Crossing ids in order of first appearance."""
        seen: dict[int, None] = {}
        for s in self._symbols:
            seen.setdefault(s.crossing, None)
        return list(seen)

    def signs(self) -> dict[int, int]:
        return {s.crossing: s.sign for s in self._symbols}

    def writhe(self) -> int:
        return sum(s.sign for s in self._symbols if s.over)

    def positions(self) -> dict[int, tuple[int, int]]:
        """Map crossing id to ``(over_index, under_index)``."""
        over: dict[int, int] = {}
        under: dict[int, int] = {}
        for i, s in enumerate(self._symbols):
            (over if s.over else under)[s.crossing] = i
        return {c: (over[c], under[c]) for c in over}


def _validate(symbols: tuple[GaussSymbol, ...]) -> None:
    seen: dict[int, list[GaussSymbol]] = {}
    for s in symbols:
        if not isinstance(s, GaussSymbol):
            raise TypeError(f"expected GaussSymbol, got {type(s).__name__}")
        seen.setdefault(s.crossing, []).append(s)
    for cid, occ in seen.items():
        if len(occ) != 2:
            raise StructureError(f"crossing {cid} appears {len(occ)} time(s), expected 2")
        if occ[0].over == occ[1].over:
            raise StructureError(f"crossing {cid} has two {occ[0].role} occurrences")
        if occ[0].sign != occ[1].sign:
            raise StructureError(f"sign mismatch on crossing {cid}")


def parse(text: str) -> GaussCode:
    """Parse the text form of a Gauss code.

    Ids are kept as written.

    Raises:
        GaussSyntaxError: on a malformed token.
        StructureError: if the symbols do not form a valid code.
    """
    symbols = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            snippet = stripped[pos:pos + 8].strip()
            raise GaussSyntaxError(f"malformed token at offset {pos}: {snippet!r}")
        role, digits, sign = m.groups()
        cid = int(digits)
        if cid <= 0:
            raise GaussSyntaxError(f"crossing id must be positive at offset {pos}")
        symbols.append(GaussSymbol(role == "O", cid, 1 if sign == "+" else -1))
        pos = m.end()
    return GaussCode(symbols)


def parse_symbol(token: str) -> GaussSymbol:
    """Parse one symbol such as ``"O3-"``."""
    m = _TOKEN.fullmatch(token.strip())
    if m is None or int(m.group(2)) <= 0:
        raise GaussSyntaxError(f"malformed symbol {token!r}")
    role, digits, sign = m.groups()
    return GaussSymbol(role == "O", int(digits), 1 if sign == "+" else -1)


class Symmetry(str, Enum):
    REVERSE = "reverse"
    MIRROR = "mirror"
    VREFLECT = "vreflect"


def symmetry(code: GaussCode, op: Symmetry | str) -> GaussCode:
    """Apply one of the diagram symmetries.

    ``reverse`` (-K) reverses the traversal; ``mirror`` (K*) switches every
    crossing; ``vreflect`` (K^up) reflects the diagram in the plane, which
    negates every sign but keeps the over/under data.
    """
    op = Symmetry(op)
    if op is Symmetry.REVERSE:
        out = tuple(reversed(code.symbols))
    elif op is Symmetry.MIRROR:
        out = tuple(GaussSymbol(not s.over, s.crossing, -s.sign) for s in code)
    else:
        out = tuple(GaussSymbol(s.over, s.crossing, -s.sign) for s in code)
    return GaussCode._trusted(out)


def _relabelled_key(symbols: Sequence[GaussSymbol], start: int) -> tuple[tuple[int, int, int], ...]:
    n = len(symbols)
    labels: dict[int, int] = {}
    key = []
    for k in range(n):
        s = symbols[(start + k) % n]
        new = labels.get(s.crossing)
        if new is None:
            new = labels[s.crossing] = len(labels) + 1
        key.append((0 if s.over else 1, new, 0 if s.sign > 0 else 1))
    return tuple(key)


def canonical_key(code: GaussCode) -> tuple[tuple[int, int, int], ...]:
    """Hashable key equal for codes that differ only by basepoint and ids."""
    symbols = code.symbols
    if not symbols:
        return ()
    return min(_relabelled_key(symbols, r) for r in range(len(symbols)))


def canonical(code: GaussCode) -> GaussCode:
    """Least rotation of the code after relabelling ids by first appearance."""
    key = canonical_key(code)
    return GaussCode._trusted(
        tuple(GaussSymbol(r == 0, c, 1 if s == 0 else -1) for r, c, s in key)
    )
