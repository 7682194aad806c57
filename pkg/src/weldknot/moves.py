"""Welded Reidemeister moves as local rewrites of Gauss codes.

Moves act on cyclically adjacent positions; the pair ``(len - 1, 0)`` counts
as adjacent.  Besides R1, R2 and R3, welded equivalence allows two
consecutive over-passes to trade places (``OC``); the same exchange of two
under-passes is the forbidden move and is never generated.

Oriented R2/R3 variants are not listed by hand.  R2 takes an over-pair
``O_i O_j`` and an under-pair of the same two crossings in either order,
with opposite signs.  R3 is generated from the all-positive braid pattern

    A: O1 O2     B: U1 O3     C: U2 U3

(crossing 1 is A over B, 2 is A over C, 3 is B over C) by reversing any of
the three strands, which flips that strand's pair and the signs of its two
crossings, and by reflecting the plane, which flips all three signs.  The
move itself swaps the two symbols of each pair.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .codec import GaussCode, GaussSymbol, canonical_key, parse_symbol

__all__ = [
    "MoveKind",
    "Move",
    "MovePath",
    "InvalidMove",
    "SearchBudget",
    "NotFound",
    "enumerate_moves",
    "apply",
    "replay",
    "search",
]


class InvalidMove(ValueError):
    pass


class MoveKind(str, Enum):
    R1_INSERT = "R1Insert"
    R1_DELETE = "R1Delete"
    R2_INSERT = "R2Insert"
    R2_DELETE = "R2Delete"
    R3 = "R3"
    OC = "OC"

    @property
    def is_welded_only(self) -> bool:
        return self is MoveKind.OC


_KIND_ORDER = list(MoveKind)


@dataclass(frozen=True)
class Move:
    """One rewrite.

    ``site`` holds positions in the current word, or insertion gaps (a gap
    ``g`` inserts before position ``g``).  For insertions ``payload`` holds
    the symbols inserted at each gap, in gap order.
    """

    kind: MoveKind
    site: tuple[int, ...]
    variant: str = ""
    payload: tuple[tuple[GaussSymbol, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "site": list(self.site),
            "variant": self.variant,
            "payload": [[str(s) for s in group] for group in self.payload],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Move":
        payload = tuple(tuple(parse_symbol(tok) for tok in group) for group in data.get("payload", []))
        return cls(MoveKind(data["kind"]), tuple(data["site"]), data.get("variant", ""), payload)

    def __str__(self) -> str:
        extra = "".join(f" +{''.join(map(str, g))}" for g in self.payload)
        return f"{self.kind.value}{list(self.site)}{'/' + self.variant if self.variant else ''}{extra}"


@dataclass(frozen=True)
class MovePath:
    start: GaussCode
    steps: tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def end(self) -> GaussCode:
        return replay(self.start, self.steps)

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.steps]

    def dumps(self) -> str:
        return json.dumps({"start": str(self.start), "steps": self.to_json()})


def _adjacent_pairs(n: int) -> list[tuple[int, int]]:
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    return [(p, (p + 1) % n) for p in range(n)]


def _fresh_ids(code: GaussCode, k: int) -> list[int]:
    top = max((s.crossing for s in code), default=0)
    return list(range(top + 1, top + 1 + k))


def _gaps(code: GaussCode) -> range:
    return range(max(len(code), 1))


# -- matchers ---------------------------------------------------------------


def _r1_delete_sites(code: GaussCode) -> list[Move]:
    out = []
    for p, q in _adjacent_pairs(len(code)):
        a, b = code[p], code[q]
        if a.crossing == b.crossing:
            out.append(Move(MoveKind.R1_DELETE, (p, q), "OU" if a.over else "UO"))
    return out


def _r2_delete_sites(code: GaussCode) -> list[Move]:
    n = len(code)
    pos = code.positions()
    out = []
    for p, q in _adjacent_pairs(n):
        a, b = code[p], code[q]
        if not (a.over and b.over) or a.crossing == b.crossing or a.sign == b.sign:
            continue
        ui, uj = pos[a.crossing][1], pos[b.crossing][1]
        if (ui + 1) % n == uj:
            out.append(Move(MoveKind.R2_DELETE, (p, q, ui, uj), "parallel"))
        elif (uj + 1) % n == ui:
            out.append(Move(MoveKind.R2_DELETE, (p, q, uj, ui), "antiparallel"))
    return out


def _r3_valid(code: GaussCode, c1: int, c2: int, c3: int, flips: tuple[int, int, int]) -> str | None:
    signs = code.signs()
    ra, rb, rc = flips
    s1 = signs[c1] * (-1) ** (ra + rb)
    s2 = signs[c2] * (-1) ** (ra + rc)
    s3 = signs[c3] * (-1) ** (rb + rc)
    if s1 == s2 == s3:
        return f"{'rev' if ra else 'fwd'}-{'rev' if rb else 'fwd'}-{'rev' if rc else 'fwd'}/{'+' if s1 > 0 else '-'}"
    return None


def _r3_sites(code: GaussCode) -> list[Move]:
    n = len(code)
    if n < 6:
        return []
    pos = code.positions()
    out = []
    seen = set()
    for p, q in _adjacent_pairs(n):
        x, y = code[p], code[q]
        if not (x.over and y.over) or x.crossing == y.crossing:
            continue
        for c1, c2, ra in ((x.crossing, y.crossing, 0), (y.crossing, x.crossing, 1)):
            u1 = pos[c1][1]
            for nb, rb in (((u1 + 1) % n, 0), ((u1 - 1) % n, 1)):
                s = code[nb]
                c3 = s.crossing
                if not s.over or c3 in (c1, c2):
                    continue
                u2, u3 = pos[c2][1], pos[c3][1]
                if (u2 + 1) % n == u3:
                    c_pair, rc = (u2, u3), 0
                elif (u3 + 1) % n == u2:
                    c_pair, rc = (u3, u2), 1
                else:
                    continue
                b_pair = (u1, nb) if rb == 0 else (nb, u1)
                site = (p, q) + b_pair + c_pair
                if len(set(site)) != 6 or site in seen:
                    continue
                variant = _r3_valid(code, c1, c2, c3, (ra, rb, rc))
                if variant is not None:
                    seen.add(site)
                    out.append(Move(MoveKind.R3, site, variant))
    return out


def _oc_sites(code: GaussCode) -> list[Move]:
    out = []
    for p, q in _adjacent_pairs(len(code)):
        a, b = code[p], code[q]
        if a.over and b.over and a.crossing != b.crossing:
            out.append(Move(MoveKind.OC, (p, q)))
    return out


def _r1_inserts(code: GaussCode) -> list[Move]:
    (i,) = _fresh_ids(code, 1)
    out = []
    for g in _gaps(code):
        for order in ("OU", "UO"):
            for sign in (1, -1):
                first = order == "OU"
                syms = (GaussSymbol(first, i, sign), GaussSymbol(not first, i, sign))
                out.append(Move(MoveKind.R1_INSERT, (g,), f"{order}{'+' if sign > 0 else '-'}", (syms,)))
    return out


def _r2_inserts(code: GaussCode) -> list[Move]:
    i, j = _fresh_ids(code, 2)
    gaps = _gaps(code)
    out = []
    for parallel in (True, False):
        for sign in (1, -1):
            over = (GaussSymbol(True, i, sign), GaussSymbol(True, j, -sign))
            ui, uj = GaussSymbol(False, i, sign), GaussSymbol(False, j, -sign)
            under = (ui, uj) if parallel else (uj, ui)
            tag = f"{'parallel' if parallel else 'antiparallel'}{'+' if sign > 0 else '-'}"
            for p in gaps:
                for q in gaps:
                    if p < q:
                        out.append(Move(MoveKind.R2_INSERT, (p, q), tag, (over, under)))
                        out.append(Move(MoveKind.R2_INSERT, (p, q), tag, (under, over)))
                    elif p == q:
                        out.append(Move(MoveKind.R2_INSERT, (p, p), tag, (over, under)))
                        out.append(Move(MoveKind.R2_INSERT, (p, p), tag, (under, over)))
    return out


_ENUMERATORS = {
    MoveKind.R1_INSERT: _r1_inserts,
    MoveKind.R1_DELETE: _r1_delete_sites,
    MoveKind.R2_INSERT: _r2_inserts,
    MoveKind.R2_DELETE: _r2_delete_sites,
    MoveKind.R3: _r3_sites,
    MoveKind.OC: _oc_sites,
}


def enumerate_moves(code: GaussCode, kinds: Iterable[MoveKind] | None = None) -> list[Move]:
    """All applicable moves, ordered by kind and then by site."""
    wanted = _KIND_ORDER if kinds is None else [k for k in _KIND_ORDER if k in set(kinds)]
    out: list[Move] = []
    for kind in wanted:
        out.extend(sorted(_ENUMERATORS[kind](code), key=lambda m: (m.site, m.variant, _payload_key(m))))
    return out


def _payload_key(m: Move) -> tuple:
    return tuple(tuple(s.sort_key() for s in g) for g in m.payload)


# -- application ------------------------------------------------------------


def _insert(code: GaussCode, inserts: Sequence[tuple[int, tuple[GaussSymbol, ...]]]) -> GaussCode:
    by_gap: dict[int, list[GaussSymbol]] = {}
    for gap, syms in inserts:
        by_gap.setdefault(gap, []).extend(syms)
    out: list[GaussSymbol] = []
    for k, s in enumerate(code):
        out.extend(by_gap.pop(k, ()))
        out.append(s)
    for gap in sorted(by_gap):
        out.extend(by_gap[gap])
    return GaussCode(out)


def _check_gaps(code: GaussCode, gaps: Sequence[int]) -> None:
    if any(not 0 <= g <= max(len(code) - 1, 0) for g in gaps):
        raise InvalidMove(f"insertion gap out of range in {list(gaps)}")


def _check_fresh(code: GaussCode, payload) -> None:
    used = {s.crossing for s in code}
    if any(s.crossing in used for g in payload for s in g):
        raise InvalidMove("inserted crossing ids must be fresh")


def apply(code: GaussCode, move: Move) -> GaussCode:
    """Rewrite ``code`` by ``move``.

    Raises:
        InvalidMove: if the move does not match the code.
    """
    kind = move.kind
    if kind in (MoveKind.R1_INSERT, MoveKind.R2_INSERT):
        _check_gaps(code, move.site)
        _check_fresh(code, move.payload)
        expected_groups = 1 if kind is MoveKind.R1_INSERT else 2
        if len(move.payload) != expected_groups or len(move.site) != (1 if expected_groups == 1 else 2):
            raise InvalidMove(f"malformed {kind.value} move")
        if kind is MoveKind.R2_INSERT and move.site[0] > move.site[1]:
            raise InvalidMove("R2Insert gaps must be ordered")
        try:
            result = _insert(code, list(zip(move.site, move.payload)))
        except ValueError as exc:
            raise InvalidMove(str(exc)) from exc
        # an insertion is valid only if it can be undone by the matching deletion
        inverse = MoveKind.R1_DELETE if kind is MoveKind.R1_INSERT else MoveKind.R2_DELETE
        ids = {s.crossing for g in move.payload for s in g}
        if not any({result[p].crossing for p in m.site} == ids for m in _ENUMERATORS[inverse](result)):
            raise InvalidMove(f"payload does not form a {kind.value} pattern")
        return result

    if not any(m.site == move.site for m in _ENUMERATORS[kind](code)):
        raise InvalidMove(f"{kind.value} does not match at {list(move.site)} in {code}")
    symbols = list(code.symbols)
    if kind in (MoveKind.R1_DELETE, MoveKind.R2_DELETE):
        drop = set(move.site)
        return GaussCode._trusted(tuple(s for k, s in enumerate(symbols) if k not in drop))
    # R3 and OC swap the symbols of each listed pair
    site = move.site
    for a, b in zip(site[::2], site[1::2]):
        symbols[a], symbols[b] = symbols[b], symbols[a]
    return GaussCode._trusted(tuple(symbols))


def replay(start: GaussCode, steps: Iterable[Move]) -> GaussCode:
    code = start
    for m in steps:
        code = apply(code, m)
    return code


# -- search -----------------------------------------------------------------


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 4
    max_states: int = 10_000
    kinds: tuple[MoveKind, ...] = tuple(_KIND_ORDER)
    max_crossings: int | None = None

    def __post_init__(self) -> None:
        if self.max_depth < 0 or self.max_states <= 0:
            raise ValueError("search budget must be positive")


@dataclass(frozen=True)
class NotFound:
    states_visited: int
    frontier_size: int
    depth_reached: int
    exhausted: bool = False

    def to_json(self) -> dict:
        return {
            "found": False,
            "states_visited": self.states_visited,
            "frontier_size": self.frontier_size,
            "depth_reached": self.depth_reached,
            "exhausted": self.exhausted,
        }


def search(a: GaussCode, b: GaussCode, budget: SearchBudget | None = None) -> MovePath | NotFound:
    """Breadth-first search for a move sequence from ``a`` to ``b``.

    States are deduplicated by canonical form, so the returned path ends at
    a code with the same canonical form as ``b`` (equal up to basepoint and
    crossing ids).  Deterministic for a fixed budget.
    """
    budget = budget or SearchBudget()
    target = canonical_key(b)
    start_key = canonical_key(a)
    if start_key == target:
        return MovePath(a)
    parents: dict[tuple, tuple[tuple, Move] | None] = {start_key: None}
    frontier: deque[tuple[GaussCode, int]] = deque([(a, 0)])
    depth_reached = 0
    while frontier:
        code, depth = frontier.popleft()
        if depth >= budget.max_depth:
            frontier.appendleft((code, depth))
            break
        key = canonical_key(code)
        for move in enumerate_moves(code, budget.kinds):
            nxt = apply(code, move)
            if budget.max_crossings is not None and nxt.crossing_count > budget.max_crossings:
                continue
            nkey = canonical_key(nxt)
            if nkey in parents:
                continue
            parents[nkey] = (key, move)
            depth_reached = max(depth_reached, depth + 1)
            if nkey == target:
                return MovePath(a, _unwind(parents, nkey))
            if len(parents) >= budget.max_states:
                return NotFound(len(parents), len(frontier) + 1, depth_reached)
            frontier.append((nxt, depth + 1))
    return NotFound(len(parents), len(frontier), depth_reached, exhausted=not frontier)


def _unwind(parents: dict, key: tuple) -> tuple[Move, ...]:
    steps = []
    while parents[key] is not None:
        key, move = parents[key]
        steps.append(move)
    return tuple(reversed(steps))
