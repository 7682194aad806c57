"""Writhe-normalized Kauffman bracket of a Gauss code.

Not a welded invariant: overcrossings commuting changes it.  It is used as
a chirality certificate for classical diagrams.

Endpoint ``2p`` is where the knot enters position ``p`` of the code and
``2p + 1`` where it leaves.  The oriented smoothing of a crossing joins
over-in to under-out and under-in to over-out; the other smoothing joins the
two ins and the two outs.  A positive crossing takes the oriented smoothing
as its A-state, a negative crossing as its B-state.
"""

from __future__ import annotations

from ..codec import GaussCode
from .laurent import LaurentPoly

__all__ = ["smoothing_pairs", "kauffman_bracket", "f_polynomial"]

_LOOP = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2


def smoothing_pairs(over: int, under: int, sign: int, a_state: bool) -> tuple[tuple[int, int], tuple[int, int]]:
    """Endpoint pairs joined by one smoothing of a crossing."""
    if a_state == (sign > 0):
        return (2 * over, 2 * under + 1), (2 * under, 2 * over + 1)
    return (2 * over, 2 * under), (2 * over + 1, 2 * under + 1)


def _order(code: GaussCode) -> list[tuple[int, int, int]]:
    """Crossings as ``(over, under, sign)``, greedily ordered to keep the
    set of half-processed strands small."""
    n = len(code)
    pending = {c: (o, u, code[o].sign) for c, (o, u) in code.positions().items()}
    done: set[int] = set()
    order = []
    while pending:
        def score(item):
            c, (o, u, _) = item
            touching = sum(((p - 1) % n in done) + ((p + 1) % n in done) for p in (o, u))
            return (-touching, min(o, u))

        c, entry = min(pending.items(), key=score)
        del pending[c]
        done.update(entry[:2])
        order.append(entry)
    return order


def kauffman_bracket(code: GaussCode) -> LaurentPoly:
    """Bracket polynomial by a state sum over smoothings.

    Crossings are smoothed one at a time; partial states that connect the
    remaining endpoints the same way are merged, so the cost follows the
    number of distinct connection patterns instead of ``2**n``.
    """
    n = len(code)
    if n == 0:
        return LaurentPoly(1)
    start = {}
    for p in range(n):
        a, b = 2 * p + 1, 2 * ((p + 1) % n)
        start[a], start[b] = b, a
    # connection pattern -> {(A-count minus B-count, closed loops): multiplicity}
    states: dict[frozenset, dict[tuple[int, int], int]] = {_key(start): {(0, 0): 1}}
    for over, under, sign in _order(code):
        nxt: dict[frozenset, dict[tuple[int, int], int]] = {}
        for key, weights in states.items():
            for a_state in (True, False):
                match = dict(_pairs(key))
                closed = 0
                for x, y in smoothing_pairs(over, under, sign, a_state):
                    px = match.pop(x)
                    if px == y:
                        match.pop(y)
                        closed += 1
                        continue
                    py = match.pop(y)
                    match[px], match[py] = py, px
                step = 1 if a_state else -1
                bucket = nxt.setdefault(_key(match), {})
                for (ab, loops), mult in weights.items():
                    k = (ab + step, loops + closed)
                    bucket[k] = bucket.get(k, 0) + mult
        states = nxt
    (weights,) = states.values()
    total = LaurentPoly()
    for (ab, loops), mult in weights.items():
        total = total + (_LOOP ** (loops - 1)).shift(ab) * mult
    return total


def _key(match: dict[int, int]) -> frozenset:
    return frozenset((x, y) for x, y in match.items() if x < y)


def _pairs(key: frozenset):
    for x, y in key:
        yield x, y
        yield y, x


def f_polynomial(code: GaussCode) -> LaurentPoly:
    """``(-A^3)^(-writhe) * <K>`` in the variable A."""
    w = code.writhe()
    factor = LaurentPoly({-3 * w: -1 if w % 2 else 1})
    return factor * kauffman_bracket(code)
