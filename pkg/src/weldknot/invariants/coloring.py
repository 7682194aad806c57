"""Arc colorings of Wirtinger presentations.

A homomorphism from the knot group to a finite group ``H`` is the same as a
coloring of the arcs by the conjugation quandle of ``H``, so one backtracking
engine serves both :func:`count_homs` and :func:`quandle_colorings`.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from ..codec import GaussCode
from ..knotgroup import Crossing, Presentation, wirtinger
from .algebra import FiniteGroup, FiniteQuandle

__all__ = ["iter_colorings", "iter_homs", "count_homs", "quandle_colorings"]

Table = Sequence[Sequence[int]]


def iter_colorings(
    n_arcs: int,
    crossings: Sequence[Crossing],
    size: int,
    fwd: tuple[Table, Table],
    bwd: tuple[Table, Table],
    fixed: dict[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every coloring satisfying ``out = fwd[sign](in, over)``.

    ``fwd[0]``/``bwd[0]`` are used at positive crossings and ``fwd[1]``/
    ``bwd[1]`` at negative ones; ``bwd`` must invert ``fwd`` in its first
    argument.  Colorings are produced in lexicographic order of the branch
    choices, which is deterministic.  ``fixed`` pins the colors of some
    arcs before the search starts.
    """
    if n_arcs == 0:
        return
    rels = [(c.incoming, c.over, c.outgoing, 0 if c.sign > 0 else 1) for c in crossings]
    touching: list[list[int]] = [[] for _ in range(n_arcs)]
    for r, (a, o, b, _) in enumerate(rels):
        for v in {a, o, b}:
            touching[v].append(r)
    colors = [-1] * n_arcs

    def propagate(start: int, trail: list[int]) -> bool:
        queue = [start]
        while queue:
            v = queue.pop()
            for r in touching[v]:
                a, o, b, s = rels[r]
                ca, co, cb = colors[a], colors[o], colors[b]
                if co < 0:
                    continue
                if ca >= 0:
                    want = fwd[s][ca][co]
                    if cb < 0:
                        colors[b] = want
                        trail.append(b)
                        queue.append(b)
                    elif cb != want:
                        return False
                elif cb >= 0:
                    colors[a] = bwd[s][cb][co]
                    trail.append(a)
                    queue.append(a)
        return True

    def pick() -> int:
        best, best_score = -1, -1
        for v in range(n_arcs):
            if colors[v] >= 0:
                continue
            score = 0
            for r in touching[v]:
                a, o, b, _ = rels[r]
                if o == v and (colors[a] >= 0 or colors[b] >= 0):
                    score += 1
            if score > best_score:
                best, best_score = v, score
        return best

    def search() -> Iterator[tuple[int, ...]]:
        v = pick()
        if v < 0:
            yield tuple(colors)
            return
        for x in range(size):
            trail = [v]
            colors[v] = x
            if propagate(v, trail):
                yield from search()
            for u in trail:
                colors[u] = -1

    pinned: list[int] = []
    for v, x in (fixed or {}).items():
        if colors[v] >= 0:
            if colors[v] != x:
                return
            continue
        colors[v] = x
        pinned.append(v)
        if not propagate(v, pinned):
            return
    yield from search()


def _group_tables(group: FiniteGroup) -> tuple[tuple[Table, Table], tuple[Table, Table]]:
    n = group.order
    t, inv = group.table, group.inverse
    # positive: out = o^-1 in o ; negative: out = o in o^-1
    pos = [[t[t[inv[o]][a]][o] for o in range(n)] for a in range(n)]
    neg = [[t[t[o][a]][inv[o]] for o in range(n)] for a in range(n)]
    return (pos, neg), (neg, pos)


def iter_homs(
    pres: Presentation, group: FiniteGroup, meridian_image: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield generator images of every homomorphism to ``group``.

    With ``meridian_image`` only homomorphisms sending generator 0 there
    are produced.
    """
    fwd, bwd = _group_tables(group)
    fixed = None if meridian_image is None else {0: meridian_image}
    return iter_colorings(pres.generator_count, pres.crossings, group.order, fwd, bwd, fixed)


def count_homs(pres: Presentation, group: FiniteGroup) -> int:
    return sum(1 for _ in iter_homs(pres, group))


def quandle_colorings(code: GaussCode, quandle: FiniteQuandle) -> int:
    """Number of arc colorings by ``quandle``.

    At a positive crossing the outgoing under-arc is ``incoming * over``; at
    a negative crossing it is ``incoming *^-1 over``.
    """
    pres = wirtinger(code)
    fwd = (quandle.op, quandle.inv_op)
    bwd = (quandle.inv_op, quandle.op)
    return sum(1 for _ in iter_colorings(pres.generator_count, pres.crossings, quandle.order, fwd, bwd))

