"""Alexander polynomial from a presentation via Fox calculus."""

from __future__ import annotations

from ..knotgroup import Presentation, Word
from .laurent import LaurentPoly, determinant, poly_gcd

__all__ = ["fox_derivative", "alexander_matrix", "alexander", "DegenerateMatrix"]


class DegenerateMatrix(ArithmeticError):
    """The Alexander matrix has a vanishing first elementary ideal."""


def fox_derivative(word: Word, generator: int) -> LaurentPoly:
    """Abelianized Fox derivative, every generator sent to ``t``."""
    acc: dict[int, int] = {}
    prefix = 0
    for g, e in word:
        if g == generator:
            k = prefix if e > 0 else prefix - 1
            acc[k] = acc.get(k, 0) + e
        prefix += e
    return LaurentPoly(acc)


def alexander_matrix(pres: Presentation) -> list[list[LaurentPoly]]:
    return [
        [fox_derivative(rel, g) for g in range(pres.generator_count)]
        for rel in pres.relations
    ]


def _is_unit(p: LaurentPoly) -> bool:
    terms = p.terms
    return len(terms) == 1 and next(iter(terms.values())) in (1, -1)


def _eliminate_units(rows: list[dict[int, LaurentPoly]], columns: set[int]) -> None:
    """Remove unit pivots in place; keeps the ideal of maximal minors."""
    while True:
        pivot = None
        for r, row in enumerate(rows):
            for c, v in row.items():
                if _is_unit(v):
                    cand = (len(row), r, c)
                    if pivot is None or cand < pivot:
                        pivot = cand
        if pivot is None:
            return
        _, r, c = pivot
        prow = rows.pop(r)
        inv = prow[c] ** -1
        for row in rows:
            f = row.get(c)
            if f is None:
                continue
            factor = f * inv
            for k, v in prow.items():
                nv = row.get(k, LaurentPoly()) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        columns.discard(c)


def alexander(pres: Presentation, *, strict: bool = False) -> LaurentPoly:
    """Normalized Alexander polynomial of a Wirtinger presentation.

    Computes the greatest common divisor of the maximal minors of the Fox
    matrix with one column removed.  Unit pivots are eliminated first, which
    leaves the ideal of maximal minors unchanged; the remaining small block
    is handled by fraction-free determinants.  For classical diagrams every
    maximal minor agrees up to a unit, so this is the usual determinant.

    The result is normalized to lowest exponent 0 with positive lowest
    coefficient.  A vanishing ideal is returned as 0, or raised as
    :class:`DegenerateMatrix` when ``strict`` is set.
    """
    n = pres.generator_count
    if not pres.crossings:
        return LaurentPoly(1)
    matrix = alexander_matrix(pres)
    rows = [{c: v for c, v in enumerate(row[: n - 1]) if v} for row in matrix]
    columns = set(range(n - 1))
    _eliminate_units(rows, columns)
    cols = sorted(columns)
    if not cols:
        return LaurentPoly(1)
    dense = [[row.get(c, LaurentPoly()) for c in cols] for row in rows]
    result = LaurentPoly()
    for skip in range(len(dense)):
        minor = dense[:skip] + dense[skip + 1:]
        result = poly_gcd(result, determinant(minor))
        if result == 1:
            break
    if result.is_zero():
        if strict:
            raise DegenerateMatrix("Alexander ideal vanishes")
        return result
    return result.normalized()
