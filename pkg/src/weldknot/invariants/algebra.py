"""Finite groups and quandles used as coloring targets."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Hashable, Sequence

__all__ = [
    "AlgebraError",
    "FiniteGroup",
    "FiniteQuandle",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "dihedral_quandle",
    "builtin_group",
    "builtin_quandle",
]


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by its multiplication table over elements ``0..n-1``.

    The group axioms are checked at construction.
    """

    name: str
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()
    identity: int = field(init=False)
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        n = len(self.table)
        t = self.table
        if n == 0 or any(len(row) != n for row in t):
            raise AlgebraError(f"{self.name}: table is not square")
        if any(not 0 <= v < n for row in t for v in row):
            raise AlgebraError(f"{self.name}: table entry out of range")
        ident = [e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))]
        if not ident:
            raise AlgebraError(f"{self.name}: no identity element")
        e = ident[0]
        inv = []
        for x in range(n):
            ys = [y for y in range(n) if t[x][y] == e]
            if len(ys) != 1 or t[ys[0]][x] != e:
                raise AlgebraError(f"{self.name}: element {x} has no two-sided inverse")
            inv.append(ys[0])
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise AlgebraError(f"{self.name}: not associative at ({a}, {b}, {c})")
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inv))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, a: int, g: int) -> int:
        """``g**-1 * a * g``."""
        t = self.table
        return t[t[self.inverse[g]][a]][g]


@dataclass(frozen=True)
class FiniteQuandle:
    """Quandle given by tables for ``a * b`` and ``a *^-1 b``.

    The quandle axioms (idempotence, right invertibility, right
    self-distributivity) are checked at construction.
    """

    name: str
    op: tuple[tuple[int, ...], ...]
    inv_op: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        n = len(self.op)
        op = self.op
        if n == 0 or any(len(row) != n for row in op):
            raise AlgebraError(f"{self.name}: table is not square")
        inv = [[0] * n for _ in range(n)]
        for b in range(n):
            col = [op[a][b] for a in range(n)]
            if sorted(col) != list(range(n)):
                raise AlgebraError(f"{self.name}: right action of {b} is not a bijection")
            for a in range(n):
                inv[op[a][b]][b] = a
        inv_t = tuple(tuple(r) for r in inv)
        if self.inv_op and self.inv_op != inv_t:
            raise AlgebraError(f"{self.name}: inverse table does not invert the operation")
        object.__setattr__(self, "inv_op", inv_t)
        for a in range(n):
            if op[a][a] != a:
                raise AlgebraError(f"{self.name}: {a} * {a} != {a}")
        for a, b, c in product(range(n), repeat=3):
            if op[op[a][b]][c] != op[op[a][c]][op[b][c]]:
                raise AlgebraError(f"{self.name}: not self-distributive at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.op)


def _from_elements(name: str, elements: Sequence[Hashable], mul: Callable, label: Callable = str) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroup(name, table, tuple(label(x) for x in elements))


def cyclic_group(n: int) -> FiniteGroup:
    return _from_elements(f"Z{n}", list(range(n)), lambda a, b: (a + b) % n)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order ``2n``; elements ``(flip, rotation)``."""
    elements = [(f, r) for f in (0, 1) for r in range(n)]

    def mul(a, b):
        fa, ra = a
        fb, rb = b
        return ((fa + fb) % 2, ((-ra if fb else ra) + rb) % n)

    return _from_elements(f"D{n}", elements, mul, lambda x: f"{'s' if x[0] else ''}r{x[1]}")


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p first, then q
    return tuple(q[p[i]] for i in range(len(p)))


def _perm_label(p: tuple[int, ...]) -> str:
    return "".join(str(i + 1) for i in p)


def _parity(p: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def symmetric_group(n: int) -> FiniteGroup:
    elements = sorted(permutations(range(n)))
    return _from_elements(f"S{n}", elements, _compose, _perm_label)


def alternating_group(n: int) -> FiniteGroup:
    elements = [p for p in sorted(permutations(range(n))) if _parity(p) == 0]
    return _from_elements(f"A{n}", elements, _compose, _perm_label)


def dihedral_quandle(n: int) -> FiniteQuandle:
    """Reflections of the n-gon: ``a * b = 2b - a (mod n)``."""
    op = tuple(tuple((2 * b - a) % n for b in range(n)) for a in range(n))
    return FiniteQuandle(f"R{n}", op)


def conjugation_quandle(group: FiniteGroup) -> FiniteQuandle:
    """``a * b = b**-1 a b`` on the elements of ``group``."""
    n = group.order
    op = tuple(tuple(group.conj(a, b) for b in range(n)) for a in range(n))
    return FiniteQuandle(f"Conj({group.name})", op)


def builtin_group(name: str) -> FiniteGroup:
    """Look up ``Zn``, ``Dn``, ``Sn`` or ``An`` by name."""
    kind, digits = name[:1].upper(), name[1:]
    if not digits.isdigit():
        raise AlgebraError(f"unknown group {name!r}")
    n = int(digits)
    if kind == "Z" and n >= 1:
        return cyclic_group(n)
    if kind == "D" and n >= 3:
        return dihedral_group(n)
    if kind == "S" and 1 <= n <= 5:
        return symmetric_group(n)
    if kind == "A" and 3 <= n <= 5:
        return alternating_group(n)
    raise AlgebraError(f"unknown group {name!r}")


def builtin_quandle(name: str) -> FiniteQuandle:
    """Look up a dihedral quandle ``Rn``."""
    if name[:1].upper() == "R" and name[1:].isdigit() and int(name[1:]) >= 1:
        return dihedral_quandle(int(name[1:]))
    raise AlgebraError(f"unknown quandle {name!r}")
