"""Exact integer Laurent polynomials in one variable."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "determinant", "cofactor_determinant", "poly_gcd"]


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Stored as a mapping ``exponent -> coefficient`` with zero coefficients
    dropped.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = 0) -> None:
        if isinstance(terms, int):
            items: Iterable[tuple[int, int]] = [(0, terms)]
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """Return p(t**-1)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._terms.items())

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient of an exact division.

        Raises:
            ZeroDivisionError: if ``other`` is zero.
            ArithmeticError: if the division leaves a remainder.
        """
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return LaurentPoly()
        rem = dict(self._terms)
        d_lead = other.max_degree()
        d_low = other.min_degree()
        d_coeff = other._terms[d_lead]
        quot: dict[int, int] = {}
        while rem:
            r_lead = max(rem)
            if r_lead - d_lead < min(rem) - d_low:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            c, r = divmod(rem[r_lead], d_coeff)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            shift = r_lead - d_lead
            quot[shift] = c
            for e, dc in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def normalized(self) -> "LaurentPoly":
        """Representative up to units ``+-t**k``.

        Lowest exponent moved to 0 and lowest coefficient made positive.
        """
        if not self._terms:
            return self
        low = self.min_degree()
        sign = 1 if self._terms[low] > 0 else -1
        return LaurentPoly({e - low: sign * c for e, c in self._terms.items()})

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


def determinant(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by fraction-free (Bareiss) elimination.

    Every intermediate division is exact, so no fractions arise.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n <= 3:
        return cofactor_determinant(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = LaurentPoly(1)
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - mik * row_k[j]
                row_i[j] = num.exact_div(prev) if num else num
            row_i[k] = LaurentPoly()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_determinant(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly(1)
    if n == 1:
        return matrix[0][0]
    total = LaurentPoly()
    for j, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * cofactor_determinant(minor)
        total = total - term if j % 2 else total + term
    return total


def _content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense ascending coefficient lists."""
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        la = a[-1]
        a = [c * lb for c in a]
        shift = da - db
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor up to units, returned normalized.

    Uses the primitive polynomial remainder sequence over the integers.
    """
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    a = _dense(p.normalized())
    b = _dense(q.normalized())
    ca, cb = _content(a), _content(b)
    c = gcd(ca, cb)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        cr = _content(r)
        a, b = b, [x // cr for x in r]
    else:
        # b is a nonzero constant: primitive parts are coprime
        return LaurentPoly(c)
    return LaurentPoly({e: c * x for e, x in enumerate(b) if x}).normalized()


def _dense(p: LaurentPoly) -> list[int]:
    low = p.min_degree()
    out = [0] * (p.max_degree() - low + 1)
    for e, c in p.terms.items():
        out[e - low] = c
    return out
