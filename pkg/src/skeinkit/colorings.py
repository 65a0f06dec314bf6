"""Fox p-colorings and the col_3 / Jones identity."""

from __future__ import annotations

__all__ = ["ColoringSystem", "coloring_system", "count_colorings", "col3_jones_check", "is_prime"]

from dataclasses import dataclass
from fractions import Fraction

from .bracket import EMPTY_LINK, jones
from .diagram import LinkDiagram
from .poly import LaurentPoly


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class ColoringSystem:
    """Crossing relations ``2*over - under_in - under_out = 0`` over Z/p.

    ``arcs`` maps every edge label to its arc index; free circles add
    unconstrained columns.
    """

    p: int
    matrix: tuple[tuple[int, ...], ...]
    n_arcs: int
    arcs: dict

    def nullity(self) -> int:
        return self.n_arcs - _rank_mod_p([list(r) for r in self.matrix], self.p)


def _arcs(d: LinkDiagram) -> tuple[dict[int, int], int]:
    parent = {e: e for t in d.crossings for e in t}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in d.crossings:
        parent[find(t[1])] = find(t[3])
    index: dict[int, int] = {}
    arcs = {}
    for e in sorted(parent):
        r = find(e)
        arcs[e] = index.setdefault(r, len(index))
    return arcs, len(index) + d.extra_unknots


def coloring_system(d: LinkDiagram, p: int) -> ColoringSystem:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    arcs, n_arcs = _arcs(d)
    rows = []
    for a, b, c, _ in d.crossings:
        row = [0] * n_arcs
        row[arcs[b]] += 2
        row[arcs[a]] -= 1
        row[arcs[c]] -= 1
        rows.append(tuple(x % p for x in row))
    return ColoringSystem(p, tuple(rows), n_arcs, arcs)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def count_colorings(d: LinkDiagram, p: int) -> int:
    """Number of Fox p-colorings, ``p ** nullity``."""
    return p ** coloring_system(d, p).nullity()


def col3_jones_check(d: LinkDiagram) -> tuple[int, Fraction]:
    """Return ``(col_3(d), 3*|V(exp(i*pi/3))|^2)``; the two should agree.

    ``|V|^2`` is formed symbolically as ``V(A) * V(A^-1)`` (exponents then all
    divisible by 4, so it is a polynomial in ``t = A^-4``) and evaluated
    exactly at ``t = zeta``.
    """
    lhs = count_colorings(d, 3)
    v = jones(d)
    if v == EMPTY_LINK:
        return lhs, Fraction(1)
    sq = v * v.invert_variable("A")
    if any(e % 4 for (e,), _ in sq.items()):
        raise ArithmeticError("V(A)V(A^-1) has exponents not divisible by 4")
    in_t = LaurentPoly(("t",), {(-e // 4,): c for (e,), c in sq.items()})
    value = in_t.eval_zeta6()
    if not value.is_real():
        raise ArithmeticError("|V|^2 evaluated to a non-real number")
    return lhs, 3 * value.u
