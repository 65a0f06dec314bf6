"""Kauffman bracket, its writhe-normalized form, and the Jones polynomial.

Normalization is ``<unknot> = 1``; each additional circle contributes
``delta = -A^2 - A^-2``.  The A-smoothing of ``X(a,b,c,d)`` joins a-b and
c-d, the B-smoothing joins a-d and b-c.

Two strategies compute the same value:

``state_sum``
    all ``2^n`` states, loop counts by union-find in :mod:`skeinkit.kernels`
    (compiled when available).
``skein``
    one crossing at a time, splitting off disjoint pieces and memoizing on a
    relabeling-invariant key of each connected piece.
"""

from __future__ import annotations

__all__ = [
    "A",
    "DELTA",
    "EMPTY_LINK",
    "STRATEGIES",
    "bracket",
    "framed_invariant",
    "jones",
    "to_t",
    "canonical_key",
]

from functools import lru_cache
from typing import Sequence

from . import kernels
from .diagram import LinkDiagram, split_pieces, writhe, _join
from .poly import LaurentPoly

A = LaurentPoly.var("A")
DELTA = -A**2 - A**-2
ONE = LaurentPoly.const(1, ("A",))

#: Value reported for the link with no components (a formal generator only).
EMPTY_LINK = "empty"

STRATEGIES = ("state_sum", "skein")


def _reduce(p: LaurentPoly, modulus: int | None) -> LaurentPoly:
    return p if modulus is None else p.mod(modulus)


def _delta_power(k: int, modulus: int | None) -> LaurentPoly:
    return _reduce(DELTA**k, modulus)


def bracket(d: LinkDiagram, strategy: str = "state_sum", *, order: Sequence[int] | None = None,
            modulus: int | None = None, kernel=None):
    """Kauffman bracket of ``d`` as a polynomial in ``A``.

    ``order`` (skein strategy only) fixes the sequence in which crossings are
    resolved, given as crossing indices; memoization is bypassed so the full
    resolution tree is expanded in that order.  ``modulus`` reduces all
    coefficients mod m at every step.  Returns :data:`EMPTY_LINK` for the
    empty diagram.
    """
    if d.is_empty():
        return EMPTY_LINK
    if strategy == "state_sum":
        return _state_sum(d.crossings, d.extra_unknots, modulus, kernel or kernels.backend)
    if strategy in ("skein", "skein_recursion"):
        if order is not None:
            if sorted(order) != list(range(d.n_crossings)):
                raise ValueError("order must be a permutation of the crossing indices")
            rank = {c: r for r, c in enumerate(order)}
            items = [(t, rank[i]) for i, t in enumerate(d.crossings)]
            return _ordered_value(items, d.extra_unknots, modulus)
        return _skein_value([tuple(t) for t in d.crossings], d.extra_unknots, modulus)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


# -- state sum ----------------------------------------------------------------

def _state_sum(crossings, extra: int, modulus, kernel) -> LaurentPoly:
    n = len(crossings)
    if n == 0:
        return _delta_power(extra - 1, modulus)
    index: dict[int, int] = {}
    for t in crossings:
        for e in t:
            index.setdefault(e, len(index))
    relabeled = [tuple(index[e] for e in t) for t in crossings]
    hist = kernel.state_histogram(relabeled, len(index))
    total = LaurentPoly(("A",))
    for n_a, row in enumerate(hist):
        by_loops = {}
        for loops, count in enumerate(row):
            if count:
                by_loops[loops + extra - 1] = count
        if not by_loops:
            continue
        part = LaurentPoly(("A",))
        for k, count in by_loops.items():
            part = _reduce(part + _delta_power(k, modulus) * count, modulus)
        total = _reduce(total + part * A**(2 * n_a - n), modulus)
    return total


# -- skein recursion ----------------------------------------------------------

def _a_pairs(t):
    return (t[0], t[1]), (t[2], t[3])


def _b_pairs(t):
    return (t[0], t[3]), (t[1], t[2])


def canonical_key(crossings: Sequence[Sequence[int]]) -> tuple:
    """Relabeling-invariant key of a connected unoriented diagram.

    Labels are reassigned by walking strands straight through crossings from
    every possible starting (crossing, position); each crossing is stored up
    to its half-turn symmetry and the lexicographically least sorted tuple
    list wins.  Equal keys mean identical diagrams up to relabeling.
    """
    crossings = [tuple(t) for t in crossings]
    n = len(crossings)
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, t in enumerate(crossings):
        for p, e in enumerate(t):
            occ.setdefault(e, []).append((i, p))
    other = {}
    for places in occ.values():
        p1, p2 = places
        other[p1] = p2
        other[p2] = p1

    best = None
    for ci in range(n):
        for p in range(4):
            new: dict[tuple[int, int], int] = {}
            seen_order = [ci]
            seen = {ci}
            start = (ci, p)
            counter = 0
            while True:
                dep = start
                while True:
                    counter += 1
                    arr = other[dep]
                    new[dep] = new[arr] = counter
                    j = arr[0]
                    if j not in seen:
                        seen.add(j)
                        seen_order.append(j)
                    dep = (j, (arr[1] + 2) % 4)
                    if dep == start or dep in new:
                        break
                start = None
                for j in seen_order:
                    for q in range(4):
                        if (j, q) not in new:
                            start = (j, q)
                            break
                    if start:
                        break
                if start is None:
                    break
            rows = []
            for i in range(n):
                t = tuple(new[(i, q)] for q in range(4))
                rows.append(min(t, t[2:] + t[:2]))
            key = tuple(sorted(rows))
            if best is None or key < best:
                best = key
    return best


def _skein_value(crossings: list, loops: int, modulus) -> LaurentPoly:
    pieces = split_pieces(crossings)
    result = _delta_power(len(pieces) + loops - 1, modulus)
    for piece in pieces:
        key = canonical_key([crossings[i] for i in piece])
        result = _reduce(result * _piece_value(key, modulus), modulus)
    return result


@lru_cache(maxsize=None)
def _piece_value(key: tuple, modulus) -> LaurentPoly:
    crossings = list(key)
    t = crossings[0]
    rest_a, _, loops_a = _join(crossings, 0, _a_pairs(t))
    rest_b, _, loops_b = _join(crossings, 0, _b_pairs(t))
    value = A * _skein_value(rest_a, loops_a, modulus) + A**-1 * _skein_value(rest_b, loops_b, modulus)
    return _reduce(value, modulus)


def _ordered_value(items: list, loops: int, modulus) -> LaurentPoly:
    """Full resolution tree, always smoothing the lowest-ranked crossing first."""
    if not items:
        return _delta_power(loops - 1, modulus)
    crossings = [t for t, _ in items]
    i = min(range(len(items)), key=lambda j: items[j][1])
    t = crossings[i]
    out = LaurentPoly(("A",))
    for coeff, pairs in ((A, _a_pairs(t)), (A**-1, _b_pairs(t))):
        rest, idx, new_loops = _join(crossings, i, pairs)
        sub = [(rest[k], items[j][1]) for k, j in enumerate(idx)]
        out = _reduce(out + coeff * _ordered_value(sub, loops + new_loops, modulus), modulus)
    return out


# -- normalizations -----------------------------------------------------------

def framed_invariant(d: LinkDiagram, strategy: str = "state_sum"):
    """``(-A^3)^(-writhe) * <d>``; invariant under all Reidemeister moves."""
    b = bracket(d, strategy)
    if b == EMPTY_LINK:
        return b
    w = writhe(d)
    return b * LaurentPoly.monomial(("A",), (-3 * w,), (-1) ** (w % 2))


def jones(d: LinkDiagram, strategy: str = "state_sum"):
    """Jones polynomial in ``A`` (read at ``t = A^-4``); see :func:`to_t`."""
    return framed_invariant(d, strategy)


def to_t(p: LaurentPoly) -> LaurentPoly | None:
    """Rewrite a polynomial in ``A`` as one in ``t = A^-4``; None if impossible."""
    if p.is_zero():
        return LaurentPoly(("t",))
    if p.variables != ("A",) or any(e % 4 for (e,), _ in p.items()):
        return None
    return LaurentPoly(("t",), {(-e // 4,): c for (e,), c in p.items()})
