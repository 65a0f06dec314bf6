"""Homflypt polynomial by the descending-diagram skein tree.

Skein relation ``v^-1 P(L+) - v P(L-) = z P(L0)`` with ``P(unknot) = 1``,
so the trivial n-component link has value ``mu^(n-1)`` where
``mu = (v^-1 - v) z^-1``.

For a connected diagram, components are traversed in label order from their
first edge.  Every crossing first reached along its under-strand is switched
in turn; each switch contributes a smoothed diagram (one crossing fewer) to
the recursion, and the fully switched diagram is descending, i.e. a trivial
link.  Disjoint pieces are factored out and each piece is memoized on an
orientation-aware relabeling-invariant key.
"""

from __future__ import annotations

__all__ = [
    "V",
    "Z",
    "MU",
    "homflypt",
    "conway",
    "conway_coefficient",
    "jones_from_homflypt",
    "SingularSelection",
    "vassiliev_difference",
    "oriented_key",
]

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence, Union

from .bracket import EMPTY_LINK
from .diagram import (LinkDiagram, _over_in, _switched, smooth_oriented, split_pieces,
                      switch_crossing)
from .poly import LaurentPoly, exact_divide

_VZ = ("v", "z")
V = LaurentPoly.var("v", _VZ)
Z = LaurentPoly.var("z", _VZ)
MU = (V**-1 - V) * Z**-1


def homflypt(d: LinkDiagram):
    """Homflypt polynomial in ``v, z``; :data:`EMPTY_LINK` for the empty diagram."""
    if d.is_empty():
        return EMPTY_LINK
    return _value(list(d.crossings), list(d.signs), d.extra_unknots)


def _value(crossings: list, signs: list, loops: int) -> LaurentPoly:
    pieces = split_pieces(crossings)
    result = MU**(len(pieces) + loops - 1)
    for piece in pieces:
        result = result * _piece_value(oriented_key([crossings[i] for i in piece], [signs[i] for i in piece]))
    return result


def oriented_key(crossings: Sequence[Sequence[int]], signs: Sequence[int]) -> tuple:
    """Relabeling-invariant key of a connected oriented diagram.

    Labels are assigned along the orientation from every possible starting
    edge; later components start at the first unlabeled edge met scanning
    already visited crossings.  The least sorted ``(tuple, sign)`` list wins.
    Labels in the key run consecutively along each component.
    """
    crossings = [tuple(t) for t in crossings]
    nxt: dict[int, int] = {}
    head: dict[int, int] = {}
    for i, (t, s) in enumerate(zip(crossings, signs)):
        o_in = _over_in(t, s)
        nxt[t[0]] = t[2]
        nxt[o_in] = t[1] if o_in == t[3] else t[3]
        head[t[0]] = head[o_in] = i
    best = None
    for first in nxt:
        new: dict[int, int] = {}
        order: list[int] = []
        seen: set[int] = set()
        start = first
        while start is not None:
            e = start
            while e not in new:
                new[e] = len(new) + 1
                i = head[e]
                if i not in seen:
                    seen.add(i)
                    order.append(i)
                e = nxt[e]
            start = None
            for i in order:
                for e in crossings[i]:
                    if e not in new:
                        start = e
                        break
                if start is not None:
                    break
        key = tuple(sorted((tuple(new[e] for e in t), s) for t, s in zip(crossings, signs)))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def _piece_value(key: tuple) -> LaurentPoly:
    crossings = [t for t, _ in key]
    signs = [s for _, s in key]
    head: dict[int, tuple[int, bool]] = {}
    nxt: dict[int, int] = {}
    for i, (t, s) in enumerate(zip(crossings, signs)):
        o_in = _over_in(t, s)
        head[t[0]] = (i, True)
        head[o_in] = (i, False)
        nxt[t[0]] = t[2]
        nxt[o_in] = t[1] if o_in == t[3] else t[3]

    seen: set[int] = set()
    bad: list[int] = []
    for e in sorted(head):
        i, under = head[e]
        if i not in seen:
            seen.add(i)
            if under:
                bad.append(i)

    n_comp = 0
    visited: set[int] = set()
    for e in nxt:
        if e not in visited:
            n_comp += 1
            while e not in visited:
                visited.add(e)
                e = nxt[e]

    total = LaurentPoly(_VZ)
    coeff = LaurentPoly.const(1, _VZ)
    for i in bad:
        s = signs[i]
        rest, rest_signs, loops = smooth_oriented(crossings, signs, i)
        if s > 0:
            alpha, beta = V**2, V * Z
        else:
            alpha, beta = V**-2, -(V**-1) * Z
        total = total + coeff * beta * _value(rest, rest_signs, loops)
        coeff = coeff * alpha
        crossings[i], signs[i] = _switched(crossings[i], s)
    return total + coeff * MU**(n_comp - 1)


def conway(d: LinkDiagram):
    """Conway polynomial: Homflypt at ``v = 1``."""
    p = homflypt(d)
    if p == EMPTY_LINK:
        return p
    return p.substitute({"v": 1, "z": LaurentPoly.var("z")}, ("z",))


def conway_coefficient(k: int) -> Callable[[LinkDiagram], int]:
    """The invariant ``d -> [z^k] conway(d)``."""
    def inv(d: LinkDiagram) -> int:
        return conway(d).coefficient((k,))
    inv.__name__ = f"conway_coeff({k})"
    return inv


def jones_from_homflypt(d: LinkDiagram):
    """Homflypt at ``v = A^-4, z = A^-2 - A^2``, as a polynomial in ``A``."""
    p = homflypt(d)
    if p == EMPTY_LINK:
        return p
    a = LaurentPoly.var("A")
    zval = a**-2 - a**2
    k = max(0, -min(p.exponents("z"), default=0))
    cleared = p * Z**k
    num = cleared.substitute({"v": a**-4, "z": zval}, ("A",))
    return exact_divide(num, zval**k)


@dataclass(frozen=True)
class SingularSelection:
    """A diagram with a chosen set of crossings treated as double points."""

    diagram: LinkDiagram
    crossings: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "crossings", frozenset(self.crossings))
        bad = [i for i in self.crossings if not 0 <= i < self.diagram.n_crossings]
        if bad:
            raise ValueError(f"crossings {bad} not in diagram")


Invariant = Union[str, Callable[[LinkDiagram], object]]


def _resolve_invariant(inv: Invariant) -> Callable[[LinkDiagram], object]:
    if callable(inv):
        return inv
    if inv == "homflypt":
        return homflypt
    if inv.startswith("conway_coeff(") and inv.endswith(")"):
        return conway_coefficient(int(inv[len("conway_coeff("):-1]))
    raise ValueError(f"unknown invariant {inv!r}")


def vassiliev_difference(sel: SingularSelection, inv: Invariant):
    """Alternating sum of ``inv`` over all switchings of the selected crossings.

    ``sum over T subset S of (-1)^|T| inv(d with T switched)``; with ``S``
    empty this is ``inv(d)``.
    """
    fn = _resolve_invariant(inv)
    chosen = sorted(sel.crossings)
    total = None
    for r in range(len(chosen) + 1):
        for subset in combinations(chosen, r):
            d = sel.diagram
            for i in subset:
                d = switch_crossing(d, i)
            val = fn(d)
            term = val if r % 2 == 0 else -val
            total = term if total is None else total + term
    return total
