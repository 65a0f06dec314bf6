"""Temperley-Lieb algebra on crossingless matchings, tangles, annular closure.

Boundary points of a TL_n diagram are numbered around the rectangle:
bottom ``1..n`` left to right, then top ``n+1..2n`` right to left, so the
top point above bottom position ``j`` is ``2n+1-j``.  With this order a
matching is planar iff no two pairs interleave.

``tl_multiply(m1, m2)`` stacks ``m1`` on top of ``m2``.
"""

from __future__ import annotations

__all__ = [
    "Matching",
    "TlElement",
    "Tangle",
    "enumerate_matchings",
    "tl_multiply",
    "tl_generator",
    "tl_identity",
    "tl_embed",
    "tl_cap",
    "braid_tangle",
    "tangle_to_tl",
    "annular_closure",
    "count_annular_connections",
    "parse_matching",
]

import ast
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .bracket import A, DELTA
from .poly import LaurentPoly

_ANNULAR_VARS = ("A", "alpha")


@dataclass(frozen=True)
class Matching:
    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        points = sorted(x for p in pairs for x in p)
        if points != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"pairs {pairs} do not cover 1..{2 * self.n} exactly once")
        for i, (a, b) in enumerate(pairs):
            for c, d in pairs[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    raise ValueError(f"pairs {(a, b)} and {(c, d)} cross")

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def top(self, j: int) -> int:
        return 2 * self.n + 1 - j

    def __str__(self):
        return "[" + ",".join(f"({a},{b})" for a, b in self.pairs) + "]"


def parse_matching(text: str, n: int | None = None) -> Matching:
    """Parse ``[(1,2),(3,6),(4,5)]``."""
    try:
        pairs = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise ValueError(f"cannot parse matching {text!r}") from exc
    pairs = [tuple(p) for p in pairs]
    if any(len(p) != 2 for p in pairs):
        raise ValueError("matching entries must be pairs")
    return Matching(len(pairs) if n is None else n, tuple(pairs))


def tl_identity(n: int) -> Matching:
    return Matching(n, tuple((j, 2 * n + 1 - j) for j in range(1, n + 1)))


def tl_generator(n: int, i: int) -> Matching:
    """The cup-cap generator ``e_i`` joining positions i, i+1 at bottom and top."""
    if not 1 <= i < n:
        raise ValueError(f"e_{i} needs 1 <= i < {n}")
    pairs = [(i, i + 1), (2 * n + 1 - i, 2 * n - i)]
    pairs += [(j, 2 * n + 1 - j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return Matching(n, tuple(pairs))


def enumerate_matchings(n: int) -> list[Matching]:
    """All noncrossing perfect matchings of ``1..2n`` (Catalan many)."""
    return [Matching(n, p) for p in _noncrossing(1, 2 * n)]


@lru_cache(maxsize=None)
def _noncrossing(lo: int, hi: int) -> tuple:
    if lo > hi:
        return ((),)
    out = []
    for k in range(lo + 1, hi + 1, 2):
        for inner in _noncrossing(lo + 1, k - 1):
            for outer in _noncrossing(k + 1, hi):
                out.append(((lo, k),) + inner + outer)
    return tuple(out)


class TlElement:
    """Finite combination of matchings with Laurent coefficients in ``A``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Matching, LaurentPoly] | None = None):
        self.n = n
        clean = {}
        for m, c in (terms or {}).items():
            if m.n != n:
                raise ValueError("strand count mismatch")
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c, ("A",))
            if m in clean:
                c = clean[m] + c
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean

    @classmethod
    def basis(cls, m: Matching, coeff=1) -> "TlElement":
        return cls(m.n, {m: coeff})

    def __add__(self, other: "TlElement") -> "TlElement":
        if self.n != other.n:
            raise ValueError("strand count mismatch")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TlElement(self.n, out)

    def __neg__(self):
        return TlElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TlElement):
            if self.n != other.n:
                raise ValueError("strand count mismatch")
            out = TlElement(self.n)
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    out = out + tl_multiply(m1, m2).scale(c1 * c2)
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TlElement":
        return TlElement(self.n, {m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Matching):
            other = TlElement.basis(other)
        if not isinstance(other, TlElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_json(self) -> list[dict]:
        return [{"matching": [list(p) for p in m.pairs], "coeff": c.to_json()}
                for m, c in sorted(self.terms.items(), key=lambda kv: kv[0].pairs)]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items(), key=lambda kv: kv[0].pairs))

    __repr__ = __str__


def tl_multiply(m1: Matching, m2: Matching) -> TlElement:
    """Stack ``m1`` above ``m2``; each closed loop contributes ``delta``."""
    if m1.n != m2.n:
        raise ValueError(f"strand counts differ: {m1.n} vs {m2.n}")
    n = m1.n
    # nodes: ("B", j) bottom of m2, ("T", j) top of m1, ("M", j) the glued middle row
    lower, upper = {}, {}
    for a, b in m2.pairs:
        x = ("B", a) if a <= n else ("M", 2 * n + 1 - a)
        y = ("B", b) if b <= n else ("M", 2 * n + 1 - b)
        lower[x], lower[y] = y, x
    for a, b in m1.pairs:
        x = ("M", a) if a <= n else ("T", 2 * n + 1 - a)
        y = ("M", b) if b <= n else ("T", 2 * n + 1 - b)
        upper[x], upper[y] = y, x

    def point(node):
        return node[1] if node[0] == "B" else 2 * n + 1 - node[1]

    visited_mid = set()
    pairs = []
    done = set()
    for start in [("B", j) for j in range(1, n + 1)] + [("T", j) for j in range(1, n + 1)]:
        if start in done:
            continue
        graph = lower if start[0] == "B" else upper
        node = graph[start]
        while node[0] == "M":
            visited_mid.add(node[1])
            graph = upper if graph is lower else lower
            node = graph[node]
        done.update((start, node))
        pairs.append((point(start), point(node)))
    loops = 0
    for j in range(1, n + 1):
        if j in visited_mid:
            continue
        loops += 1
        node, graph = ("M", j), lower
        while True:
            visited_mid.add(node[1])
            node = graph[node]
            graph = upper if graph is lower else lower
            if node == ("M", j):
                break
    return TlElement(n, {Matching(n, tuple(pairs)): DELTA**loops})


def tl_embed(x: "Matching | TlElement") -> TlElement:
    """TL_n -> TL_{n+1}: add a vertical strand on the right."""
    x = TlElement.basis(x) if isinstance(x, Matching) else x
    n = x.n
    out = {}
    for m, c in x.terms.items():
        pairs = [tuple(p if p <= n else p + 2 for p in pr) for pr in m.pairs]
        pairs.append((n + 1, n + 2))
        out[Matching(n + 1, tuple(pairs))] = c
    return TlElement(n + 1, out)


def tl_cap(x: "Matching | TlElement") -> TlElement:
    """TL_n -> TL_{n-1}: join the rightmost bottom and top points around the side."""
    x = TlElement.basis(x) if isinstance(x, Matching) else x
    n = x.n
    if n < 1:
        raise ValueError("nothing to cap in TL_0")
    out = TlElement(n - 1)
    for m, c in x.terms.items():
        partner = m.partner()
        bot, top = n, n + 1
        if partner[bot] == top:
            rest = [p for p in m.pairs if p != (bot, top)]
            coeff = c * DELTA
        else:
            u, w = partner[bot], partner[top]
            rest = [p for p in m.pairs if bot not in p and top not in p] + [(u, w)]
            coeff = c
        shifted = [tuple(p if p < n else p - 2 for p in pr) for pr in rest]
        out = out + TlElement(n - 1, {Matching(n - 1, tuple(shifted)): coeff})
    return out


@dataclass(frozen=True)
class Tangle:
    """A planar (n, n)-tangle.

    ``crossings`` are PD-style 4-tuples (counterclockwise, under-strand at
    positions 0 and 2); ``boundary`` gives the edge label at each boundary
    point 1..2n in the numbering of :class:`Matching`.
    """

    n: int
    crossings: tuple[tuple[int, int, int, int], ...]
    boundary: tuple[int, ...]

    def __post_init__(self):
        if len(self.boundary) != 2 * self.n:
            raise ValueError(f"need {2 * self.n} boundary labels")
        count: dict[int, int] = {}
        for t in self.crossings:
            if len(t) != 4:
                raise ValueError("crossings must be 4-tuples")
            for e in t:
                count[e] = count.get(e, 0) + 1
        for e in self.boundary:
            count[e] = count.get(e, 0) + 1
        bad = sorted(e for e, k in count.items() if k != 2)
        if bad:
            raise ValueError(f"labels {bad} do not occur exactly twice")


def braid_tangle(n: int, word: Sequence[int]) -> Tangle:
    """Tangle of a braid word (``+i`` / ``-i`` for sigma_i^{+-1}); ``word[0]`` is on top.

    Strands run upward.  ``sigma_i`` is the positive crossing, whose
    A-smoothing is the identity.
    """
    bottom = list(range(1, n + 1))
    current = list(bottom)
    fresh = n + 1
    crossings = []
    for g in reversed(word):
        i = abs(g)
        if not 1 <= i < n or g == 0:
            raise ValueError(f"invalid braid letter {g} for {n} strands")
        sw, se = current[i - 1], current[i]
        ne, nw = fresh, fresh + 1
        fresh += 2
        if g > 0:
            crossings.append((se, ne, nw, sw))
        else:
            crossings.append((sw, se, ne, nw))
        current[i - 1], current[i] = nw, ne
    boundary = tuple(bottom) + tuple(current[2 * n - k] for k in range(n + 1, 2 * n + 1))
    return Tangle(n, tuple(crossings), boundary)


def tangle_to_tl(t: Tangle) -> TlElement:
    """Resolve every crossing by the bracket relation into the matching basis."""
    labels: dict[int, int] = {}
    for e in list(t.boundary) + [e for c in t.crossings for e in c]:
        labels.setdefault(e, len(labels))
    cr = [tuple(labels[e] for e in c) for c in t.crossings]
    bnd = [labels[e] for e in t.boundary]
    n_cr = len(cr)
    acc: dict[tuple[Matching, int, int], int] = {}
    for mask in range(1 << n_cr):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        n_a = 0
        for i, (a, b, c, d) in enumerate(cr):
            if (mask >> i) & 1:
                pairs = ((a, d), (b, c))
            else:
                pairs = ((a, b), (c, d))
                n_a += 1
            for x, y in pairs:
                parent[find(x)] = find(y)
        ends: dict[int, list[int]] = {}
        for k, e in enumerate(bnd):
            ends.setdefault(find(e), []).append(k + 1)
        roots = {find(x) for x in range(len(labels))}
        loops = len(roots - set(ends))
        m = Matching(t.n, tuple(tuple(v) for v in ends.values()))
        key = (m, 2 * n_a - n_cr, loops)
        acc[key] = acc.get(key, 0) + 1
    out = TlElement(t.n)
    for (m, a_exp, loops), count in acc.items():
        out = out + TlElement(t.n, {m: A**a_exp * DELTA**loops * count})
    return out


def annular_closure(x: "Matching | TlElement") -> LaurentPoly:
    """Close top j to bottom j around the annulus; value in ``A`` and ``alpha``.

    A loop winding around the core (nonzero signed count of passes through
    the closure arcs) contributes ``alpha``; a contractible loop ``delta``.
    """
    x = TlElement.basis(x) if isinstance(x, Matching) else x
    alpha = LaurentPoly.var("alpha", _ANNULAR_VARS)
    delta = DELTA.substitute({"A": LaurentPoly.var("A", _ANNULAR_VARS)}, _ANNULAR_VARS)
    total = LaurentPoly(_ANNULAR_VARS)
    n = x.n
    for m, c in x.terms.items():
        partner = m.partner()
        seen = set()
        value = LaurentPoly.const(1, _ANNULAR_VARS)
        for p in range(1, 2 * n + 1):
            if p in seen:
                continue
            winding = 0
            q = p
            while True:
                seen.add(q)
                r = partner[q]
                seen.add(r)
                # closure arc: top point r > n goes down to bottom 2n+1-r, and back
                winding += 1 if r > n else -1
                q = 2 * n + 1 - r
                if q == p:
                    break
            value = value * (alpha if winding else delta)
        total = total + value * c.substitute({"A": LaurentPoly.var("A", _ANNULAR_VARS)}, _ANNULAR_VARS)
    return total


def _regions(m: Matching) -> int:
    """Number of disk regions cut out by the chords of ``m``."""
    size = 2 * m.n
    if size == 0:
        return 1
    partner = m.partner()
    seen = set()
    cycles = 0
    for p in range(1, size + 1):
        if p in seen:
            continue
        cycles += 1
        q = p
        while q not in seen:
            seen.add(q)
            q = partner[q] % size + 1
    return cycles


def count_annular_connections(n: int) -> int:
    """Crossingless connections of 2n points in the annulus.

    Counted as disk connections times the number of regions each leaves for
    the hole.
    """
    return sum(_regions(m) for m in enumerate_matchings(n))
