"""Planar link diagrams given as PD codes.

Conventions
-----------
``X(a,b,c,d)`` lists the four edge labels around a crossing counterclockwise,
starting at the incoming under-edge ``a``; the under-strand exits at ``c``.
Labels run consecutively along each oriented component, so the over-strand
direction is read off from label succession (or, for components of length
two or less, propagated from the under-passes).  A crossing is positive when
the over-strand runs ``d -> b`` and negative when it runs ``b -> d``; with
this rule the code ``X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)`` has writhe -3.

Crossing-free circles cannot appear in a PD tuple list and are carried as an
``extra_unknots`` count.
"""

from __future__ import annotations

__all__ = [
    "PdCode",
    "PdSyntaxError",
    "DiagramError",
    "LinkDiagram",
    "OrientedDiagram",
    "parse_pd",
    "parse_link_line",
    "render",
    "render_line",
    "validate",
    "diagram",
    "standardize",
    "writhe",
    "linking_matrix",
    "mirror",
    "disjoint_union",
    "switch_crossing",
    "smooth_crossing",
]

import re
from dataclasses import dataclass
from typing import Sequence

Crossing = tuple[int, int, int, int]


class PdSyntaxError(ValueError):
    """Malformed PD text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DiagramError(ValueError):
    """A syntactically valid PD code that is not a valid oriented diagram."""


@dataclass(frozen=True)
class PdCode:
    crossings: tuple[Crossing, ...] = ()

    def __len__(self):
        return len(self.crossings)


# -- text I/O ---------------------------------------------------------------

def parse_pd(text: str) -> PdCode:
    """Parse ``X(a,b,c,d),X(...),...``; whitespace is ignored."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n or text[pos] != ch:
            found = repr(text[pos]) if pos < n else "end of input"
            raise PdSyntaxError(f"expected {ch!r}, found {found}", pos)
        pos += 1

    crossings = []
    skip()
    if pos == n:
        return PdCode(())
    while True:
        skip()
        start = pos
        expect("X")
        expect("(")
        labels = []
        while True:
            skip()
            m = re.compile(r"\d+").match(text, pos)
            if not m:
                end = pos
                while end < n and text[end] not in ",)" and not text[end].isspace():
                    end += 1
                raise PdSyntaxError(f"non-integer label {text[pos:end]!r}", pos)
            labels.append(int(m.group()))
            pos = m.end()
            skip()
            if pos < n and text[pos] == ",":
                pos += 1
                continue
            expect(")")
            break
        if len(labels) != 4:
            raise PdSyntaxError(f"crossing has {len(labels)} labels, expected 4", start)
        crossings.append(tuple(labels))
        skip()
        if pos == n:
            break
        expect(",")
    return PdCode(tuple(crossings))


_UNKNOT_PREFIX = re.compile(r"\s*U(\d+)\s*;")


def parse_link_line(line: str) -> tuple[PdCode, int] | None:
    """Parse one line of a link file; returns None for blank/comment lines.

    Format: optional ``U<k>;`` prefix (k crossing-free circles) followed by
    a PD code; ``#`` starts a comment.
    """
    text = line.split("#", 1)[0]
    if not text.strip():
        return None
    extra = 0
    m = _UNKNOT_PREFIX.match(text)
    if m:
        extra = int(m.group(1))
        offset = m.end()
        try:
            code = parse_pd(text[offset:])
        except PdSyntaxError as exc:
            raise PdSyntaxError(str(exc).rsplit(" at position", 1)[0], exc.position + offset) from None
    else:
        code = parse_pd(text)
    return code, extra


def render(d: "PdCode | LinkDiagram") -> str:
    return ",".join("X({},{},{},{})".format(*t) for t in d.crossings)


def render_line(d: "LinkDiagram") -> str:
    body = render(d)
    if d.extra_unknots:
        return f"U{d.extra_unknots};{body}"
    return body


# -- the diagram type -------------------------------------------------------

@dataclass(frozen=True)
class LinkDiagram:
    """Validated oriented PD diagram.

    ``components`` lists each component's edge labels in orientation order;
    crossing-free circles are counted in ``extra_unknots`` only.
    """

    crossings: tuple[Crossing, ...]
    signs: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    extra_unknots: int = 0

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components) + self.extra_unknots

    @property
    def code(self) -> PdCode:
        return PdCode(self.crossings)

    def is_empty(self) -> bool:
        return self.n_components == 0

    def over_in(self, i: int) -> int:
        return _over_in(self.crossings[i], self.signs[i])

    def over_out(self, i: int) -> int:
        return _over_out(self.crossings[i], self.signs[i])

    def component_of(self) -> dict[int, int]:
        return {e: k for k, comp in enumerate(self.components) for e in comp}

    def __str__(self):
        return render_line(self) or "U0;"


OrientedDiagram = LinkDiagram


def _over_in(t: Crossing, sign: int) -> int:
    return t[3] if sign > 0 else t[1]


def _over_out(t: Crossing, sign: int) -> int:
    return t[1] if sign > 0 else t[3]


def validate(code: PdCode, extra_unknots: int = 0) -> LinkDiagram:
    """Check a PD code and derive components, orientation and crossing signs."""
    if extra_unknots < 0:
        raise DiagramError("extra_unknots must be nonnegative")
    crossings = tuple(tuple(t) for t in code.crossings)
    n = len(crossings)
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, t in enumerate(crossings):
        if len(t) != 4:
            raise DiagramError(f"crossing {i} has arity {len(t)}")
        for p, e in enumerate(t):
            occ.setdefault(e, []).append((i, p))
    for e, places in sorted(occ.items()):
        if len(places) != 2:
            raise DiagramError(f"label {e} appears {len(places)} times, expected 2")
    if set(occ) != set(range(1, 2 * n + 1)):
        extra = sorted(set(occ) - set(range(1, 2 * n + 1)))
        missing = sorted(set(range(1, 2 * n + 1)) - set(occ))
        raise DiagramError(f"labels must be exactly 1..{2 * n}; unexpected {extra}, missing {missing}")

    # straight-through strands partition the labels into components
    parent = {e: e for e in occ}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in crossings:
        for x, y in ((t[0], t[2]), (t[1], t[3])):
            parent[find(x)] = find(y)
    blocks: dict[int, list[int]] = {}
    for e in occ:
        blocks.setdefault(find(e), []).append(e)
    succ: dict[int, int] = {}
    comp_len: dict[int, int] = {}
    for labels in blocks.values():
        lo, hi = min(labels), max(labels)
        if hi - lo + 1 != len(labels):
            raise DiagramError(f"component labels {sorted(labels)} are not a consecutive block")
        for e in labels:
            succ[e] = e + 1 if e < hi else lo
            comp_len[e] = len(labels)

    for i, (a, b, c, d) in enumerate(crossings):
        if succ[a] != c:
            raise DiagramError(f"crossing {i}: under-strand {a}->{c} is not consecutive")
        if succ[b] != d and succ[d] != b:
            raise DiagramError(f"crossing {i}: over-strand labels {b},{d} are not consecutive")

    # role[(i, p)] is +1 where the edge enters crossing i, -1 where it leaves
    role: dict[tuple[int, int], int] = {}
    for i in range(n):
        role[(i, 0)] = 1
        role[(i, 2)] = -1
    other_end = {}
    for e, (p1, p2) in occ.items():
        other_end[p1] = p2
        other_end[p2] = p1

    def propagate():
        changed = True
        while changed:
            changed = False
            for (i, p), r in list(role.items()):
                q = other_end[(i, p)]
                if q not in role:
                    role[q] = -r
                    changed = True
                elif role[q] != -r:
                    raise DiagramError(f"inconsistent orientation at crossing {i}")
                if p in (1, 3):
                    opp = (i, 4 - p)
                    if opp not in role:
                        role[opp] = -r
                        changed = True
                    elif role[opp] != -r:
                        raise DiagramError(f"inconsistent orientation at crossing {i}")

    propagate()
    while any((i, 1) not in role for i in range(n)):
        progress = False
        for i, (a, b, c, d) in enumerate(crossings):
            if (i, 1) in role or comp_len[b] <= 2:
                continue
            role[(i, 1)] = 1 if succ[b] == d else -1
            progress = True
            break
        if not progress:
            bad = next(i for i in range(n) if (i, 1) not in role)
            raise DiagramError(f"crossing {bad}: undecidable crossing sign")
        propagate()

    signs = []
    for i, (a, b, c, d) in enumerate(crossings):
        o_in, o_out = (b, d) if role[(i, 1)] == 1 else (d, b)
        if succ[o_in] != o_out:
            raise DiagramError(f"crossing {i}: over-strand orientation contradicts labeling")
        signs.append(1 if o_in == d else -1)

    comps = []
    for labels in sorted(blocks.values(), key=min):
        lo = min(labels)
        seq = [lo]
        while succ[seq[-1]] != lo:
            seq.append(succ[seq[-1]])
        comps.append(tuple(seq))
    return LinkDiagram(crossings, tuple(signs), tuple(comps), extra_unknots)


def diagram(text: str) -> LinkDiagram:
    """Parse and validate one link-file line (``U<k>;`` prefix allowed)."""
    parsed = parse_link_line(text)
    if parsed is None:
        return LinkDiagram((), (), (), 0)
    return validate(*parsed)


def standardize(crossings: Sequence[Sequence[int]], signs: Sequence[int], extra_unknots: int = 0) -> LinkDiagram:
    """Relabel an oriented crossing list with arbitrary labels into standard PD form.

    Each crossing keeps its incoming under-edge first; ``signs`` fixes the
    over-strand direction.  Components are numbered in order of first
    appearance scanning the crossing list.
    """
    crossings = [tuple(t) for t in crossings]
    nxt: dict[int, int] = {}
    for t, s in zip(crossings, signs):
        for x, y in ((t[0], t[2]), (_over_in(t, s), _over_out(t, s))):
            if x in nxt:
                raise DiagramError(f"edge {x} enters two crossings")
            nxt[x] = y
    if sorted(nxt.values()) != sorted(nxt):
        raise DiagramError("edge labels do not form closed components")
    new: dict[int, int] = {}
    comps = []
    for t in crossings:
        for e in t:
            if e in new:
                continue
            comp = []
            x = e
            while x not in new:
                new[x] = len(new) + 1
                comp.append(new[x])
                x = nxt[x]
            comps.append(tuple(comp))
    relabeled = tuple(tuple(new[e] for e in t) for t in crossings)
    return LinkDiagram(relabeled, tuple(signs), tuple(comps), extra_unknots)


# -- invariant-free queries -------------------------------------------------

def writhe(d: LinkDiagram) -> int:
    """Tait number: sum of crossing signs."""
    return sum(d.signs)


def linking_matrix(d: LinkDiagram) -> list[list[int]]:
    """Pairwise linking numbers; components in ``d.components`` order, then free circles."""
    k = d.n_components
    m = [[0] * k for _ in range(k)]
    comp = d.component_of()
    for i, t in enumerate(d.crossings):
        ci, cj = comp[t[0]], comp[d.over_in(i)]
        if ci != cj:
            m[ci][cj] += d.signs[i]
            m[cj][ci] += d.signs[i]
    for row in m:
        for j, v in enumerate(row):
            if v % 2:
                raise DiagramError("odd crossing count between two components")
            row[j] = v // 2
    return m


def _switched(t: Crossing, sign: int) -> tuple[Crossing, int]:
    a, b, c, d = t
    if sign < 0:
        return (b, c, d, a), 1
    return (d, a, b, c), -1


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Exchange over and under at every crossing.

    The tuple is rotated by one step and, when needed, by two more so that
    the incoming under-edge stays first.
    """
    pairs = [_switched(t, s) for t, s in zip(d.crossings, d.signs)]
    return LinkDiagram(tuple(t for t, _ in pairs), tuple(s for _, s in pairs), d.components, d.extra_unknots)


def switch_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    t, s = _switched(d.crossings[i], d.signs[i])
    crossings = d.crossings[:i] + (t,) + d.crossings[i + 1:]
    signs = d.signs[:i] + (s,) + d.signs[i + 1:]
    return LinkDiagram(crossings, signs, d.components, d.extra_unknots)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = d1.edge_count
    crossings = d1.crossings + tuple(tuple(e + shift for e in t) for t in d2.crossings)
    comps = d1.components + tuple(tuple(e + shift for e in c) for c in d2.components)
    return LinkDiagram(crossings, d1.signs + d2.signs, comps, d1.extra_unknots + d2.extra_unknots)


# -- local resolutions on raw crossing lists ----------------------------------

def _join(crossings: Sequence[Crossing], i: int, pairs) -> tuple[list[Crossing], list[int], int]:
    """Delete crossing ``i`` and splice the given label pairs.

    Returns the remaining crossings, the indices they came from, and the
    number of closed crossing-free loops created.
    """
    parent: dict[int, int] = {}

    def find(x):
        while x in parent:
            x = parent[x]
        return x

    loops = 0
    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx == ry:
            loops += 1
        else:
            parent[ry] = rx
    idx = [j for j in range(len(crossings)) if j != i]
    rest = [tuple(find(e) for e in crossings[j]) for j in idx]
    return rest, idx, loops


def smooth_oriented(crossings, signs, i):
    """Oriented (L0) smoothing of crossing ``i`` on a raw crossing list."""
    t, s = crossings[i], signs[i]
    rest, idx, loops = _join(crossings, i, ((t[0], _over_out(t, s)), (_over_in(t, s), t[2])))
    return rest, [signs[j] for j in idx], loops


def smooth_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    """Oriented smoothing at crossing ``i``, relabeled into standard form."""
    rest, signs, loops = smooth_oriented(d.crossings, d.signs, i)
    return standardize(rest, signs, d.extra_unknots + loops)


def split_pieces(crossings: Sequence[Sequence[int]]) -> list[list[int]]:
    """Group crossing indices into connected pieces (sharing an edge label)."""
    owner: dict[int, int] = {}
    parent = list(range(len(crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, t in enumerate(crossings):
        for e in t:
            if e in owner:
                parent[find(i)] = find(owner[e])
            else:
                owner[e] = i
    groups: dict[int, list[int]] = {}
    for i in range(len(crossings)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())
