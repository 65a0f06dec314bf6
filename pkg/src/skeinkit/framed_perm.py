"""Framed permutations W_n(inf) = Z^n x| S_n and the type-A Hecke algebra.

A framed permutation is a pair (weights, perm).  Permutations are 0-indexed
tuples with ``perm[i]`` the image of strand ``i``; the product is

    (w1, p1) * (w2, p2) = (w1 + p1(w2), p1 o p2),   p(w)[i] = w[p^-1(i)].

Generators: ``t`` puts weight 1 on strand 1, ``s_i`` swaps strands i, i+1.
Words are sequences of letters ``("t", k)`` (``t^k``) and ``("s", i)``;
as text, ``"s3 s2 s1 t s1 s2 s3"`` or ``"t^-2 s1"``.
"""

from __future__ import annotations

__all__ = [
    "FramedPermutation",
    "fp_mul",
    "fp_from_word",
    "fp_normal_word",
    "enumerate_normal_words",
    "parse_word",
    "format_word",
    "HeckeElement",
    "hecke_mul",
    "hecke_generator",
    "hecke_from_word",
    "permutation_length",
    "reduced_word",
    "bounded_elements",
]

import re
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .poly import LaurentPoly

Letter = tuple[str, int]


@dataclass(frozen=True)
class FramedPermutation:
    weights: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.weights) != len(self.perm):
            raise ValueError("weights and permutation sizes differ")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "FramedPermutation":
        return cls((0,) * n, tuple(range(n)))

    @classmethod
    def t(cls, n: int, k: int = 1) -> "FramedPermutation":
        return cls((k,) + (0,) * (n - 1), tuple(range(n)))

    @classmethod
    def s(cls, n: int, i: int) -> "FramedPermutation":
        if not 1 <= i < n:
            raise ValueError(f"s_{i} needs 1 <= i < {n}")
        p = list(range(n))
        p[i - 1], p[i] = p[i], p[i - 1]
        return cls((0,) * n, tuple(p))

    @classmethod
    def v(cls, n: int, i: int) -> "FramedPermutation":
        """One framing twist on strand ``i+1`` (``v_0 = t``)."""
        w = [0] * n
        w[i] = 1
        return cls(tuple(w), tuple(range(n)))

    def __mul__(self, other: "FramedPermutation") -> "FramedPermutation":
        return fp_mul(self, other)

    def inverse(self) -> "FramedPermutation":
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        # (w, p)^-1 = (-p^-1(w), p^-1)
        w = tuple(-self.weights[self.perm[i]] for i in range(self.n))
        return FramedPermutation(w, tuple(inv))

    def __pow__(self, k: int) -> "FramedPermutation":
        base = self if k >= 0 else self.inverse()
        out = FramedPermutation.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out


def _act(p: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, j in enumerate(p):
        out[j] = w[i]
    return tuple(out)


def fp_mul(a: FramedPermutation, b: FramedPermutation) -> FramedPermutation:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    moved = _act(a.perm, b.weights)
    return FramedPermutation(tuple(x + y for x, y in zip(a.weights, moved)),
                             tuple(a.perm[b.perm[i]] for i in range(a.n)))


_TOKEN = re.compile(r"(t)(?:\^\{?(-?\d+)\}?)?|s_?(\d+)")


def parse_word(text: str) -> list[Letter]:
    """Parse ``"t s1 t^-1 s2"``; tokens may be space-separated or adjacent.

    >>> parse_word("t^-2 s1 s_2")
    [('t', -2), ('s', 1), ('s', 2)]
    """
    out: list[Letter] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word at position {pos}: {text[pos:]!r}")
        if m.group(1):
            out.append(("t", int(m.group(2)) if m.group(2) else 1))
        elif m.group(3):
            out.append(("s", int(m.group(3))))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def format_word(word: Sequence[Letter]) -> str:
    parts = []
    for kind, k in word:
        if kind == "s":
            parts.append(f"s{k}")
        else:
            parts.append("t" if k == 1 else f"t^{k}")
    return " ".join(parts)


def fp_from_word(word: "str | Sequence[Letter]", n: int) -> FramedPermutation:
    if isinstance(word, str):
        word = parse_word(word)
    # right multiplication by a generator: s_i swaps two images, t^k twists the image of strand 1
    weights, perm = [0] * n, list(range(n))
    for kind, k in word:
        if kind == "t":
            if n < 1:
                raise ValueError("t needs at least one strand")
            weights[perm[0]] += k
        elif kind == "s":
            if not 1 <= k < n:
                raise ValueError(f"s_{k} needs 1 <= i < {n}")
            perm[k - 1], perm[k] = perm[k], perm[k - 1]
        else:
            raise ValueError(f"invalid letter {kind!r}")
    return FramedPermutation(tuple(weights), tuple(perm))


def _prefix(n_plus: int, pos: int, weight: int) -> list[Letter]:
    """Coset representative sending strand ``n_plus`` to ``pos`` with framing ``weight``."""
    top = n_plus - 1
    if weight == 0:
        return [("s", i) for i in range(pos, top + 1)]
    k = pos - 1
    return ([("s", i) for i in range(k, 0, -1)] + [("t", weight)]
            + [("s", i) for i in range(1, top + 1)])


def fp_normal_word(g: FramedPermutation) -> list[Letter]:
    """The unique inductive normal word of ``g``.

    For n+1 strands the word is ``s_k...s_1 t^j s_1...s_n w`` (j != 0) or
    ``s_i s_(i+1)...s_n w`` with ``w`` normal on the first n strands; the
    prefix is read off from where the last strand goes and its framing.
    """
    word: list[Letter] = []
    size = g.n
    while size > 1:
        last = size - 1
        pos = g.perm[last] + 1
        weight = g.weights[g.perm[last]]
        pre = _prefix(size, pos, weight)
        rest = fp_from_word(pre, size).inverse() * g
        if rest.perm[last] != last or rest.weights[last] != 0:
            raise ArithmeticError("coset representative did not fix the last strand")
        word.extend(pre)
        g = FramedPermutation(rest.weights[:last], rest.perm[:last])
        size -= 1
    if size == 1 and g.weights[0]:
        word.append(("t", g.weights[0]))
    return word


def enumerate_normal_words(n: int, weight_bound: int) -> list[list[Letter]]:
    """All normal words on n strands with every ``|j|`` in ``t^j`` at most ``weight_bound``."""
    if n == 0:
        return [[]]
    if n == 1:
        return [[("t", j)] if j else [] for j in range(-weight_bound, weight_bound + 1)]
    out = []
    prefixes = []
    for pos in range(1, n + 1):
        prefixes.append(_prefix(n, pos, 0))
        for j in range(-weight_bound, weight_bound + 1):
            if j:
                prefixes.append(_prefix(n, pos, j))
    for pre in prefixes:
        for w in enumerate_normal_words(n - 1, weight_bound):
            out.append(pre + w)
    return out


# -- Hecke algebra ------------------------------------------------------------

_PQ = ("p", "q")


def permutation_length(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def _compose_s(i: int, perm: tuple[int, ...]) -> tuple[int, ...]:
    """``s_i o perm``: swap the values i-1 and i."""
    a, b = i - 1, i
    return tuple(b if x == a else a if x == b else x for x in perm)


def reduced_word(perm: Sequence[int]) -> list[int]:
    """Indices ``i1..ik`` with ``perm = s_i1 o ... o s_ik`` and k = length."""
    perm = tuple(perm)
    word = []
    while permutation_length(perm) > 0:
        # left descent: values i-1, i appear in inverted order
        pos = {v: k for k, v in enumerate(perm)}
        i = next(i for i in range(1, len(perm)) if pos[i - 1] > pos[i])
        word.append(i)
        perm = _compose_s(i, perm)
    return word


class HeckeElement:
    """Combination of permutations ``T_w`` with coefficients in ``Z[p^+-1, q^+-1]``.

    Relations ``g_i^2 = p g_i + q`` plus the braid relations.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], LaurentPoly] | None = None):
        self.n = n
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if sorted(w) != list(range(n)):
                raise ValueError(f"{w} is not a permutation of {n} letters")
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c, _PQ)
            c = clean[w] + c if w in clean else c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {tuple(range(n)): 1})

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out)

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return HeckeElement(self.n, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        return HeckeElement(self.n, {w: c * other for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def substitute(self, p, q) -> "HeckeElement":
        return HeckeElement(self.n, {w: c.substitute({"p": p, "q": q}, _PQ)
                                     for w, c in self.terms.items()})

    def to_json(self) -> list[dict]:
        return [{"perm": [i + 1 for i in w], "coeff": c.to_json()} for w, c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*T{[i + 1 for i in w]}" for w, c in sorted(self.terms.items()))

    __repr__ = __str__


def _left_gen(i: int, n: int, terms: Mapping[tuple[int, ...], LaurentPoly]) -> dict:
    p = LaurentPoly.var("p", _PQ)
    q = LaurentPoly.var("q", _PQ)
    out: dict[tuple[int, ...], LaurentPoly] = {}

    def add(w, c):
        c = out[w] + c if w in out else c
        if c:
            out[w] = c
        else:
            out.pop(w, None)

    for w, c in terms.items():
        sw = _compose_s(i, w)
        if permutation_length(sw) > permutation_length(w):
            add(sw, c)
        else:
            add(w, c * p)
            add(sw, c * q)
    return out


def hecke_mul(e1: HeckeElement, e2: HeckeElement) -> HeckeElement:
    """``T_u T_w = g_i1 (g_i2 (... (g_ik T_w)))`` for a reduced word of ``u``."""
    if e1.n != e2.n:
        raise ValueError(f"size mismatch: {e1.n} vs {e2.n}")
    out = HeckeElement(e1.n)
    for u, cu in e1.terms.items():
        acc = dict(e2.terms)
        for i in reversed(reduced_word(u)):
            acc = _left_gen(i, e1.n, acc)
        out = out + HeckeElement(e1.n, {w: c * cu for w, c in acc.items()})
    return out


def hecke_generator(n: int, i: int) -> HeckeElement:
    if not 1 <= i < n:
        raise ValueError(f"g_{i} needs 1 <= i < {n}")
    return HeckeElement(n, {_compose_s(i, tuple(range(n))): 1})


def hecke_from_word(n: int, word: "str | Iterable[int]") -> HeckeElement:
    """Product of generators; text form ``"g1 g2 g1"`` (``s`` accepted for ``g``)."""
    if isinstance(word, str):
        tokens = word.replace(",", " ").split()
        idx = []
        for tok in tokens:
            m = re.fullmatch(r"[gs](\d+)", tok)
            if not m:
                raise ValueError(f"bad Hecke letter {tok!r}")
            idx.append(int(m.group(1)))
        word = idx
    out = HeckeElement.one(n)
    for i in word:
        out = out * hecke_generator(n, i)
    return out


def bounded_elements(n: int, bound: int) -> list[FramedPermutation]:
    """Every framed permutation with all weights in ``[-bound, bound]``."""
    return [FramedPermutation(w, p) for p in permutations(range(n))
            for w in product(range(-bound, bound + 1), repeat=n)]
