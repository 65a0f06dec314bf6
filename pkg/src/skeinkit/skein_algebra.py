"""Kauffman bracket skein algebra of the once-punctured torus.

Generators ``x, y, z`` with the A-commutator relations, oriented as
rewriting rules towards the order ``x < y < z``::

    yx -> A^2 xy - A(A^2 - A^-2) z
    zy -> A^2 yz - A(A^2 - A^-2) x
    zx -> A^-2 xz + A^-1(A^2 - A^-2) y

Each rule either shortens the word or removes one inversion, so reduction
terminates; elements are kept as combinations of ``x^a y^b z^c``.
"""

from __future__ import annotations

__all__ = [
    "NcMonomial",
    "NcElement",
    "nc_reduce",
    "rewrite_once",
    "nc_mul",
    "nc_generator",
    "boundary_element",
    "closed_torus_relation_check",
    "cyclic_shift",
    "LONG_RELATION_CONSTANT",
    "STRATEGIES",
]

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .poly import LaurentPoly

_A = LaurentPoly.var("A")
_ONE = LaurentPoly.const(1, ("A",))
_K = _A**2 - _A**-2

_LETTERS = "xyz"
_RULES = {
    ("y", "x"): ((_A**2, ("x", "y")), (-_A * _K, ("z",))),
    ("z", "y"): ((_A**2, ("y", "z")), (-_A * _K, ("x",))),
    ("z", "x"): ((_A**-2, ("x", "z")), (_A**-1 * _K, ("y",))),
}

#: The scalar ``2(A^2 + A^-2)`` that the boundary element equals on the closed torus.
LONG_RELATION_CONSTANT = 2 * (_A**2 + _A**-2)


@dataclass(frozen=True, order=True)
class NcMonomial:
    """Normal-ordered monomial ``x^a y^b z^c``."""

    a: int = 0
    b: int = 0
    c: int = 0

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def word(self) -> tuple[str, ...]:
        return ("x",) * self.a + ("y",) * self.b + ("z",) * self.c

    def __str__(self):
        parts = [f"{v}^{e}" if e > 1 else v for v, e in zip(_LETTERS, (self.a, self.b, self.c)) if e]
        return "*".join(parts) or "1"


class NcElement:
    """Combination of normal-ordered monomials with coefficients in ``Z[A^+-1]``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[NcMonomial, LaurentPoly] | None = None):
        clean: dict[NcMonomial, LaurentPoly] = {}
        for m, c in (terms or {}).items():
            if isinstance(c, int):
                c = LaurentPoly.const(c, ("A",))
            c = clean[m] + c if m in clean else c
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean

    @classmethod
    def scalar(cls, c) -> "NcElement":
        return cls({NcMonomial(): c})

    def _lift(self, other):
        if isinstance(other, NcElement):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return NcElement.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return NcElement(out)

    __radd__ = __add__

    def __neg__(self):
        return NcElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return NcElement({m: c * other for m, c in self.terms.items()})
        if isinstance(other, NcElement):
            return nc_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return NcElement({m: c * other for m, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def specialize(self, a_value: int) -> dict[NcMonomial, int]:
        """Evaluate coefficients at an integer unit ``A = +-1``."""
        if a_value not in (1, -1):
            raise ValueError("only A = 1 or A = -1 keep coefficients integral")
        out = {}
        for m, c in self.terms.items():
            v = sum(coef * a_value ** (e % 2) for (e,), coef in c.items())
            if v:
                out[m] = v
        return out

    def to_json(self) -> list[dict]:
        return [{"monomial": [m.a, m.b, m.c], "coeff": c.to_json()} for m, c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items()))

    __repr__ = __str__


def nc_generator(letter: str) -> NcElement:
    return NcElement({NcMonomial(*(int(letter == v) for v in _LETTERS)): 1})


def _check_word(word: Iterable[str]) -> tuple[str, ...]:
    word = tuple(word)
    bad = [ch for ch in word if ch not in _LETTERS]
    if bad:
        raise ValueError(f"letters must be x, y, z; got {bad}")
    return word


def _monomial_of(word: tuple[str, ...]) -> NcMonomial:
    return NcMonomial(word.count("x"), word.count("y"), word.count("z"))


STRATEGIES = ("incremental", "leftmost", "rightmost")


def nc_reduce(word: Iterable[str], strategy: str = "incremental") -> NcElement:
    """Normal form of a word over ``{x, y, z}``.

    ``leftmost`` and ``rightmost`` rewrite the whole word, always at the
    first or last disordered adjacent pair.  ``incremental`` (the default,
    much faster on long words) appends one letter at a time to a normal
    form, caching ``monomial * letter``.  All three agree.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    word = _check_word(word)
    if strategy == "incremental":
        out = {NcMonomial(): _ONE}
        for letter in word:
            out = _times_letter(out, letter)
        return NcElement(out)
    return NcElement(_reduce_word(word, strategy))


def _times_letter(terms: Mapping[NcMonomial, LaurentPoly], letter: str) -> dict:
    out: dict[NcMonomial, LaurentPoly] = {}
    for m, c in terms.items():
        for m2, c2 in _monomial_times_letter(m, letter).items():
            out[m2] = out[m2] + c * c2 if m2 in out else c * c2
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _monomial_times_letter(m: NcMonomial, letter: str) -> dict:
    word = m.word()
    if not word or word[-1] <= letter:
        return {_monomial_of(word + (letter,)): _ONE}
    # m = m' * last with last > letter: rewrite (last, letter), then multiply back
    last = word[-1]
    rest = {_monomial_of(word[:-1]): _ONE}
    out: dict[NcMonomial, LaurentPoly] = {}
    for coeff, repl in _RULES[(last, letter)]:
        part = rest
        for ch in repl:
            part = _times_letter(part, ch)
        for m2, c2 in part.items():
            out[m2] = out[m2] + coeff * c2 if m2 in out else coeff * c2
    return {m2: c2 for m2, c2 in out.items() if c2}


@lru_cache(maxsize=None)
def _reduce_word(word: tuple[str, ...], strategy: str) -> dict:
    positions = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
    if not positions:
        return {_monomial_of(word): _ONE}
    i = positions[0] if strategy == "leftmost" else positions[-1]
    return _rewrite_at(word, i, strategy)


def _rewrite_at(word: tuple[str, ...], i: int, strategy: str = "leftmost") -> dict:
    out: dict[NcMonomial, LaurentPoly] = {}
    for coeff, repl in _RULES[(word[i], word[i + 1])]:
        for m, c in _reduce_word(word[:i] + repl + word[i + 2:], strategy).items():
            out[m] = out[m] + coeff * c if m in out else coeff * c
    return {m: c for m, c in out.items() if c}


def rewrite_once(word: Iterable[str], position: int) -> NcElement:
    """Apply the rule at ``position`` then reduce; for confluence checks."""
    word = _check_word(word)
    if (word[position], word[position + 1]) not in _RULES:
        raise ValueError(f"no rule applies at position {position} of {''.join(word)}")
    return NcElement(_rewrite_at(word, position))


def nc_mul(e1: NcElement, e2: NcElement) -> NcElement:
    """Product: ``e1`` placed above ``e2``, i.e. word concatenation, then reduction."""
    out: dict[NcMonomial, LaurentPoly] = {}
    for m2, c2 in e2.terms.items():
        part = dict(e1.terms)
        for letter in m2.word():
            part = _times_letter(part, letter)
        for m, c in part.items():
            out[m] = out[m] + c * c2 if m in out else c * c2
    return NcElement(out)


def boundary_element() -> NcElement:
    """``A^2 x^2 + A^-2 y^2 + A^2 z^2 - A xyz``, the central boundary-curve element."""
    return NcElement({
        NcMonomial(2, 0, 0): _A**2,
        NcMonomial(0, 2, 0): _A**-2,
        NcMonomial(0, 0, 2): _A**2,
        NcMonomial(1, 1, 1): -_A,
    })


def cyclic_shift(e: NcElement) -> NcElement:
    """Algebra automorphism ``x -> y -> z -> x``."""
    shift = {"x": "y", "y": "z", "z": "x"}
    out = NcElement()
    for m, c in e.terms.items():
        word = tuple(shift[ch] for ch in m.word())
        out = out + nc_reduce(word) * c
    return out


def closed_torus_relation_check(e: NcElement) -> NcElement:
    """Reduce ``e`` modulo the long relation ``Q = 2(A^2 + A^-2)``.

    Any monomial containing ``xyz`` is the top-degree term (up to a unit
    ``+-A^k``) of ``m * Q`` for ``m = x^(a-1) y^(b-1) z^(c-1)``; it is traded
    for ``m * (Q - 2(A^2 + A^-2))`` subtracted out, which only adds lower
    degree terms.  The residual has no monomial divisible by ``xyz`` and is
    zero for every multiple of ``Q - 2(A^2 + A^-2)``.
    """
    q = boundary_element()
    rel = q - LONG_RELATION_CONSTANT
    e = NcElement(e.terms)
    while True:
        reducible = [m for m in e.terms if m.a and m.b and m.c]
        if not reducible:
            return e
        top = max(reducible, key=lambda m: (m.degree, m))
        cofactor = NcElement({NcMonomial(top.a - 1, top.b - 1, top.c - 1): 1})
        multiple = nc_mul(cofactor, rel)
        lead = multiple.terms[top]
        if not lead.is_monomial():
            raise ArithmeticError(f"leading coefficient {lead} is not a unit")
        e = e - multiple * (e.terms[top] * lead**-1)
