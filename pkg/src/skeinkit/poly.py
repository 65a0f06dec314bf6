"""Sparse Laurent polynomials with integer coefficients in named variables.

Every invariant in the package is a :class:`LaurentPoly`.  Values are
immutable; arithmetic is exact (Python ints, no floats anywhere).

    >>> A = LaurentPoly.var("A")
    >>> print((A + A**-1) * (A - A**-1))
    -A^-2 + A^2

Terms print in canonical (lexicographic exponent) order, which is also the
JSON order.
"""

from __future__ import annotations

__all__ = [
    "LaurentPoly",
    "CyclotomicValue",
    "poly_add",
    "poly_mul",
    "poly_substitute",
    "poly_eval_zeta6",
    "exact_divide",
]

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponent = tuple[int, ...]
Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable sparse Laurent polynomial over Z.

    ``variables`` is an ordered tuple of names; ``terms`` maps exponent
    vectors (one entry per variable) to nonzero integer coefficients.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[Exponent, int] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise ValueError(f"exponent {exp} does not match variables {variables}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.variables = variables
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "LaurentPoly":
        variables = (name,) if variables is None else tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name!r} not among {variables}")
        return cls(variables, {exp: 1})

    @classmethod
    def const(cls, c: int, variables: Iterable[str] = ()) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Iterable[str], exp: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exp): coeff})

    @classmethod
    def univariate(cls, name: str, coeffs: Mapping[int, int]) -> "LaurentPoly":
        """Build ``sum c * name**e`` from ``{e: c}``."""
        return cls((name,), {(e,): c for e, c in coeffs.items()})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self.variables), 0)

    def exponents(self, name: str) -> set[int]:
        i = self.variables.index(name)
        return {e[i] for e in self._terms}

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables == self.variables:
                return other
            if other.is_zero():
                return LaurentPoly(self.variables)
            if self.is_zero():
                return other
            if other.is_constant():
                return LaurentPoly.const(other.constant_term(), self.variables)
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
        if isinstance(other, int):
            return LaurentPoly.const(other, self.variables)
        return NotImplemented

    def _common(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented, NotImplemented
        if self.is_zero() and not other.is_zero() and self.variables != other.variables:
            return LaurentPoly(other.variables), other
        if self.is_constant() and self.variables != other.variables:
            return LaurentPoly.const(self.constant_term(), other.variables), other
        return self, other

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        out = dict(a._terms)
        for e, c in b._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError(f"cannot invert non-monomial {self}")
            (exp, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError(f"cannot invert {self} over the integers")
            return LaurentPoly(self.variables, {tuple(-e * -k for e in exp): c ** -k})
        result = LaurentPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.variables != other.variables:
            if self.is_constant() and other.is_constant():
                return self.constant_term() == other.constant_term()
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(("const", self.constant_term()))
            else:
                self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- transformations --------------------------------------------------

    def mod(self, m: int) -> "LaurentPoly":
        """Reduce every coefficient into ``range(m)``."""
        if m <= 0:
            raise ValueError("modulus must be positive")
        return LaurentPoly(self.variables, {e: c % m for e, c in self._terms.items()})

    def map_exponents(self, fn, variables: Iterable[str] | None = None) -> "LaurentPoly":
        variables = self.variables if variables is None else tuple(variables)
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            ne = tuple(fn(e))
            out[ne] = out.get(ne, 0) + c
        return LaurentPoly(variables, out)

    def invert_variable(self, name: str) -> "LaurentPoly":
        """Substitute ``name -> name**-1``."""
        i = self.variables.index(name)
        return self.map_exponents(lambda e: e[:i] + (-e[i],) + e[i + 1:])

    def substitute(self, bindings: Mapping[str, Scalar], variables: Iterable[str] | None = None) -> "LaurentPoly":
        """Compose: replace each variable by a polynomial in ``variables``.

        Every variable of ``self`` must be bound.  A negative power may only
        be applied to a monomial with unit coefficient.
        """
        missing = [v for v in self.variables if v not in bindings]
        if missing and not self.is_zero():
            raise ValueError(f"unbound variables {missing}")
        if variables is None:
            targets = [b.variables for b in bindings.values() if isinstance(b, LaurentPoly) and not b.is_constant()]
            variables = targets[0] if targets else ()
        variables = tuple(variables)
        vals = []
        for v in self.variables:
            b = bindings[v]
            b = LaurentPoly.const(b, variables) if isinstance(b, int) else b
            if b.variables != variables:
                b = LaurentPoly.const(b.constant_term(), variables) if b.is_constant() else b
                if b.variables != variables:
                    raise ValueError(f"binding for {v} is not in {variables}")
            vals.append(b)
        cache: dict[tuple[int, int], LaurentPoly] = {}
        out = LaurentPoly(variables)
        for exp, c in self._terms.items():
            term = LaurentPoly.const(c, variables)
            for i, e in enumerate(exp):
                if e:
                    key = (i, e)
                    if key not in cache:
                        if e < 0 and not vals[i].is_monomial():
                            raise ValueError(
                                f"negative power of non-monomial binding {self.variables[i]} = {vals[i]}")
                        cache[key] = vals[i] ** e
                    term = term * cache[key]
            out = out + term
        return out

    def eval_zeta6(self) -> "CyclotomicValue":
        """Exact value at ``exp(i*pi/3)`` of a univariate polynomial."""
        if len(self.variables) > 1:
            raise ValueError("eval_zeta6 needs a univariate polynomial")
        total = CyclotomicValue(0, 0)
        for exp, c in self._terms.items():
            e = exp[0] if exp else 0
            total = total + CyclotomicValue.zeta_power(e) * c
        return total

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [{"exp": list(e), "coeff": c} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        return cls(obj["variables"], {tuple(t["exp"]): int(t["coeff"]) for t in obj["terms"]})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({self.variables!r}, {dict(self.items())!r})"


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_substitute(a: LaurentPoly, bindings: Mapping[str, Scalar],
                    variables: Iterable[str] | None = None) -> LaurentPoly:
    return a.substitute(bindings, variables)


def poly_eval_zeta6(a: LaurentPoly) -> "CyclotomicValue":
    return a.eval_zeta6()


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient of univariate Laurent polynomials; raises if ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    if len(b.variables) != 1 or (a.variables != b.variables and not a.is_constant()):
        raise ValueError("exact_divide works on univariate polynomials in the same variable")
    var = b.variables
    a = a._coerce(a) if a.variables == var else LaurentPoly.const(a.constant_term(), var)
    lead_e, lead_c = max(b._terms.items())
    lead_e = lead_e[0]
    low_b = min(e[0] for e in b._terms)
    rem = dict((e[0], c) for e, c in a._terms.items())
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top - lead_e < min(rem) - low_b:
            break
        c = rem[top]
        if c % lead_c:
            raise ValueError("not exactly divisible")
        q = c // lead_c
        shift = top - lead_e
        quot[shift] = q
        for (e,), bc in b._terms.items():
            k = e + shift
            rem[k] = rem.get(k, 0) - q * bc
            if not rem[k]:
                del rem[k]
    if rem:
        raise ValueError("not exactly divisible")
    return LaurentPoly(var, {(e,): c for e, c in quot.items()})


@dataclass(frozen=True)
class CyclotomicValue:
    """``u + w*zeta`` with ``zeta = exp(i*pi/3)``, so ``zeta**2 = zeta - 1``."""

    u: Fraction
    w: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "w", Fraction(self.w))

    @classmethod
    def zeta_power(cls, e: int) -> "CyclotomicValue":
        # zeta has order 6
        return _ZETA_POWERS[e % 6]

    def _lift(self, other):
        if isinstance(other, CyclotomicValue):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CyclotomicValue(self.u + other.u, self.w + other.w)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(-self.u, -self.w)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        u1, w1, u2, w2 = self.u, self.w, other.u, other.w
        return CyclotomicValue(u1 * u2 - w1 * w2, u1 * w2 + w1 * u2 + w1 * w2)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicValue":
        return CyclotomicValue(self.u + self.w, -self.w)

    def norm(self) -> Fraction:
        """Squared modulus ``u^2 + u*w + w^2``."""
        return self.u * self.u + self.u * self.w + self.w * self.w

    def is_real(self) -> bool:
        return self.w == 0

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.u == other.u and self.w == other.w

    def __hash__(self):
        return hash((self.u, self.w))


_ZETA_POWERS = [
    CyclotomicValue(1, 0),
    CyclotomicValue(0, 1),
    CyclotomicValue(-1, 1),
    CyclotomicValue(-1, 0),
    CyclotomicValue(0, -1),
    CyclotomicValue(1, -1),
]
