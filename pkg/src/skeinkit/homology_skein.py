"""Smith normal form and the second skein module decomposition.

The calculator takes the algebraic data of a 3-manifold: the free rank of
H_1, its torsion invariant factors, the rank of H_2 and the intersection
pairing between the free part of H_1 and H_2.  It returns

    Z[q^+-1] T(H_1)  (+)  sum over alpha not in T(H_1) of Z[q^+-1] / (q^(2 mul(alpha)) - 1)

as a rule plus a table over a bounded box of classes.  Torsion classes pair
trivially, so ``T(H_1)`` is the torsion subgroup plus the left kernel of the
pairing on the free part.
"""

from __future__ import annotations

__all__ = [
    "IntMatrix",
    "smith_normal_form",
    "PairingData",
    "S2Decomposition",
    "s2_decomposition",
    "mul",
]

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Sequence

IntMatrix = list[list[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _check_rect(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("matrix is not rectangular")
    return rows, cols


def smith_normal_form(m: Sequence[Sequence[int]], cols: int | None = None
                      ) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Return ``(factors, left, right)`` with ``left * m * right`` diagonal.

    ``factors`` has ``min(rows, cols)`` entries, nonnegative, each dividing
    the next (zeros last).  ``left`` and ``right`` are unimodular.  ``cols``
    is only needed for a matrix with no rows.

    >>> smith_normal_form([[2, 0], [0, 3]])[0]
    [1, 6]
    """
    rows, ncols = _check_rect(m)
    if rows == 0 and cols is not None:
        ncols = cols
    a = [list(map(int, r)) for r in m]
    left = _identity(rows)
    right = _identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        for mat in (a, left):
            mat[dst] = [x + k * y for x, y in zip(mat[dst], mat[src])]

    def add_col(dst, src, k):
        for mat in (a, right):
            for r in mat:
                r[dst] += k * r[src]

    def quotient(x, p):
        # nearest-integer quotient keeps remainders at most |p|/2
        q, r = divmod(x, p)
        return q + 1 if 2 * abs(r) > abs(p) else q

    for t in range(min(rows, ncols)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, ncols) if a[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -quotient(a[i][t], p))
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -quotient(a[t][j], p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, ncols)):
                continue
            # the pivot must divide the rest of the block
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, ncols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
    factors = [a[i][i] for i in range(min(rows, ncols))]
    return factors, left, right


def _matmul(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]]) -> IntMatrix:
    return [[sum(r[k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]) if y else 0)] for r in x]


@dataclass(frozen=True)
class PairingData:
    """Algebraic input for the decomposition.

    ``pairing`` is ``h1_free_rank x h2_rank``; entry ``(i, j)`` is the
    intersection number of the i-th free H_1 generator with the j-th H_2
    generator.
    """

    h1_free_rank: int
    h1_torsion: tuple[int, ...]
    h2_rank: int
    pairing: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "h1_torsion", tuple(int(t) for t in self.h1_torsion))
        object.__setattr__(self, "pairing", tuple(tuple(int(x) for x in r) for r in self.pairing))
        if self.h1_free_rank < 0 or self.h2_rank < 0:
            raise ValueError("ranks must be nonnegative")
        if any(t < 2 for t in self.h1_torsion):
            raise ValueError("torsion invariant factors must be at least 2")
        for a, b in zip(self.h1_torsion, self.h1_torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factor {a} does not divide {b}")
        if len(self.pairing) != self.h1_free_rank or any(len(r) != self.h2_rank for r in self.pairing):
            raise ValueError(f"pairing must be {self.h1_free_rank} x {self.h2_rank}")


def mul(data: PairingData, alpha: Sequence[int]) -> int:
    """``gcd`` of the entries of ``alpha^T * pairing``; 0 means ``alpha`` is in ``T(H_1)``.

    ``alpha`` lists free coordinates first; torsion coordinates, if given,
    are ignored since torsion pairs trivially.
    """
    free = list(alpha[:data.h1_free_rank])
    if len(free) != data.h1_free_rank:
        raise ValueError(f"alpha needs {data.h1_free_rank} free coordinates")
    g = 0
    for j in range(data.h2_rank):
        g = gcd(g, sum(free[i] * data.pairing[i][j] for i in range(data.h1_free_rank)))
    return g


@dataclass(frozen=True)
class S2Decomposition:
    """The decomposition as data.

    ``kernel_basis`` spans the free classes in ``T(H_1)`` (rows in free
    coordinates); ``torsion`` are the torsion invariant factors.  Each table
    entry is ``(alpha, mul, summand)`` with ``alpha`` as free coordinates
    followed by torsion residues.
    """

    data: PairingData
    kernel_basis: tuple[tuple[int, ...], ...]
    torsion: tuple[int, ...]
    display_bound: int
    table: tuple = field(repr=False)

    @property
    def free_part(self) -> str:
        parts = [f"Z^{len(self.kernel_basis)}" if self.kernel_basis else ""]
        parts += [f"Z/{t}" for t in self.torsion]
        group = " + ".join(p for p in parts if p) or "0"
        return f"Z[q^+-1]T(H_1), T(H_1) = {group}"

    def mul(self, alpha: Sequence[int]) -> int:
        return mul(self.data, alpha)

    def is_free(self) -> bool:
        """True when every class lies in ``T(H_1)``, so no torsion summand appears."""
        return len(self.kernel_basis) == self.data.h1_free_rank

    def torsion_summands(self) -> list[tuple[tuple[int, ...], int, str]]:
        return [row for row in self.table if row[1]]

    def __str__(self):
        lines = [self.free_part, "mul(alpha) = gcd of entries of alpha^T * pairing"]
        lines += [f"alpha={list(a)}: {summand}" for a, m, summand in self.table if m]
        return "; ".join(lines)

    def to_json(self) -> dict:
        return {
            "free_part": self.free_part,
            "t_h1_free_basis": [list(r) for r in self.kernel_basis],
            "t_h1_torsion": list(self.torsion),
            "rule": "mul(alpha) = gcd of entries of alpha^T * pairing",
            "display_bound": self.display_bound,
            "summands": [{"alpha": list(a), "mul": m, "summand": s} for a, m, s in self.table if m],
        }


def _summand(m: int) -> str:
    return f"Z[q^+-1]/(q^{2 * m} - 1)"


def s2_decomposition(data: PairingData, display_bound: int = 2) -> S2Decomposition:
    """Decompose using the SNF of the pairing.

    With ``L * P * R = D`` of rank ``r``, the rows ``r..`` of ``L`` form a
    basis of the left kernel ``{alpha : alpha^T P = 0}``.  The table runs
    over free coordinates in ``[-display_bound, display_bound]`` and every
    torsion residue; classes in ``T(H_1)`` get ``mul = 0`` and no summand.
    """
    if display_bound < 0:
        raise ValueError("display_bound must be nonnegative")
    n = data.h1_free_rank
    if n:
        factors, left, _ = smith_normal_form([list(r) for r in data.pairing], cols=data.h2_rank)
        rank = sum(1 for f in factors if f)
        kernel = tuple(tuple(left[i]) for i in range(rank, n))
    else:
        kernel = ()
    table = []
    free_box = product(range(-display_bound, display_bound + 1), repeat=n)
    for free in free_box:
        m = mul(data, free)
        for tors in product(*(range(t) for t in data.h1_torsion)):
            table.append((tuple(free) + tuple(tors), m, _summand(m) if m else None))
    return S2Decomposition(data, kernel, data.h1_torsion, display_bound, tuple(table))
