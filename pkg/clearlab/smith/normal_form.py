"""
Diagonal reduction of 2x2 matrices over Z and Z/n.

Over Z the reduction alternates a column step and a row step, each a unimodular
Bezout transform that moves gcd(pivot, entry) into the pivot. When the pivot stops
dividing the lower corner, row 1 is added to row 0 and the loop goes round again.
Over Z/n the matrix is lifted to Z, reduced there, and the transforms reduced mod n.
"""
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from sympy.core.intfunc import igcdex

from ..ring_core.data_structures import Element, Integers, MatrixRing, Modular
from ..ring_core.errors import NotFullError
from ..ring_core.matrices import require_integer_matrix_ring

_I = ((1, 0), (0, 1))
_SWAP = ((0, 1), (1, 0))


def _mul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _bezout(a: int, b: int) -> tuple[int, int, int]:
    x, y, g = igcdex(a, b)
    return int(x), int(y), int(g)


def _clearing_transform(pivot: int, entry: int):
    """Column transform C, det 1, with (pivot, entry)*C = (g, 0); transposed it clears a column."""
    if pivot != 0 and entry % pivot == 0:
        return ((1, -(entry // pivot)), (0, 1))
    x, y, g = _bezout(pivot, entry)
    p, q = pivot // g, entry // g
    return ((x, -q), (y, p))


def smith_int(a) -> tuple[tuple, tuple, tuple]:
    """(P, D, Q) over Z with P*a*Q = D, d1 | d2, both nonnegative, det P and det Q in {1, -1}."""
    A = tuple(tuple(int(v) for v in row) for row in a)
    P, Q = _I, _I
    while True:
        if A[0][1] != 0:
            C = _clearing_transform(A[0][0], A[0][1])
            A, Q = _mul(A, C), _mul(Q, C)
        if A[1][0] != 0:
            C = _clearing_transform(A[0][0], A[1][0])
            R = ((C[0][0], C[1][0]), (C[0][1], C[1][1]))
            A, P = _mul(R, A), _mul(R, P)
            continue
        d1, d2 = A[0][0], A[1][1]
        if d1 == 0 and d2 != 0:
            A, P, Q = _mul(_mul(_SWAP, A), _SWAP), _mul(_SWAP, P), _mul(Q, _SWAP)
            continue
        if d1 != 0 and d2 % d1 != 0:
            R = ((1, 1), (0, 1))
            A, P = _mul(R, A), _mul(R, P)
            continue
        break
    if A[0][0] < 0:
        F = ((-1, 0), (0, 1))
        A, Q = _mul(A, F), _mul(Q, F)
    if A[1][1] < 0:
        F = ((1, 0), (0, -1))
        A, Q = _mul(A, F), _mul(Q, F)
    return P, A, Q


@dataclass(frozen=True)
class SmithForm:
    original: Element
    P: Element
    D: Element
    Q: Element
    # d1 * divisor_multiplier == d2 in the base ring
    divisor_multiplier: int

    @property
    def d1(self) -> int:
        return self.D.value[0][0]

    @property
    def d2(self) -> int:
        return self.D.value[1][1]

    def check(self) -> bool:
        ring = self.original.ring
        base = ring.base
        if self.P * self.original * self.Q != self.D:
            return False
        if base.mul(self.d1, self.divisor_multiplier) != self.d2:
            return False
        return self.P.is_unit() and self.Q.is_unit()

    def to_dict(self):
        return {
            "ring": self.original.ring.descriptor(),
            "A": self.original.encode(),
            "P": self.P.encode(),
            "D": self.D.encode(),
            "Q": self.Q.encode(),
            "d1": str(self.d1),
            "d2": str(self.d2),
        }


def smith_normal_form(a: Element) -> SmithForm:
    ring = require_integer_matrix_ring(a.ring)
    P, D, Q = smith_int(a.value)
    d1, d2 = D[0][0], D[1][1]
    multiplier = d2 // d1 if d1 != 0 else 0
    if isinstance(ring.base, Modular):
        multiplier %= ring.base.n
    return SmithForm(
        original=a,
        P=ring.element(P),
        D=ring.element(D),
        Q=ring.element(Q),
        divisor_multiplier=multiplier,
    )


@dataclass(frozen=True)
class FullnessVerdict:
    is_full: bool
    gcd_of_entries: int
    is_nonsingular: bool

    def to_dict(self):
        return {"is_full": self.is_full, "gcd_of_entries": str(self.gcd_of_entries), "is_nonsingular": self.is_nonsingular}


def entry_gcd(a: Element) -> int:
    """gcd of the entries, as an element of the base (Z/n: gcd with n, reduced)."""
    ring = require_integer_matrix_ring(a.ring)
    g = 0
    for row in a.value:
        for v in row:
            g = gcd(g, v)
    if isinstance(ring.base, Modular):
        return gcd(g, ring.base.n) % ring.base.n
    return g


def fullness(a: Element) -> FullnessVerdict:
    """Full means the entries generate the unit ideal; the inner-rank reading is not used."""
    ring = require_integer_matrix_ring(a.ring)
    g = entry_gcd(a)
    det = ring.determinant(a.value)
    if isinstance(ring.base, Integers):
        return FullnessVerdict(is_full=(g == 1), gcd_of_entries=g, is_nonsingular=(det != 0))
    n = ring.base.n
    return FullnessVerdict(
        is_full=(gcd(g, n) == 1),
        gcd_of_entries=g,
        is_nonsingular=(gcd(det, n) == 1),
    )


class UnitDiagonalReduction(NamedTuple):
    P: Element
    Q: Element
    d: Element


def reduce_full_to_unit_diag(a: Element) -> UnitDiagonalReduction:
    """P*a*Q = diag(1, d) for a full matrix; d may be 0 when a is singular."""
    ring: MatrixRing = require_integer_matrix_ring(a.ring)
    verdict = fullness(a)
    if not verdict.is_full:
        raise NotFullError(str(a), str(verdict.gcd_of_entries))
    form = smith_normal_form(a)
    base = ring.base
    P, d = form.P, form.d2
    if form.d1 != base.one():
        scale = base.inverse(form.d1)
        P = Element(ring, tuple(tuple(base.mul(scale, v) for v in row) for row in P.value))
        d = base.mul(scale, d)
    return UnitDiagonalReduction(P=P, Q=form.Q, d=Element(base, d))
