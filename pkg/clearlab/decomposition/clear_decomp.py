"""
Constructive decompositions of 2x2 matrices over Z and Z/n.

A full matrix reduces to diag(1, d). Swapping its columns gives [[0,1],[d,0]], and that
splits as the idempotent [[0,0],[d+1,1]] plus the unit [[0,1],[-1,-1]]. Conjugating
back through the reduction turns the idempotent into a unit-regular part whose inner
unit is Q'*P, where Q' = Q*swap.
"""
from dataclasses import dataclass, fields, replace
from itertools import product
from math import gcd

from sympy.core.intfunc import igcdex

from ..classify.witnesses import (
    ANALYTIC, EXHAUSTIVE, CleanWitness, ClearWitness, TriVerdict, TwoGoodWitness, UnitRegularWitness,
    is_nontrivial_part,
)
from ..ring_core.data_structures import Element, Integers, MatrixRing
from ..ring_core.engine import hom_image
from ..ring_core.errors import UnsupportedRingError
from ..ring_core.matrices import diagonal, identity, require_integer_matrix_ring, require_two_by_two, swap_matrix
from ..smith.normal_form import fullness, reduce_full_to_unit_diag, smith_normal_form


@dataclass(frozen=True)
class MatrixClearDecomposition:
    input: Element
    r: Element
    u: Element
    unit_inverse: Element
    inner_unit: Element
    inner_unit_inverse: Element
    P: Element
    Q: Element
    d: Element
    nontrivial: bool
    # singular input: the construction still validates, but nonsingularity is not met
    beyond_hypotheses: bool = False

    def as_clear_witness(self) -> ClearWitness:
        part = UnitRegularWitness(self.r, self.inner_unit, self.inner_unit_inverse)
        return ClearWitness(self.input, part, self.u, self.unit_inverse, self.nontrivial)

    def to_dict(self) -> dict:
        return {
            "ring": self.input.ring.descriptor(),
            "A": self.input.encode(),
            "r": self.r.encode(),
            "u": self.u.encode(),
            "unit_inverse": self.unit_inverse.encode(),
            "inner_unit": self.inner_unit.encode(),
            "P": self.P.encode(),
            "Q": self.Q.encode(),
            "d": self.d.encode(),
            "nontrivial": self.nontrivial,
            "beyond_hypotheses": self.beyond_hypotheses,
        }


def clear_decompose_full(a: Element) -> MatrixClearDecomposition:
    ring = require_integer_matrix_ring(a.ring)
    P, Q, d = reduce_full_to_unit_diag(a)
    base = ring.base
    S = swap_matrix(ring)
    E = ring.element(((0, 0), (base.add(d.value, 1), 1)))
    U0 = ring.element(((0, 1), (-1, -1)))
    U0_inv = ring.element(((-1, -1), (1, 0)))

    Q_prime = Q * S
    P_inv, Q_prime_inv = P.inverse(), Q_prime.inverse()
    r = P_inv * E * Q_prime_inv
    return MatrixClearDecomposition(
        input=a,
        r=r,
        u=P_inv * U0 * Q_prime_inv,
        unit_inverse=Q_prime * U0_inv * P,
        inner_unit=Q_prime * P,
        inner_unit_inverse=P_inv * Q_prime_inv,
        P=P,
        Q=Q,
        d=d,
        nontrivial=is_nontrivial_part(r),
        beyond_hypotheses=not fullness(a).is_nonsingular,
    )


@dataclass(frozen=True)
class DecompositionCheck:
    ok: bool
    failed_clause: str | None
    checks: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_clear_decomposition(w: MatrixClearDecomposition) -> DecompositionCheck:
    """Re-check a decomposition by arithmetic alone; reports the first clause that fails."""
    r, u, v = w.r, w.u, w.inner_unit
    clauses = [
        ("unit part not invertible", lambda: (u * w.unit_inverse).is_one() and (w.unit_inverse * u).is_one()),
        ("inner unit not invertible", lambda: (v * w.inner_unit_inverse).is_one() and (w.inner_unit_inverse * v).is_one()),
        ("r*v*r differs from r", lambda: r * v * r == r),
        ("r*v is not idempotent", lambda: (r * v) * (r * v) == r * v),
        ("r + u does not reconstruct the input", lambda: r + u == w.input),
        ("nontriviality flag inconsistent", lambda: w.nontrivial == is_nontrivial_part(r)),
    ]
    passed = []
    for name, test in clauses:
        if not test():
            return DecompositionCheck(False, name, tuple(passed))
        passed.append(name)
    return DecompositionCheck(True, None, tuple(passed))


def reduce_decomposition(w: MatrixClearDecomposition, n: int) -> MatrixClearDecomposition:
    """Image of a decomposition under entrywise reduction mod n."""
    changes = {f.name: hom_image(getattr(w, f.name), n) for f in fields(w) if isinstance(getattr(w, f.name), Element)}
    reduced = replace(w, **changes)
    return replace(reduced, nontrivial=is_nontrivial_part(reduced.r))


def _column_verdict(ring: MatrixRing, a, b, column, detail: str) -> TriVerdict:
    base = ring.base
    a1, b1 = column
    # x*a1 + y*b1 = 1 in the base
    if isinstance(base, Integers):
        x, y, _ = (int(t) for t in igcdex(a1, b1))
    else:
        x, y = next((x, y) for x, y in product(range(base.n), repeat=2) if (x * a1 + y * b1) % base.n == 1)
    M = ring.element(((a1, -y), (b1, x)))
    A = ring.element(((a, 0), (b, 0)))
    # A = M*diag(e, 0), so M^-1 is an inner unit
    witness = UnitRegularWitness(A, M.inverse(), M)
    return TriVerdict.yes("unit-regular", A, witness, detail)


def unit_regular_matrix_from_column(ring: MatrixRing, a: int, b: int) -> TriVerdict:
    """[[a,0],[b,0]] is unit-regular iff (a, b) = (a1*e, b1*e) with e idempotent and (a1, b1) unimodular."""
    ring = require_integer_matrix_ring(ring)
    base = ring.base
    a, b = base.canonical(a), base.canonical(b)
    A = ring.element(((a, 0), (b, 0)))
    if a == 0 and b == 0:
        one = identity(ring)
        return TriVerdict.yes("unit-regular", A, UnitRegularWitness(A, one, one), "zero column, e = 0")
    if isinstance(base, Integers):
        if gcd(a, b) == 1:
            return _column_verdict(ring, a, b, (a, b), "unimodular column, e = 1")
        return TriVerdict.no("unit-regular", A, ANALYTIC, f"gcd({a},{b}) = {gcd(a, b)} and the only idempotents of Z are 0 and 1")
    n = base.n
    for e in (v for v in range(n) if v * v % n == v):
        for a1, b1 in product(range(n), repeat=2):
            if gcd(gcd(a1, b1), n) == 1 and (a1 * e) % n == a and (b1 * e) % n == b:
                return _column_verdict(ring, a, b, (a1, b1), f"column ({a1},{b1}) times idempotent {e}")
    return TriVerdict.no("unit-regular", A, EXHAUSTIVE, "no idempotent factorization through a unimodular column")


def unit_regular_matrix_from_row(ring: MatrixRing, a: int, b: int) -> TriVerdict:
    """[[a,b],[0,0]] through transposition of the column case."""
    column = unit_regular_matrix_from_column(ring, a, b)
    A = ring.element(((a, b), (0, 0)))
    if not column.is_yes:
        return TriVerdict(column.property, A, column.verdict, refutation=column.refutation, detail=column.detail)
    w = column.witness
    u = Element(ring, tuple(zip(*w.inner_unit.value)))
    u_inv = Element(ring, tuple(zip(*w.inverse_of_inner_unit.value)))
    return TriVerdict.yes("unit-regular", A, UnitRegularWitness(A, u, u_inv), f"transpose of {column.detail}")


def unit_entry_clean_split(a: Element) -> CleanWitness | None:
    """Clean split of a 2x2 matrix over a commutative base whose (1,2) or (2,1) entry is a unit."""
    ring = require_two_by_two(a.ring)
    base = ring.base
    if not base.is_commutative():
        raise UnsupportedRingError(f"unit-entry split needs a commutative base, got {base}")
    (p, q), (s, t) = a.value
    zero, one = base.zero(), base.one()
    q_inv, s_inv = base.inverse(q), base.inverse(s)
    if q_inv is not None:
        # x = q^-1 (1 - p(t-1) + qs)
        x = base.mul(q_inv, base.add(base.sub(one, base.mul(p, base.sub(t, one))), base.mul(q, s)))
        E = ring.element(((zero, zero), (x, one)))
    elif s_inv is not None:
        # y = s^-1 (1 - (p-1)t + sq)
        y = base.mul(s_inv, base.add(base.sub(one, base.mul(base.sub(p, one), t)), base.mul(s, q)))
        E = ring.element(((one, y), (zero, zero)))
    else:
        return None
    U = a - E
    return CleanWitness(a, E, U, U.inverse())


def diagonal_two_good_split(a: Element) -> TwoGoodWitness:
    """diag(d1, d2) = [[d1,1],[-1,0]] + [[0,-1],[1,d2]], carried back through the Smith transforms."""
    ring = require_integer_matrix_ring(a.ring)
    form = smith_normal_form(a)
    U1 = ring.element(((form.d1, 1), (-1, 0)))
    U2 = ring.element(((0, -1), (1, form.d2)))
    P_inv, Q_inv = form.P.inverse(), form.Q.inverse()
    first, second = P_inv * U1 * Q_inv, P_inv * U2 * Q_inv
    return TwoGoodWitness(a, first, first.inverse(), second, second.inverse())


@dataclass(frozen=True)
class IdealIdempotents:
    """right_idempotent = A*right_multiplier, left_idempotent = left_multiplier*A, both of rank one."""
    right_idempotent: Element
    right_multiplier: Element
    left_idempotent: Element
    left_multiplier: Element

    def validate(self, a: Element) -> bool:
        e, f = self.right_idempotent, self.left_idempotent
        return (
            e * e == e and f * f == f
            and a * self.right_multiplier == e and self.left_multiplier * a == f
            and is_nontrivial_part(e) and is_nontrivial_part(f)
        )

    def to_dict(self):
        return {k.name: getattr(self, k.name).encode() for k in fields(self)}


def principal_ideal_idempotents(a: Element) -> IdealIdempotents:
    """Nontrivial idempotents in A*R and R*A for a full A, both from X = Q*diag(1,0)*P."""
    ring = require_integer_matrix_ring(a.ring)
    P, Q, _ = reduce_full_to_unit_diag(a)
    X = Q * diagonal(ring, 1, 0) * P
    return IdealIdempotents(
        right_idempotent=a * X,
        right_multiplier=X,
        left_idempotent=X * a,
        left_multiplier=X,
    )

