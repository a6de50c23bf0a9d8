"""Element-level helpers for matrices; raw arithmetic lives on MatrixRing."""
from .data_structures import Element, Integers, MatrixRing, Modular, RingHandle
from .errors import UnsupportedRingError


def matrix(ring: MatrixRing, rows) -> Element:
    return ring.element(rows)


def identity(ring: MatrixRing) -> Element:
    return Element(ring, ring.one())


def diagonal(ring: MatrixRing, *entries) -> Element:
    if len(entries) != ring.size:
        raise UnsupportedRingError(f"{ring.descriptor()} needs {ring.size} diagonal entries, got {len(entries)}")
    z = ring.base.zero()
    rows = [[entries[i] if i == j else z for j in range(ring.size)] for i in range(ring.size)]
    return ring.element(rows)


def swap_matrix(ring: MatrixRing) -> Element:
    """[[0,1],[1,0]]"""
    require_two_by_two(ring)
    z, o = ring.base.zero(), ring.base.one()
    return Element(ring, ((z, o), (o, z)))


def transpose(a: Element) -> Element:
    ring = require_matrix(a.ring)
    return Element(ring, tuple(zip(*a.value)))


def determinant(a: Element) -> Element:
    ring = require_matrix(a.ring)
    if not ring.base.is_commutative():
        raise UnsupportedRingError(f"determinant needs a commutative base, {ring.base} is not")
    return Element(ring.base, ring.determinant(a.value))


def is_diagonal(a: Element) -> bool:
    ring = require_matrix(a.ring)
    z = ring.base.zero()
    return all(a.value[i][j] == z for i in range(ring.size) for j in range(ring.size) if i != j)


def require_matrix(ring: RingHandle) -> MatrixRing:
    if not isinstance(ring, MatrixRing):
        raise UnsupportedRingError(f"{ring.descriptor()} is not a matrix ring")
    return ring


def require_two_by_two(ring: RingHandle) -> MatrixRing:
    ring = require_matrix(ring)
    if ring.size != 2:
        raise UnsupportedRingError(f"only 2x2 matrices are supported here, got {ring.descriptor()}")
    return ring


def is_integer_like(ring: RingHandle) -> bool:
    """ℤ or ℤ_n: the bases the diagonal reduction works over."""
    return isinstance(ring, (Integers, Modular))


def require_integer_matrix_ring(ring: RingHandle) -> MatrixRing:
    ring = require_two_by_two(ring)
    if not is_integer_like(ring.base):
        raise UnsupportedRingError(f"diagonal reduction needs base Z or Z/n, got {ring.base.descriptor()}")
    return ring
