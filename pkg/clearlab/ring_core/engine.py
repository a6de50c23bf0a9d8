from functools import lru_cache
from typing import Iterator

from .data_structures import (
    Element, Integers, MatrixRing, Modular, Product, RadicalReport, RingHandle, contains_integers,
)
from .descriptor import parse_ring
from .errors import DescriptorError, InfiniteRingError, UnsupportedRingError, WitnessValidationError


def make_ring(definition) -> RingHandle:
    """
    Builds a ring handle from a textual descriptor ('Z', 'Z/6', 'M2(Z/4)', 'Z/2 x Z/3'),
    a nested mapping ({"kind": "modular", "n": 6}, ...), or returns an existing handle.
    """
    if isinstance(definition, RingHandle):
        return definition
    if isinstance(definition, str):
        return parse_ring(definition)
    if isinstance(definition, dict):
        kind = definition.get("kind")
        if kind == "integers":
            return Integers()
        if kind == "modular":
            return Modular(definition.get("n"))
        if kind == "product":
            return Product(make_ring(definition.get("left")), make_ring(definition.get("right")))
        if kind == "matrix":
            return MatrixRing(make_ring(definition.get("base")), definition.get("size"))
        raise DescriptorError(f"unknown ring kind {kind!r} in {definition!r}")
    raise DescriptorError(f"cannot build a ring from {definition!r}")


def require_finite(ring: RingHandle) -> None:
    if contains_integers(ring):
        raise InfiniteRingError(ring.descriptor())


def enumerate_elements(ring: RingHandle) -> Iterator[Element]:
    """Every element exactly once, lexicographic on canonical values. Restartable."""
    require_finite(ring)
    return (Element(ring, v) for v in ring.iter_values())


def image_ring(ring: RingHandle, n: int) -> RingHandle:
    """Codomain of entrywise reduction mod n; n must divide every modulus already present."""
    if isinstance(ring, Integers):
        return Modular(n)
    if isinstance(ring, Modular):
        if ring.n % n != 0:
            raise UnsupportedRingError(f"reduction mod {n} is not a ring map on Z/{ring.n}")
        return Modular(n)
    if isinstance(ring, MatrixRing):
        return MatrixRing(image_ring(ring.base, n), ring.size)
    if isinstance(ring, Product):
        return Product(image_ring(ring.left, n), image_ring(ring.right, n))
    raise UnsupportedRingError(f"no reduction map defined on {ring!r}")


def _reduce(ring: RingHandle, value, n: int):
    if isinstance(ring, (Integers, Modular)):
        return value % n
    if isinstance(ring, MatrixRing):
        return tuple(tuple(_reduce(ring.base, v, n) for v in row) for row in value)
    if isinstance(ring, Product):
        return (_reduce(ring.left, value[0], n), _reduce(ring.right, value[1], n))
    raise UnsupportedRingError(f"no reduction map defined on {ring!r}")


def hom_image(x: Element, n: int) -> Element:
    """Entrywise reduction mod n: Z -> Z/n, M_k(Z) -> M_k(Z/n), and Z/m -> Z/n when n | m."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DescriptorError(f"modulus must be an integer >= 2, got {n!r}")
    target = image_ring(x.ring, n)
    return Element(target, _reduce(x.ring, x.value, n))


class RingTables:
    """
    Exhaustive facts about a finite ring, computed once: the element list in enumeration
    order, units with their inverses, idempotents, and a unit-regular inner unit per element.
    Every unit is re-validated by multiplication on both sides.
    """

    def __init__(self, ring: RingHandle):
        require_finite(ring)
        self.ring = ring
        self.elements: list = list(ring.iter_values())
        self.position: dict = {v: i for i, v in enumerate(self.elements)}
        self.zero = ring.zero()
        self.one = ring.one()

        self.units: dict = {}
        for a in self.elements:
            inv = ring.inverse(a)
            if inv is None:
                continue
            if ring.mul(a, inv) != self.one or ring.mul(inv, a) != self.one:
                raise WitnessValidationError(f"inverse of {ring.format(a)} failed to validate")
            self.units[a] = inv
        self.unit_list: list = list(self.units)

        self.idempotents: list = [a for a in self.elements if ring.mul(a, a) == a]

        # identity first, then the rest of the units in enumeration order
        self._inner_order = [self.one] + [u for u in self.unit_list if u != self.one]
        self._inner_units: dict = {}
        self.memo: dict = {}

    @property
    def size(self) -> int:
        return len(self.elements)

    def is_unit(self, a) -> bool:
        return a in self.units

    def inner_unit(self, a):
        """First unit u (identity first) with a*u*a = a, or None."""
        if a not in self._inner_units:
            ring = self.ring
            self._inner_units[a] = next((u for u in self._inner_order if ring.mul(ring.mul(a, u), a) == a), None)
        return self._inner_units[a]

    def is_unit_regular(self, a) -> bool:
        return self.inner_unit(a) is not None

    @property
    def unit_regular(self) -> dict:
        """raw element -> inner unit, for every unit-regular element."""
        return {a: self.inner_unit(a) for a in self.elements if self.inner_unit(a) is not None}

    def has_nontrivial_idempotents(self) -> bool:
        return any(e not in (self.zero, self.one) for e in self.idempotents)

    def right_ideal(self, a) -> dict:
        """{a*x: first such x} over the whole ring."""
        return self._ideal("right", a)

    def left_ideal(self, a) -> dict:
        """{x*a: first such x} over the whole ring."""
        return self._ideal("left", a)

    def _ideal(self, side: str, a) -> dict:
        key = (side, a)
        if key not in self.memo:
            found = {}
            mul = self.ring.mul
            for x in self.elements:
                found.setdefault(mul(a, x) if side == "right" else mul(x, a), x)
            self.memo[key] = found
        return self.memo[key]


@lru_cache(maxsize=64)
def ring_tables(ring: RingHandle) -> RingTables:
    return RingTables(ring)


def jacobson_radical(ring: RingHandle) -> RadicalReport:
    """{x : 1 - x*y is a unit for every y}; the right-sided version is recorded alongside."""
    tables = ring_tables(ring)
    r, one = ring, tables.one
    left, right = set(), set()
    for x in tables.elements:
        if all(r.sub(one, r.mul(x, y)) in tables.units for y in tables.elements):
            left.add(x)
        if all(r.sub(one, r.mul(y, x)) in tables.units for y in tables.elements):
            right.add(x)
    radical = frozenset(Element(ring, x) for x in left)
    return RadicalReport(
        ring=ring,
        radical_elements=radical,
        is_semisimple=(left == {tables.zero}),
        sides_agree=(left == right),
    )


def check_ring_axioms(ring: RingHandle, max_elements: int = 512) -> list[str]:
    """Exhaustive axiom check; returns human-readable violations (empty when all hold)."""
    tables = ring_tables(ring)
    if tables.size > max_elements:
        raise UnsupportedRingError(f"{ring.descriptor()} has {tables.size} elements, axiom check is limited to {max_elements}")
    r, els = ring, tables.elements
    zero, one = tables.zero, tables.one
    problems = []
    for a in els:
        if r.add(a, zero) != a or r.add(a, r.neg(a)) != zero:
            problems.append(f"additive identity/inverse fails at {r.format(a)}")
        if r.mul(a, one) != a or r.mul(one, a) != a:
            problems.append(f"unity fails at {r.format(a)}")
        for b in els:
            if r.add(a, b) != r.add(b, a):
                problems.append(f"addition not commutative at {r.format(a)}, {r.format(b)}")
            ab = r.mul(a, b)
            for c in els:
                if r.mul(ab, c) != r.mul(a, r.mul(b, c)):
                    problems.append(f"multiplication not associative at {r.format(a)}, {r.format(b)}, {r.format(c)}")
                if r.mul(a, r.add(b, c)) != r.add(ab, r.mul(a, c)):
                    problems.append(f"left distributivity fails at {r.format(a)}, {r.format(b)}, {r.format(c)}")
                if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)):
                    problems.append(f"right distributivity fails at {r.format(a)}, {r.format(b)}, {r.format(c)}")
                if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)):
                    problems.append(f"addition not associative at {r.format(a)}, {r.format(b)}, {r.format(c)}")
        if len(problems) > 20:
            break
    return problems
