"""
Exhaustive checks of the implications between element properties on finite rings.

Each check returns a PropositionCheck whose counterexample (if any) is an element of the
ring under test. Element-wise checks run their test a second time on the counterexample
before reporting it.
"""
from dataclasses import dataclass
from itertools import product
from math import gcd

from ..classify.predicates import (
    clean_witness, clear_witness, exchange_test, two_clean_test, two_good_test, unit_regular_witness,
    unit_twisted_clean, unit_witness, ursr1_test,
)
from ..classify.witnesses import ClearWitness, TwoGoodWitness, map_witness, pair_witnesses
from ..decomposition.clear_decomp import diagonal_two_good_split, unit_entry_clean_split
from ..reporting.run_log import RunLog, quiet_log
from ..ring_core.data_structures import Element, MatrixRing, Modular, Product, RingHandle
from ..ring_core.engine import enumerate_elements, hom_image, jacobson_radical, ring_tables
from ..ring_core.errors import UnsupportedRingError, WitnessValidationError
from ..ring_core.matrices import is_integer_like
from .reports import DEFAULT_BUDGET, check_budget

VERIFIED = "verified-exhaustively"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class PropositionCheck:
    proposition_id: str
    ring: RingHandle
    status: str
    counterexample: Element | None = None
    checked: int = 0
    detail: str | None = None

    @property
    def failed(self) -> bool:
        return self.status == COUNTEREXAMPLE

    def to_dict(self) -> dict:
        out = {
            "proposition_id": self.proposition_id,
            "ring": self.ring.descriptor(),
            "status": self.status,
            "checked": self.checked,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.encode()
        if self.detail:
            out["detail"] = self.detail
        return out


def _elements(ring):
    return list(enumerate_elements(ring))


def _first_failure(ring, prop_id, test, detail=None) -> PropositionCheck:
    elements = _elements(ring)
    for a in elements:
        if not test(a):
            if test(a):
                raise WitnessValidationError(f"{prop_id}: {a} fails once and passes on re-check")
            return PropositionCheck(prop_id, ring, COUNTEREXAMPLE, a, len(elements), detail)
    return PropositionCheck(prop_id, ring, VERIFIED, None, len(elements), detail)


def check_clean_implies_clear(ring):
    return _first_failure(ring, "clean-implies-clear",
                          lambda a: not clean_witness(a).is_yes or clear_witness(a).is_yes)


def check_unit_regular_implies_clear(ring):
    def test(a):
        ur = unit_regular_witness(a)
        if not ur.is_yes:
            return True
        # the explicit a = u^-1 - e*u^-1 construction must validate as well
        return clear_witness(a).is_yes and ClearWitness.from_unit_regular(ur.witness).validate()
    return _first_failure(ring, "unit-regular-implies-clear", test)


def _common_modulus(ring: RingHandle) -> int:
    if isinstance(ring, Modular):
        return ring.n
    if isinstance(ring, MatrixRing):
        return _common_modulus(ring.base)
    if isinstance(ring, Product):
        return gcd(_common_modulus(ring.left), _common_modulus(ring.right))
    return 0


def check_hom_image(ring, moduli=None):
    """Clear witnesses pushed through reduction mod n (n dividing every modulus) stay clear witnesses."""
    m = _common_modulus(ring)
    candidates = [n for n in range(2, m) if m % n == 0] if moduli is None else [n for n in moduli if m and m % n == 0]
    if not candidates:
        return PropositionCheck("hom-image", ring, NOT_APPLICABLE, detail="no proper reduction map on this ring")
    elements = _elements(ring)
    for a in elements:
        verdict = clear_witness(a)
        if not verdict.is_yes:
            continue
        for n in candidates:
            if not map_witness(verdict.witness, lambda x: hom_image(x, n)).validate():
                return PropositionCheck("hom-image", ring, COUNTEREXAMPLE, a, len(elements), f"image mod {n} fails")
    return PropositionCheck("hom-image", ring, VERIFIED, None, len(elements), f"moduli {candidates}")


def _crt(x: int, p: int, y: int, q: int) -> int:
    return next(z for z in range(p * q) if z % p == x and z % q == y)


def check_direct_product(ring):
    """Clear-ness of (x, y) equals clear-ness of x and of y; paired witnesses validate. Coprime Z/p x Z/q also agrees with Z/pq."""
    if not isinstance(ring, Product):
        return PropositionCheck("direct-product", ring, NOT_APPLICABLE, detail="not a direct product")
    left, right = _elements(ring.left), _elements(ring.right)
    crt_ring = None
    if isinstance(ring.left, Modular) and isinstance(ring.right, Modular) and gcd(ring.left.n, ring.right.n) == 1:
        crt_ring = Modular(ring.left.n * ring.right.n)
    checked = 0
    for x, y in product(left, right):
        checked += 1
        a = Element(ring, (x.value, y.value))
        vx, vy, va = clear_witness(x), clear_witness(y), clear_witness(a)
        if va.is_yes != (vx.is_yes and vy.is_yes):
            return PropositionCheck("direct-product", ring, COUNTEREXAMPLE, a, checked)
        if vx.is_yes and vy.is_yes and not pair_witnesses(vx.witness, vy.witness, ring).validate():
            return PropositionCheck("direct-product", ring, COUNTEREXAMPLE, a, checked, "paired witness fails")
        if crt_ring is not None:
            z = Element(crt_ring, _crt(x.value, ring.left.n, y.value, ring.right.n))
            if clear_witness(z).is_yes != va.is_yes:
                return PropositionCheck("direct-product", ring, COUNTEREXAMPLE, a, checked, f"disagrees with {z} in {crt_ring}")
    detail = f"matches {crt_ring} under the CRT bijection" if crt_ring is not None else None
    return PropositionCheck("direct-product", ring, VERIFIED, None, checked, detail)


def check_unit_twisted_clean(ring):
    """a is clear iff u*a and a*u are both clean for one unit u."""
    def test(a):
        twisted = unit_twisted_clean(a)
        if clear_witness(a).is_yes != (twisted is not None):
            return False
        if twisted is not None:
            # back from u*a = e + v: a = u^-1 e + u^-1 v with u^-1 e unit-regular
            u, left, _ = twisted
            u_inv = u.inverse()
            r = u_inv * left.idempotent
            return r * u * r == r and r + u_inv * left.unit == a
        return True
    return _first_failure(ring, "unit-twisted-clean", test)


def check_ursr1_implies_clear(ring):
    stable = ursr1_test(ring)
    if not stable.holds:
        return PropositionCheck("ursr1-implies-clear", ring, VERIFIED, checked=stable.comaximal_pairs,
                                detail="premise fails: no unit-regular stable range 1")
    return _first_failure(ring, "ursr1-implies-clear", lambda a: clear_witness(a).is_yes,
                          f"{stable.comaximal_pairs} comaximal pairs")


def check_clear_implies_two_clean(ring):
    detail = None if ring.is_commutative() else "noncommutative ring: observed only"
    return _first_failure(ring, "clear-implies-2clean",
                          lambda a: not clear_witness(a).is_yes or two_clean_test(a).is_yes, detail)


def check_no_idempotents_two_good(ring):
    """
    Clear with no nontrivial idempotents iff every element is a unit or 2-good. When the ring
    has nontrivial idempotents only 'unit or 2-good everywhere => clear' is checked.
    """
    tables = ring_tables(ring)
    elements = _elements(ring)
    unit_or_two_good = all(unit_witness(a).is_yes or two_good_test(a).is_yes for a in elements)
    not_clear = next((a for a in elements if not clear_witness(a).is_yes), None)
    if tables.has_nontrivial_idempotents():
        if unit_or_two_good and not_clear is not None:
            return PropositionCheck("no-idempotents-2good", ring, COUNTEREXAMPLE, not_clear, len(elements))
        return PropositionCheck("no-idempotents-2good", ring, VERIFIED, None, len(elements),
                                "nontrivial idempotents present: one direction checked")
    if unit_or_two_good != (not_clear is None):
        witness = not_clear or next(a for a in elements if not (unit_witness(a).is_yes or two_good_test(a).is_yes))
        return PropositionCheck("no-idempotents-2good", ring, COUNTEREXAMPLE, witness, len(elements))
    return PropositionCheck("no-idempotents-2good", ring, VERIFIED, None, len(elements))


def _unit_entry_matrices(matrix_ring: MatrixRing):
    base = matrix_ring.base
    for a in enumerate_elements(matrix_ring):
        (_, q), (s, _) = a.value
        if base.inverse(q) is not None or base.inverse(s) is not None:
            yield a


def check_unit_entry_clean(ring):
    """2x2 matrices with a unit off-diagonal entry are clean; a non-matrix ring S is checked through M2(S)."""
    if isinstance(ring, MatrixRing):
        if ring.size != 2 or not ring.base.is_commutative():
            return PropositionCheck("unit-entry-clean", ring, NOT_APPLICABLE, detail="needs 2x2 over a commutative base")
        matrix_ring, exhaustive = ring, True
    elif ring.is_commutative():
        matrix_ring, exhaustive = MatrixRing(ring, 2), False
    else:
        return PropositionCheck("unit-entry-clean", ring, NOT_APPLICABLE, detail="needs a commutative base")
    checked = 0
    for a in _unit_entry_matrices(matrix_ring):
        checked += 1
        split = unit_entry_clean_split(a)
        if split is None or not split.validate():
            return PropositionCheck("unit-entry-clean", ring, COUNTEREXAMPLE, a, checked, "constructive split fails")
        if exhaustive and not clean_witness(a).is_yes:
            return PropositionCheck("unit-entry-clean", ring, COUNTEREXAMPLE, a, checked)
    detail = None if exhaustive else f"checked in {matrix_ring} by the constructive split"
    return PropositionCheck("unit-entry-clean", ring, VERIFIED, None, checked, detail)


def check_clean_implies_exchange(ring):
    return _first_failure(ring, "clean-implies-exchange",
                          lambda a: not clean_witness(a).is_yes or exchange_test(a).is_yes)


def check_local_implies_clear(ring):
    tables = ring_tables(ring)
    radical = jacobson_radical(ring).radical_elements
    non_units = {Element(ring, a) for a in tables.elements if a not in tables.units}
    if radical != non_units:
        return PropositionCheck("local-implies-clear", ring, NOT_APPLICABLE, detail="not a local ring")
    return _first_failure(ring, "local-implies-clear", lambda a: clear_witness(a).is_yes, "local ring")


def check_matrix_two_good(ring):
    if not (isinstance(ring, MatrixRing) and ring.size == 2):
        return PropositionCheck("matrix-2good", ring, NOT_APPLICABLE, detail="not a 2x2 matrix ring")

    def test(a):
        if not two_good_test(a).is_yes:
            return False
        return not is_integer_like(ring.base) or diagonal_two_good_split(a).validate()
    return _first_failure(ring, "matrix-2good", test)


def check_unit_regular_two_good(ring):
    """When 2 is a unit, a = e*w with e idempotent and w a unit splits as (1+e)*w + (-w)."""
    two = Element(ring, ring.from_int(2))
    if not two.is_unit():
        return PropositionCheck("unit-regular-2good", ring, NOT_APPLICABLE, detail="2 is not a unit")

    def test(a):
        ur = unit_regular_witness(a)
        if not ur.is_yes:
            return True
        e, w = ur.witness.idempotent_unit_factorization()
        first = (1 + e) * w
        inv = first.inverse()
        return inv is not None and TwoGoodWitness(a, first, inv, -w, -w.inverse()).validate()
    return _first_failure(ring, "unit-regular-2good", test)


PROPOSITIONS = {
    "clean-implies-clear": check_clean_implies_clear,
    "unit-regular-implies-clear": check_unit_regular_implies_clear,
    "hom-image": check_hom_image,
    "direct-product": check_direct_product,
    "unit-twisted-clean": check_unit_twisted_clean,
    "ursr1-implies-clear": check_ursr1_implies_clear,
    "clear-implies-2clean": check_clear_implies_two_clean,
    "no-idempotents-2good": check_no_idempotents_two_good,
    "unit-entry-clean": check_unit_entry_clean,
    "clean-implies-exchange": check_clean_implies_exchange,
    "local-implies-clear": check_local_implies_clear,
    "matrix-2good": check_matrix_two_good,
    "unit-regular-2good": check_unit_regular_two_good,
}

# the suite every catalog ring must pass
CORE_PROPOSITIONS = (
    "clean-implies-clear", "unit-regular-implies-clear", "clear-implies-2clean", "no-idempotents-2good",
    "unit-entry-clean", "clean-implies-exchange", "unit-twisted-clean", "ursr1-implies-clear",
)


# catalog ids accepted in place of the names above
PROPOSITION_ALIASES = {
    "P1-clean-implies-clear": "clean-implies-clear",
    "P2-unitregular-implies-clear": "unit-regular-implies-clear",
    "P4-hom-image": "hom-image",
    "P5-direct-product": "direct-product",
    "L6-ua-au": "unit-twisted-clean",
    "L7-ursr1-implies-clear": "ursr1-implies-clear",
    "P8-2clean": "clear-implies-2clean",
    "P109-no-idempotents": "no-idempotents-2good",
    "P2.1i-unit-entry-clean": "unit-entry-clean",
    "P2.1iii-clean-exchange": "clean-implies-exchange",
}


def resolve_proposition(proposition_id: str) -> str:
    name = PROPOSITION_ALIASES.get(proposition_id, proposition_id)
    if name not in PROPOSITIONS:
        choices = ", ".join([*PROPOSITIONS, *PROPOSITION_ALIASES])
        raise UnsupportedRingError(f"unknown proposition {proposition_id!r}; choose from {choices}")
    return name


def check_proposition(proposition_id: str, ring: RingHandle, budget: int = DEFAULT_BUDGET,
                      run_log: RunLog | None = None) -> PropositionCheck:
    proposition_id = resolve_proposition(proposition_id)
    run_log = run_log or quiet_log()
    check_budget(ring, budget)
    result = PROPOSITIONS[proposition_id](ring)
    run_log.record("proposition-checked", proposition=proposition_id, ring=ring.descriptor(), status=result.status)
    return result
