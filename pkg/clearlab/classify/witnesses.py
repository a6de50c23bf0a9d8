"""
Witness records and the tri-valued verdict.

Every witness re-checks itself with ring arithmetic alone (validate()); a Yes verdict
cannot be built around a witness that fails that check.
"""
from dataclasses import dataclass, fields, replace
from enum import Enum

from ..ring_core.data_structures import Element, Product, contains_integers
from ..ring_core.errors import WitnessValidationError

EXHAUSTIVE = "exhaustive-enumeration"
ANALYTIC = "analytic-oracle"


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def _encode(value):
    if isinstance(value, Element):
        return value.encode()
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


class _Witness:
    def validate(self) -> bool:
        raise NotImplementedError

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        for f in fields(self):
            out[f.name] = _encode(getattr(self, f.name))
        return out


def _two_sided_inverse(u: Element, u_inv: Element) -> bool:
    return (u * u_inv).is_one() and (u_inv * u).is_one()


@dataclass(frozen=True)
class UnitWitness(_Witness):
    element: Element
    inverse: Element
    kind = "unit"

    def validate(self) -> bool:
        return _two_sided_inverse(self.element, self.inverse)


@dataclass(frozen=True)
class UnitRegularWitness(_Witness):
    element: Element
    inner_unit: Element
    inverse_of_inner_unit: Element
    kind = "unit-regular"

    def validate(self) -> bool:
        a, u = self.element, self.inner_unit
        return a * u * a == a and _two_sided_inverse(u, self.inverse_of_inner_unit)

    def idempotent_unit_factorization(self) -> tuple[Element, Element]:
        """(e, w) with e idempotent, w a unit and element = e*w."""
        e = self.element * self.inner_unit
        return e, self.inverse_of_inner_unit


@dataclass(frozen=True)
class CleanWitness(_Witness):
    element: Element
    idempotent: Element
    unit: Element
    unit_inverse: Element
    kind = "clean"

    def validate(self) -> bool:
        e = self.idempotent
        return e * e == e and _two_sided_inverse(self.unit, self.unit_inverse) and e + self.unit == self.element


def is_nontrivial_part(r: Element) -> bool:
    return not r.is_zero() and not r.is_unit()


@dataclass(frozen=True)
class ClearWitness(_Witness):
    element: Element
    unit_regular_part: UnitRegularWitness
    unit: Element
    unit_inverse: Element
    nontrivial: bool
    kind = "clear"

    @property
    def r(self) -> Element:
        return self.unit_regular_part.element

    def validate(self) -> bool:
        return (
            self.unit_regular_part.validate()
            and _two_sided_inverse(self.unit, self.unit_inverse)
            and self.r + self.unit == self.element
            and self.nontrivial == is_nontrivial_part(self.r)
        )

    @classmethod
    def build(cls, element: Element, part: UnitRegularWitness, unit: Element, unit_inverse: Element):
        return cls(element, part, unit, unit_inverse, is_nontrivial_part(part.element))

    @classmethod
    def from_clean(cls, w: CleanWitness) -> "ClearWitness":
        # idempotents are unit-regular with inner unit 1
        one = w.element.ring.one()
        part = UnitRegularWitness(w.idempotent, Element(w.element.ring, one), Element(w.element.ring, one))
        return cls.build(w.element, part, w.unit, w.unit_inverse)

    @classmethod
    def from_unit_regular(cls, w: UnitRegularWitness) -> "ClearWitness":
        """a = u^-1 - e*u^-1 with e = 1 - a*u; the part -e*u^-1 has inner unit -u."""
        a, u, u_inv = w.element, w.inner_unit, w.inverse_of_inner_unit
        e = 1 - a * u
        part = UnitRegularWitness(-(e * u_inv), -u, -u_inv)
        return cls.build(a, part, u_inv, u)


@dataclass(frozen=True)
class TwoGoodWitness(_Witness):
    element: Element
    first_unit: Element
    first_inverse: Element
    second_unit: Element
    second_inverse: Element
    kind = "2-good"

    def validate(self) -> bool:
        return (
            _two_sided_inverse(self.first_unit, self.first_inverse)
            and _two_sided_inverse(self.second_unit, self.second_inverse)
            and self.first_unit + self.second_unit == self.element
        )


@dataclass(frozen=True)
class TwoCleanWitness(_Witness):
    element: Element
    idempotent: Element
    first_unit: Element
    first_inverse: Element
    second_unit: Element
    second_inverse: Element
    kind = "2-clean"

    def validate(self) -> bool:
        e = self.idempotent
        return (
            e * e == e
            and _two_sided_inverse(self.first_unit, self.first_inverse)
            and _two_sided_inverse(self.second_unit, self.second_inverse)
            and e + self.first_unit + self.second_unit == self.element
        )


@dataclass(frozen=True)
class ExchangeWitness(_Witness):
    element: Element
    idempotent: Element
    x: Element
    y: Element
    kind = "exchange"

    def validate(self) -> bool:
        a, e = self.element, self.idempotent
        return e * e == e and a * self.x == e and (1 - a) * self.y == 1 - e


def map_witness(witness, fn):
    """Apply fn to every Element inside a witness (a ring homomorphism, typically)."""
    changes = {}
    for f in fields(witness):
        value = getattr(witness, f.name)
        if isinstance(value, Element):
            changes[f.name] = fn(value)
        elif isinstance(value, _Witness):
            changes[f.name] = map_witness(value, fn)
    mapped = replace(witness, **changes)
    if isinstance(mapped, ClearWitness):
        mapped = replace(mapped, nontrivial=is_nontrivial_part(mapped.r))
    return mapped


def pair_witnesses(left, right, ring: Product):
    """Componentwise witness over left x right from witnesses of the same kind on each side."""
    if type(left) is not type(right):
        raise WitnessValidationError(f"cannot pair a {left.kind} witness with a {right.kind} witness")
    changes = {}
    for f in fields(left):
        lv, rv = getattr(left, f.name), getattr(right, f.name)
        if isinstance(lv, Element):
            changes[f.name] = Element(ring, (lv.value, rv.value))
        elif isinstance(lv, _Witness):
            changes[f.name] = pair_witnesses(lv, rv, ring)
    paired = replace(left, **changes)
    if isinstance(paired, ClearWitness):
        paired = replace(paired, nontrivial=is_nontrivial_part(paired.r))
    return paired


@dataclass(frozen=True)
class TriVerdict:
    property: str
    element: Element
    verdict: Verdict
    witness: object = None
    refutation: str | None = None
    bound: int | None = None
    detail: str | None = None

    def __post_init__(self):
        if self.verdict is Verdict.YES:
            if self.witness is None or not self.witness.validate():
                raise WitnessValidationError(f"{self.property} witness for {self.element} failed to validate")
        elif self.verdict is Verdict.NO:
            if self.refutation not in (EXHAUSTIVE, ANALYTIC):
                raise WitnessValidationError(f"a 'no' verdict needs a refutation kind, got {self.refutation!r}")
            if self.refutation == EXHAUSTIVE and contains_integers(self.element.ring):
                raise WitnessValidationError(f"exhaustive refutation claimed over infinite ring {self.element.ring}")
        elif self.bound is None:
            raise WitnessValidationError("an 'unknown' verdict must carry the exhausted bound")

    @classmethod
    def yes(cls, prop: str, element: Element, witness, detail: str | None = None) -> "TriVerdict":
        return cls(prop, element, Verdict.YES, witness=witness, detail=detail)

    @classmethod
    def no(cls, prop: str, element: Element, refutation: str, detail: str | None = None) -> "TriVerdict":
        return cls(prop, element, Verdict.NO, refutation=refutation, detail=detail)

    @classmethod
    def unknown(cls, prop: str, element: Element, bound: int, detail: str | None = None) -> "TriVerdict":
        return cls(prop, element, Verdict.UNKNOWN, bound=bound, detail=detail)

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def is_no(self) -> bool:
        return self.verdict is Verdict.NO

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def __bool__(self):
        return self.is_yes

    def to_dict(self) -> dict:
        out = {
            "property": self.property,
            "ring": self.element.ring.descriptor(),
            "element": self.element.encode(),
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.refutation is not None:
            out["refutation"] = self.refutation
        if self.bound is not None:
            out["bound"] = self.bound
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class StableRangeResult:
    """Outcome of the unit-regular stable range 1 test; a failing (a, b) pair when it does not hold."""
    ring_descriptor: str
    holds: bool
    comaximal_pairs: int
    counterexample: tuple[Element, Element] | None = None

    def __bool__(self):
        return self.holds

    def to_dict(self):
        out = {"ring": self.ring_descriptor, "holds": self.holds, "comaximal_pairs": self.comaximal_pairs}
        if self.counterexample is not None:
            out["counterexample"] = [x.encode() for x in self.counterexample]
        return out
