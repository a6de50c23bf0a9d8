"""
Element predicates: unit, idempotent, unit-regular, clean, clear, 2-good, 2-clean, exchange.

Finite rings are decided by exhaustive search over cached tables and the first witness
in enumeration order is reported. Z is decided analytically. M2(Z) uses the diagonal
reduction where it decides a property and a bounded search otherwise; a bounded search
never returns 'no'. Products with a Z factor combine the verdicts of their components.
"""
from ..decomposition.clear_decomp import (
    clear_decompose_full, diagonal_two_good_split, unit_entry_clean_split,
)
from ..ring_core.data_structures import Element, Integers, MatrixRing, Product, RingHandle, contains_integers
from ..ring_core.engine import require_finite, ring_tables
from ..ring_core.errors import InfiniteRingError, UnsupportedRingError
from ..smith.normal_form import fullness, smith_normal_form
from .integer_search import idempotent_candidates, integer_inverse, is_unit_regular_int, sub, unit_candidates
from .witnesses import (
    ANALYTIC, EXHAUSTIVE, CleanWitness, ClearWitness, ExchangeWitness, StableRangeResult, TriVerdict,
    TwoCleanWitness, TwoGoodWitness, UnitRegularWitness, UnitWitness, pair_witnesses,
)

DEFAULT_BOUND = 30

PROPERTIES = ("unit", "idempotent", "unit-regular", "clean", "clear", "2-good", "2-clean", "exchange")


def _is_integer_matrices(ring: RingHandle) -> bool:
    return isinstance(ring, MatrixRing) and ring.size == 2 and isinstance(ring.base, Integers)


def _is_finite(ring: RingHandle) -> bool:
    return not contains_integers(ring)


def _combine(prop: str, a: Element, decide) -> TriVerdict:
    left, right = a.components()
    lv, rv = decide(left), decide(right)
    if lv.is_yes and rv.is_yes:
        return TriVerdict.yes(prop, a, pair_witnesses(lv.witness, rv.witness, a.ring), "componentwise")
    for side, v in (("left", lv), ("right", rv)):
        if v.is_no:
            return TriVerdict.no(prop, a, ANALYTIC, f"{side} component is not {prop} ({v.refutation})")
    bound = lv.bound if lv.is_unknown else rv.bound
    return TriVerdict.unknown(prop, a, bound, "a component is undecided")


def _element(ring, raw) -> Element:
    return Element(ring, raw)


# units and idempotents

def unit_witness(a: Element) -> TriVerdict:
    ring = a.ring
    try:
        inv = ring.inverse(a.value)
    except UnsupportedRingError:
        return TriVerdict.unknown("unit", a, 0, f"units of {ring} are not decidable")
    if inv is not None:
        return TriVerdict.yes("unit", a, UnitWitness(a, _element(ring, inv)))
    if _is_finite(ring):
        return TriVerdict.no("unit", a, EXHAUSTIVE)
    return TriVerdict.no("unit", a, ANALYTIC, "determinant is not a unit" if isinstance(ring, MatrixRing) else "units of Z are 1 and -1")


def idempotent_test(a: Element) -> bool:
    return a * a == a


# unit-regular

def _finite_unit_regular(a: Element) -> TriVerdict:
    tables = ring_tables(a.ring)
    u = tables.inner_unit(a.value)
    if u is None:
        return TriVerdict.no("unit-regular", a, EXHAUSTIVE)
    return TriVerdict.yes("unit-regular", a, UnitRegularWitness(a, _element(a.ring, u), _element(a.ring, tables.units[u])))


def unit_regular_witness(a: Element) -> TriVerdict:
    ring = a.ring
    if _is_finite(ring):
        return _finite_unit_regular(a)
    if isinstance(ring, Integers):
        if a.value in (0, 1, -1):
            u = _element(ring, -1 if a.value == -1 else 1)
            return TriVerdict.yes("unit-regular", a, UnitRegularWitness(a, u, u))
        return TriVerdict.no("unit-regular", a, ANALYTIC, "a*u*a = a over Z forces a in {0, 1, -1}")
    if _is_integer_matrices(ring):
        one = _element(ring, ring.one())
        if idempotent_test(a):
            return TriVerdict.yes("unit-regular", a, UnitRegularWitness(a, one, one), "idempotent")
        form = smith_normal_form(a)
        if form.d1 in (0, 1) and form.d2 in (0, 1):
            # P*a*Q = D with D*D = D, so Q*P is an inner unit
            witness = UnitRegularWitness(a, form.Q * form.P, form.P.inverse() * form.Q.inverse())
            return TriVerdict.yes("unit-regular", a, witness, f"invariant factors ({form.d1}, {form.d2})")
        return TriVerdict.no("unit-regular", a, ANALYTIC, f"invariant factors ({form.d1}, {form.d2}) are not all 0 or 1")
    if isinstance(ring, Product):
        return _combine("unit-regular", a, unit_regular_witness)
    if idempotent_test(a) or a.is_unit():
        inner = _element(ring, ring.one()) if idempotent_test(a) else a.inverse()
        return TriVerdict.yes("unit-regular", a, UnitRegularWitness(a, inner, inner.inverse()))
    return TriVerdict.unknown("unit-regular", a, 0, f"no decision procedure for {ring}")


# clean

def _unit_pair(x: Element):
    try:
        inv = x.inverse()
    except UnsupportedRingError:
        return None
    return (x, inv) if inv is not None else None


def _cheap_clean(a: Element) -> CleanWitness | None:
    ring = a.ring
    for e in (_element(ring, ring.zero()), _element(ring, ring.one())):
        pair = _unit_pair(a - e)
        if pair:
            return CleanWitness(a, e, *pair)
    return None


def _search_clean_integer_matrix(a: Element, bound: int) -> CleanWitness | None:
    ring = a.ring
    for E in idempotent_candidates(bound):
        U = sub(a.value, E)
        U_inv = integer_inverse(U)
        if U_inv is not None:
            return CleanWitness(a, _element(ring, E), _element(ring, U), _element(ring, U_inv))
    return None


def clean_witness(a: Element, bound: int = DEFAULT_BOUND) -> TriVerdict:
    ring = a.ring
    if _is_finite(ring):
        tables = ring_tables(ring)
        for e in tables.idempotents:
            u = ring.sub(a.value, e)
            if u in tables.units:
                return TriVerdict.yes("clean", a, CleanWitness(a, _element(ring, e), _element(ring, u), _element(ring, tables.units[u])))
        return TriVerdict.no("clean", a, EXHAUSTIVE)
    if isinstance(ring, Integers):
        w = _cheap_clean(a)
        if w:
            return TriVerdict.yes("clean", a, w)
        return TriVerdict.no("clean", a, ANALYTIC, "idempotents of Z are 0, 1 and units are 1, -1")
    if _is_integer_matrices(ring):
        w = unit_entry_clean_split(a)
        if w:
            return TriVerdict.yes("clean", a, w, "unit off-diagonal entry")
        w = _search_clean_integer_matrix(a, bound)
        if w:
            return TriVerdict.yes("clean", a, w, f"idempotent search within bound {bound}")
        return TriVerdict.unknown("clean", a, bound, "no idempotent within the bound leaves a unit")
    if isinstance(ring, Product):
        return _combine("clean", a, lambda x: clean_witness(x, bound))
    w = _cheap_clean(a)
    if w:
        return TriVerdict.yes("clean", a, w)
    return TriVerdict.unknown("clean", a, bound, f"no decision procedure for {ring}")


# clear

def _finite_clear(a: Element) -> TriVerdict:
    ring = a.ring
    tables = ring_tables(ring)
    # units are scanned from the end of the enumeration; nontrivial parts are preferred
    for nontrivial_only in (True, False):
        for u in reversed(tables.unit_list):
            r = ring.sub(a.value, u)
            v = tables.inner_unit(r)
            if v is None:
                continue
            if nontrivial_only and (r == tables.zero or r in tables.units):
                continue
            part = UnitRegularWitness(_element(ring, r), _element(ring, v), _element(ring, tables.units[v]))
            witness = ClearWitness.build(a, part, _element(ring, u), _element(ring, tables.units[u]))
            return TriVerdict.yes("clear", a, witness)
    return TriVerdict.no("clear", a, EXHAUSTIVE)


def _integer_clear(a: Element) -> TriVerdict:
    ring = a.ring
    for u in (-1, 1):
        r = a.value - u
        if r in (0, 1, -1):
            inner = -1 if r == -1 else 1
            part = UnitRegularWitness(_element(ring, r), _element(ring, inner), _element(ring, inner))
            unit = _element(ring, u)
            return TriVerdict.yes("clear", a, ClearWitness.build(a, part, unit, unit))
    return TriVerdict.no("clear", a, ANALYTIC, "unit-regular elements of Z are 0, 1, -1 and units are 1, -1")


def _integer_matrix_clear(a: Element, bound: int) -> TriVerdict:
    ring = a.ring
    ur = unit_regular_witness(a)
    if ur.is_yes:
        return TriVerdict.yes("clear", a, ClearWitness.from_unit_regular(ur.witness), "unit-regular: a = u^-1 - e*u^-1")
    if fullness(a).is_full:
        return TriVerdict.yes("clear", a, clear_decompose_full(a).as_clear_witness(), "full matrix decomposition")
    clean = clean_witness(a, bound)
    if clean.is_yes:
        return TriVerdict.yes("clear", a, ClearWitness.from_clean(clean.witness), "clean")
    for U in unit_candidates(bound):
        R = sub(a.value, U)
        if is_unit_regular_int(R):
            r = _element(ring, R)
            part = unit_regular_witness(r).witness
            return TriVerdict.yes("clear", a, ClearWitness.build(a, part, _element(ring, U), _element(ring, integer_inverse(U))), f"unit search within bound {bound}")
    return TriVerdict.unknown("clear", a, bound, "no unit within the bound leaves a unit-regular part")


def clear_witness(a: Element, bound: int = DEFAULT_BOUND) -> TriVerdict:
    ring = a.ring
    if _is_finite(ring):
        return _finite_clear(a)
    if isinstance(ring, Integers):
        return _integer_clear(a)
    if _is_integer_matrices(ring):
        return _integer_matrix_clear(a, bound)
    if isinstance(ring, Product):
        return _combine("clear", a, lambda x: clear_witness(x, bound))
    w = _cheap_clean(a)
    if w:
        return TriVerdict.yes("clear", a, ClearWitness.from_clean(w), "clean")
    return TriVerdict.unknown("clear", a, bound, f"no decision procedure for {ring}")


# 2-good and 2-clean

def two_good_test(a: Element, bound: int = DEFAULT_BOUND) -> TriVerdict:
    ring = a.ring
    if _is_finite(ring):
        tables = ring_tables(ring)
        for u in tables.unit_list:
            v = ring.sub(a.value, u)
            if v in tables.units:
                return TriVerdict.yes("2-good", a, TwoGoodWitness(
                    a, _element(ring, u), _element(ring, tables.units[u]), _element(ring, v), _element(ring, tables.units[v])))
        return TriVerdict.no("2-good", a, EXHAUSTIVE)
    if isinstance(ring, Integers):
        for u in (1, -1):
            v = a.value - u
            if v in (1, -1):
                x, y = _element(ring, u), _element(ring, v)
                return TriVerdict.yes("2-good", a, TwoGoodWitness(a, x, x, y, y))
        return TriVerdict.no("2-good", a, ANALYTIC, "sums of two units of Z are -2, 0, 2")
    if _is_integer_matrices(ring):
        return TriVerdict.yes("2-good", a, diagonal_two_good_split(a), "diagonal split through the Smith transforms")
    if isinstance(ring, Product):
        return _combine("2-good", a, lambda x: two_good_test(x, bound))
    return TriVerdict.unknown("2-good", a, bound, f"no decision procedure for {ring}")


def two_clean_test(a: Element, bound: int = DEFAULT_BOUND) -> TriVerdict:
    ring = a.ring
    if _is_finite(ring):
        tables = ring_tables(ring)
        for e in tables.idempotents:
            rest = ring.sub(a.value, e)
            for u in tables.unit_list:
                v = ring.sub(rest, u)
                if v in tables.units:
                    return TriVerdict.yes("2-clean", a, TwoCleanWitness(
                        a, _element(ring, e), _element(ring, u), _element(ring, tables.units[u]),
                        _element(ring, v), _element(ring, tables.units[v])))
        return TriVerdict.no("2-clean", a, EXHAUSTIVE)
    if isinstance(ring, Integers):
        for e in (0, 1):
            for u in (1, -1):
                v = a.value - e - u
                if v in (1, -1):
                    x, y = _element(ring, u), _element(ring, v)
                    return TriVerdict.yes("2-clean", a, TwoCleanWitness(a, _element(ring, e), x, x, y, y))
        return TriVerdict.no("2-clean", a, ANALYTIC, "idempotent plus two units of Z lies in [-2, 3]")
    if _is_integer_matrices(ring):
        split = diagonal_two_good_split(a)
        zero = _element(ring, ring.zero())
        return TriVerdict.yes("2-clean", a, TwoCleanWitness(
            a, zero, split.first_unit, split.first_inverse, split.second_unit, split.second_inverse), "idempotent 0 plus a 2-good split")
    if isinstance(ring, Product):
        return _combine("2-clean", a, lambda x: two_clean_test(x, bound))
    clean = clean_witness(a, bound)
    if clean.is_yes:
        w = clean.witness
        two = two_good_test(w.unit, bound)
        if two.is_yes:
            t = two.witness
            return TriVerdict.yes("2-clean", a, TwoCleanWitness(
                a, w.idempotent, t.first_unit, t.first_inverse, t.second_unit, t.second_inverse))
    return TriVerdict.unknown("2-clean", a, bound, f"no decision procedure for {ring}")


# exchange and stable range

def exchange_test(a: Element) -> TriVerdict:
    ring = a.ring
    require_finite(ring)
    tables = ring_tables(ring)
    one_minus_a = ring.sub(tables.one, a.value)
    in_aR = tables.right_ideal(a.value)
    in_complement = tables.right_ideal(one_minus_a)
    for e in tables.idempotents:
        f = ring.sub(tables.one, e)
        if e in in_aR and f in in_complement:
            witness = ExchangeWitness(a, _element(ring, e), _element(ring, in_aR[e]), _element(ring, in_complement[f]))
            return TriVerdict.yes("exchange", a, witness)
    return TriVerdict.no("exchange", a, EXHAUSTIVE)


def ursr1_test(ring: RingHandle, side: str = "right") -> StableRangeResult:
    """
    For every (a, b) with aR + bR = R, some unit-regular r makes a + b*r a unit.
    side="left" checks the mirror condition: Ra + Rb = R and a + r*b a unit.
    """
    if side not in ("right", "left"):
        raise UnsupportedRingError(f"side must be 'right' or 'left', got {side!r}")
    tables = ring_tables(ring)
    regular = list(tables.unit_regular)
    ideal_of = tables.right_ideal if side == "right" else tables.left_ideal
    ideals = {a: frozenset(ideal_of(a)) for a in tables.elements}
    comaximal_cache = {}
    pairs = 0
    for a in tables.elements:
        for b in tables.elements:
            key = (ideals[a], ideals[b])
            if key not in comaximal_cache:
                comaximal_cache[key] = any(ring.sub(tables.one, x) in key[1] for x in key[0])
            if not comaximal_cache[key]:
                continue
            pairs += 1
            if side == "right":
                found = any(ring.add(a, ring.mul(b, r)) in tables.units for r in regular)
            else:
                found = any(ring.add(a, ring.mul(r, b)) in tables.units for r in regular)
            if not found:
                return StableRangeResult(ring.descriptor(), False, pairs, (_element(ring, a), _element(ring, b)))
    return StableRangeResult(ring.descriptor(), True, pairs)


def unit_twisted_clean(a: Element):
    """First unit u with u*a and a*u both clean, as (u, clean(u*a), clean(a*u)); None if there is none."""
    ring = a.ring
    tables = ring_tables(ring)
    for u in tables.unit_list:
        unit = _element(ring, u)
        left, right = clean_witness(unit * a), clean_witness(a * unit)
        if left.is_yes and right.is_yes:
            return unit, left.witness, right.witness
    return None


_DISPATCH = {
    "unit": lambda a, bound: unit_witness(a),
    "unit-regular": lambda a, bound: unit_regular_witness(a),
    "clean": clean_witness,
    "clear": clear_witness,
    "2-good": two_good_test,
    "2-clean": two_clean_test,
    "exchange": lambda a, bound: exchange_test(a),
}


def classify_element(a: Element, prop: str, bound: int = DEFAULT_BOUND) -> TriVerdict:
    """Single entry point used by the command line."""
    if prop == "idempotent":
        if idempotent_test(a):
            one = _element(a.ring, a.ring.one())
            return TriVerdict.yes("idempotent", a, UnitRegularWitness(a, one, one), "a*a = a")
        refutation = EXHAUSTIVE if _is_finite(a.ring) else ANALYTIC
        return TriVerdict.no("idempotent", a, refutation, "a*a differs from a")
    if prop not in _DISPATCH:
        raise UnsupportedRingError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")
    if prop == "exchange" and not _is_finite(a.ring):
        raise InfiniteRingError(a.ring.descriptor())
    return _DISPATCH[prop](a, bound)
