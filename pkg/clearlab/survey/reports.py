"""Ring-level classification: one RingReport per finite ring, and the Z/n survey table."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from sympy import factorint

from ..classify.predicates import (
    clean_witness, clear_witness, exchange_test, two_clean_test, two_good_test, unit_regular_witness, ursr1_test,
)
from ..reporting.run_log import RunLog, quiet_log
from ..ring_core.data_structures import Element, Modular, RingHandle, ring_size
from ..ring_core.engine import enumerate_elements, jacobson_radical, ring_tables
from ..ring_core.errors import BudgetExceededError, DescriptorError, ImplicationViolationError

DEFAULT_BUDGET = 4096

FLAG_NAMES = (
    "is_clean_ring", "is_clear_ring", "is_unit_regular_ring", "is_2good_ring", "is_2clean_ring",
    "is_exchange_ring", "has_ursr1", "is_semisimple", "has_nontrivial_idempotents",
)

_ELEMENT_FLAGS = {
    "is_unit_regular_ring": unit_regular_witness,
    "is_clean_ring": clean_witness,
    "is_clear_ring": clear_witness,
    "is_2good_ring": two_good_test,
    "is_2clean_ring": two_clean_test,
    "is_exchange_ring": exchange_test,
}


@dataclass(frozen=True)
class RingReport:
    ring: RingHandle
    cardinality: int
    flags: dict
    # flag name -> first failing element (has_ursr1: the failing (a, b) pair)
    counterexamples: dict = field(default_factory=dict)

    def __post_init__(self):
        for premise in ("is_clean_ring", "is_unit_regular_ring"):
            if self.flags[premise] and not self.flags["is_clear_ring"]:
                raise ImplicationViolationError(
                    f"{self.ring.descriptor()}: {premise} holds but is_clear_ring fails at {self.counterexamples.get('is_clear_ring')}"
                )

    def __getattr__(self, name):
        if name in FLAG_NAMES:
            return self.flags[name]
        raise AttributeError(name)

    def lattice_holds(self) -> bool:
        """unit-regular => clean => clear => 2-clean, ring-wise."""
        f = self.flags
        chain = ("is_unit_regular_ring", "is_clean_ring", "is_clear_ring", "is_2clean_ring")
        return all(not f[p] or f[q] for p, q in zip(chain, chain[1:]))

    def to_dict(self) -> dict:
        counterexamples = {}
        for name, value in self.counterexamples.items():
            counterexamples[name] = [v.encode() for v in value] if isinstance(value, tuple) else value.encode()
        return {
            "ring": self.ring.descriptor(),
            "cardinality": self.cardinality,
            "flags": dict(self.flags),
            "counterexamples": counterexamples,
        }


def check_budget(ring: RingHandle, budget: int) -> int:
    size = ring_size(ring)
    if size > budget:
        raise BudgetExceededError(ring.descriptor(), size, budget)
    return size


def classify_ring(ring: RingHandle, budget: int = DEFAULT_BUDGET, run_log: RunLog | None = None) -> RingReport:
    run_log = run_log or quiet_log()
    size = check_budget(ring, budget)
    tables = ring_tables(ring)
    flags, counterexamples = {}, {}
    for name, predicate in _ELEMENT_FLAGS.items():
        failing = next((a for a in enumerate_elements(ring) if not predicate(a).is_yes), None)
        flags[name] = failing is None
        if failing is not None:
            counterexamples[name] = failing
    stable = ursr1_test(ring)
    flags["has_ursr1"] = stable.holds
    if stable.counterexample is not None:
        counterexamples["has_ursr1"] = stable.counterexample
    flags["is_semisimple"] = jacobson_radical(ring).is_semisimple
    flags["has_nontrivial_idempotents"] = tables.has_nontrivial_idempotents()
    report = RingReport(ring, size, flags, counterexamples)
    run_log.record("ring-classified", ring=ring.descriptor(), cardinality=size,
                   clear=flags["is_clear_ring"], unit_regular=flags["is_unit_regular_ring"])
    return report


def is_squarefree(n: int) -> bool:
    return all(exp == 1 for exp in factorint(n).values())


@dataclass(frozen=True)
class SurveyTable:
    n_max: int
    rows: tuple
    # n where is_unit_regular_ring disagrees with squarefreeness
    squarefree_mismatches: tuple
    # n where the unit-regular => clean => clear => 2-clean chain breaks
    lattice_violations: tuple

    @property
    def ok(self) -> bool:
        return not self.squarefree_mismatches and not self.lattice_violations

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "rows": [row.to_dict() for row in self.rows],
            "squarefree_mismatches": list(self.squarefree_mismatches),
            "lattice_violations": list(self.lattice_violations),
        }


def _zn_row(n: int, budget: int) -> RingReport:
    return classify_ring(Modular(n), budget)


def survey_zn(n_max: int, budget: int = DEFAULT_BUDGET, workers: int = 1, run_log: RunLog | None = None) -> SurveyTable:
    if isinstance(n_max, bool) or not isinstance(n_max, int) or not 2 <= n_max <= 512:
        raise DescriptorError(f"n_max must be an integer between 2 and 512, got {n_max!r}")
    run_log = run_log or quiet_log()
    moduli = list(range(2, n_max + 1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_zn_row, moduli, [budget] * len(moduli)))
    else:
        rows = [_zn_row(n, budget) for n in moduli]
    mismatches, violations = [], []
    for n, row in zip(moduli, rows):
        run_log.record("survey-row", n=n, clean=row.is_clean_ring, clear=row.is_clear_ring,
                       unit_regular=row.is_unit_regular_ring)
        if row.is_unit_regular_ring != is_squarefree(n):
            mismatches.append(n)
        if not row.lattice_holds():
            violations.append(n)
    return SurveyTable(n_max, tuple(rows), tuple(mismatches), tuple(violations))


def element_lattice_violations(ring: RingHandle) -> list[tuple[str, Element]]:
    """Element-wise breaks of unit-regular => clean => clear => 2-clean (the last link checked on commutative rings)."""
    found = []
    for a in enumerate_elements(ring):
        ur, cl, cr = unit_regular_witness(a).is_yes, clean_witness(a).is_yes, clear_witness(a).is_yes
        if ur and not cr:
            found.append(("unit-regular but not clear", a))
        if cl and not cr:
            found.append(("clean but not clear", a))
        if ring.is_commutative() and ur and not cl:
            found.append(("unit-regular but not clean", a))
        if ring.is_commutative() and cr and not two_clean_test(a).is_yes:
            found.append(("clear but not 2-clean", a))
    return found
