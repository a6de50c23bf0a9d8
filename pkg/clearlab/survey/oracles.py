"""
Oracles over Z: the non-cleanness certificate for row matrices, the seeded forward check
for full nonsingular matrices, hom-image coherence of decompositions, the catalog loader,
and the survey of the two open questions.
"""
import random
from dataclasses import dataclass, field
from pathlib import Path

from ..classify.predicates import ursr1_test
from ..classify.witnesses import CleanWitness
from ..decomposition.clear_decomp import (
    clear_decompose_full, principal_ideal_idempotents, reduce_decomposition, verify_clear_decomposition,
)
from ..reporting.run_log import RunLog, quiet_log
from ..ring_core.data_structures import Integers, MatrixRing, RingHandle
from ..ring_core.descriptor import parse_ring
from ..ring_core.errors import ClearLabError, DescriptorError
from ..smith.normal_form import fullness
from .reports import DEFAULT_BUDGET, classify_ring

M2Z = MatrixRing(Integers(), 2)


@dataclass(frozen=True)
class OracleCandidate:
    c: int
    d: int
    det: int
    a: int
    # b = a*d / c must be an integer for E = [[a,b],[c,d]] to exist
    b_numerator: int
    integral: bool

    def to_dict(self):
        return {"c": str(self.c), "d": str(self.d), "det": str(self.det), "a": str(self.a),
                "b_numerator": str(self.b_numerator), "integral": self.integral}


@dataclass(frozen=True)
class OracleReport:
    p: int
    q: int
    c_bound: int
    d_bound: int
    direct: tuple
    candidates: tuple
    witnesses: tuple

    @property
    def all_refuted(self) -> bool:
        return not self.witnesses

    def to_dict(self):
        return {
            "matrix": [[str(self.p), str(self.q)], ["0", "0"]],
            "c_bound": self.c_bound,
            "d_bound": self.d_bound,
            "direct_refutations": [{"idempotent": label, "det": str(det), "refuted": det not in (1, -1)} for label, det in self.direct],
            "candidates": [c.to_dict() for c in self.candidates],
            "clean_witnesses": [w.to_dict() for w in self.witnesses],
            "all_refuted": self.all_refuted,
        }


def row_matrix_clean_oracle(p: int, q: int, c_bound: int, d_bound: int) -> OracleReport:
    """
    Clean splits of [[p,q],[0,0]] over Z. An idempotent is 0, I, or E = [[a,b],[c,d]] with
    a + d = 1 and ad = bc; then det(A - E) = q*c - p*d, so every candidate (c, d) solves
    q*c - p*d = +-1 and still needs b = a*d / c to be an integer.
    """
    if c_bound < 1 or d_bound < 1:
        raise DescriptorError(f"oracle bounds must be at least 1, got ({c_bound}, {d_bound})")
    A = M2Z.element(((p, q), (0, 0)))
    direct = (("0", 0), ("I", 1 - p))
    witnesses = []
    for label, det in direct:
        if det in (1, -1):
            E = M2Z.element(((0, 0), (0, 0)) if label == "0" else ((1, 0), (0, 1)))
            U = A - E
            witnesses.append(CleanWitness(A, E, U, U.inverse()))
    candidates = []
    for c in range(-c_bound, c_bound + 1):
        for d in range(-d_bound, d_bound + 1):
            det = q * c - p * d
            if det not in (1, -1):
                continue
            a = 1 - d
            numerator = a * d
            if c == 0:
                # ad = 0 forces a or d to vanish, b is then free and 0 will do
                integral, b = numerator == 0, 0
            else:
                integral, b = numerator % c == 0, numerator // c if numerator % c == 0 else None
            candidates.append(OracleCandidate(c, d, det, a, numerator, integral))
            if integral:
                E = M2Z.element(((a, b), (c, d)))
                U = A - E
                witnesses.append(CleanWitness(A, E, U, U.inverse()))
    return OracleReport(p, q, c_bound, d_bound, direct, tuple(candidates), tuple(witnesses))


def non_clean_oracle_12_5(c_bound: int = 100, d_bound: int = 100) -> OracleReport:
    return row_matrix_clean_oracle(12, 5, c_bound, d_bound)


def _random_matrix(rng: random.Random, bound: int):
    return M2Z.element([[rng.randint(-bound, bound) for _ in range(2)] for _ in range(2)])


def full_nonsingular_samples(samples: int, seed: int, entry_bound: int, run_log: RunLog | None = None):
    """
    Seeded generator of full nonsingular matrices over Z, entries uniform in [-bound, bound].
    Returns (matrices, rejected_not_full, rejected_singular).
    """
    if samples < 1 or entry_bound < 1:
        raise DescriptorError(f"samples and entry bound must be at least 1, got ({samples}, {entry_bound})")
    run_log = run_log or quiet_log()
    rng = random.Random(seed)
    accepted, not_full, singular = [], 0, 0
    attempts_left = 1000 * samples
    while len(accepted) < samples:
        attempts_left -= 1
        if attempts_left < 0:
            raise ClearLabError(f"gave up after {1000 * samples} draws with {len(accepted)} accepted samples")
        A = _random_matrix(rng, entry_bound)
        verdict = fullness(A)
        if not verdict.is_full:
            not_full += 1
        elif not verdict.is_nonsingular:
            singular += 1
        else:
            accepted.append(A)
    run_log.record("samples-generated", accepted=len(accepted), rejected_not_full=not_full,
                   rejected_singular=singular, seed=seed, entry_bound=entry_bound)
    return accepted, not_full, singular


@dataclass(frozen=True)
class ForwardCheckReport:
    samples: int
    seed: int
    entry_bound: int
    passed: int
    nontrivial: int
    ideal_idempotents_ok: int
    rejected_not_full: int
    rejected_singular: int
    # (matrix, failed clause) for each failure
    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.passed == self.samples and self.nontrivial == self.samples and not self.failures

    def to_dict(self):
        return {
            "samples": self.samples,
            "seed": self.seed,
            "entry_bound": self.entry_bound,
            "passed": self.passed,
            "nontrivial": self.nontrivial,
            "ideal_idempotents_ok": self.ideal_idempotents_ok,
            "rejected_not_full": self.rejected_not_full,
            "rejected_singular": self.rejected_singular,
            "semisimple_base": "J(Z) = 0",
            "failures": [{"A": a.encode(), "clause": clause} for a, clause in self.failures],
        }


def elementary_divisor_forward_check(samples: int, seed: int, entry_bound: int,
                                     run_log: RunLog | None = None) -> ForwardCheckReport:
    """Z is an elementary divisor ring, so every full nonsingular 2x2 matrix must come out nontrivially clear."""
    run_log = run_log or quiet_log()
    matrices, not_full, singular = full_nonsingular_samples(samples, seed, entry_bound, run_log)
    passed = nontrivial = ideals_ok = 0
    failures = []
    for A in matrices:
        decomposition = clear_decompose_full(A)
        check = verify_clear_decomposition(decomposition)
        if not check:
            failures.append((A, check.failed_clause))
            continue
        passed += 1
        if decomposition.nontrivial:
            nontrivial += 1
        else:
            failures.append((A, "trivial decomposition"))
        if principal_ideal_idempotents(A).validate(A):
            ideals_ok += 1
        else:
            failures.append((A, "no nontrivial idempotent in the principal one-sided ideals"))
    report = ForwardCheckReport(samples, seed, entry_bound, passed, nontrivial, ideals_ok, not_full, singular, tuple(failures))
    run_log.record("forward-check", samples=samples, passed=passed, failures=len(failures))
    return report


@dataclass(frozen=True)
class HomImageReport:
    samples: int
    moduli: tuple
    checked: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {
            "samples": self.samples,
            "moduli": list(self.moduli),
            "checked": self.checked,
            "failures": [{"A": a.encode(), "modulus": n, "clause": clause} for a, n, clause in self.failures],
        }


def decomposition_hom_image_check(samples: int = 200, seed: int = 0, entry_bound: int = 50,
                                  moduli=tuple(range(2, 9)), run_log: RunLog | None = None) -> HomImageReport:
    """Decompositions over Z reduced mod n must re-validate over Z/n."""
    matrices, _, _ = full_nonsingular_samples(samples, seed, entry_bound, run_log)
    checked, failures = 0, []
    for A in matrices:
        decomposition = clear_decompose_full(A)
        for n in moduli:
            checked += 1
            check = verify_clear_decomposition(reduce_decomposition(decomposition, n))
            if not check:
                failures.append((A, n, check.failed_clause))
    return HomImageReport(samples, tuple(moduli), checked, tuple(failures))


CATALOG_VERSION_PREFIX = "# catalog-version:"


def load_catalog(path) -> list[RingHandle]:
    """Plain-text catalog: one ring descriptor per line, '#' starts a comment."""
    path = Path(path)
    if not path.exists():
        raise ClearLabError(f"catalog file {path} not found")
    rings = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            rings.append(parse_ring(text))
        except DescriptorError as e:
            raise DescriptorError(f"{path}:{lineno}: {e}")
    return rings


def catalog_version(path) -> str | None:
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith(CATALOG_VERSION_PREFIX):
            return line[len(CATALOG_VERSION_PREFIX):].strip()
    return None


@dataclass(frozen=True)
class OpenQuestionRow:
    ring: RingHandle
    commutative: bool
    is_clear_ring: bool
    right_ursr1: bool
    left_ursr1: bool

    @property
    def observation(self) -> str:
        if self.is_clear_ring and not (self.right_ursr1 and self.left_ursr1):
            return "clear without unit-regular stable range 1"
        if self.right_ursr1 != self.left_ursr1:
            return "sides disagree"
        return "consistent"

    def to_dict(self):
        return {
            "ring": self.ring.descriptor(),
            "commutative": self.commutative,
            "is_clear_ring": self.is_clear_ring,
            "right_ursr1": self.right_ursr1,
            "left_ursr1": self.left_ursr1,
            "observation": self.observation,
        }


def open_question_survey(catalog, budget: int = DEFAULT_BUDGET, run_log: RunLog | None = None) -> list[OpenQuestionRow]:
    """Observations only: does clear go with unit-regular stable range 1, and do its two sides agree?"""
    run_log = run_log or quiet_log()
    rows = []
    for ring in catalog:
        report = classify_ring(ring, budget)
        left = ursr1_test(ring, side="left").holds
        row = OpenQuestionRow(ring, ring.is_commutative(), report.is_clear_ring, report.has_ursr1, left)
        run_log.record("open-question-row", ring=ring.descriptor(), observation=row.observation)
        rows.append(row)
    return rows
