from dataclasses import dataclass

from pydantic import BaseModel

from .classify.predicates import classify_element
from .classify.witnesses import Verdict
from .config import LabSettings
from .decomposition.clear_decomp import clear_decompose_full, verify_clear_decomposition
from .reporting.run_log import RunLog, quiet_log
from .reporting.serialization import (
    DecompositionRecord, ForwardCheckRecord, OpenQuestionRecord, OracleRecord, PropositionRecord, PropositionSuiteRecord,
    RingReportRecord, SmithRecord, SurveyRecord, VerdictRecord, format_key_values, format_ring_reports,
    format_table,
)
from .ring_core.data_structures import Integers, MatrixRing, contains_integers
from .ring_core.descriptor import parse_element, parse_ring
from .ring_core.errors import UnsupportedRingError, UsageError
from .ring_core.matrices import require_integer_matrix_ring
from .smith.normal_form import fullness, smith_normal_form
from .survey.oracles import (
    catalog_version, decomposition_hom_image_check, elementary_divisor_forward_check, load_catalog,
    open_question_survey, row_matrix_clean_oracle,
)
from .survey.propositions import CORE_PROPOSITIONS, check_proposition
from .survey.reports import check_budget, classify_ring, survey_zn

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

_VERDICT_EXIT = {Verdict.YES: EXIT_OK, Verdict.NO: EXIT_NEGATIVE, Verdict.UNKNOWN: EXIT_UNKNOWN}

DEFAULT_N_MAX = 60
DEFAULT_SAMPLES = 1000
DEFAULT_ENTRY_BOUND = 50
DEFAULT_ORACLE_BOUND = 100
# pseudo-property for `check`: observations, never pass/fail
OPEN_QUESTIONS = "open-questions"


@dataclass
class Outcome:
    record: BaseModel
    exit_code: int
    text: str

    def render(self, fmt: str) -> str:
        return self.record.to_json() if fmt == "json" else self.text


class LabOrchestrator:
    """Runs one command against the settings and run log it was built with."""

    def __init__(self, settings: LabSettings | None = None, run_log: RunLog | None = None):
        self.settings = settings or LabSettings()
        self.run_log = run_log or quiet_log()

    def _element(self, ring_text: str | None, element_text: str | None, matrix_text: str | None):
        if not ring_text:
            raise UsageError("--ring is required for this command")
        literal = matrix_text if matrix_text is not None else element_text
        if literal is None:
            raise UsageError("give the element with --element or --matrix")
        ring = parse_ring(ring_text)
        return parse_element(literal, ring)

    def classify(self, ring_text, element_text, matrix_text, prop: str, bound: int | None) -> Outcome:
        a = self._element(ring_text, element_text, matrix_text)
        if not contains_integers(a.ring):
            check_budget(a.ring, self.settings.budget)
        bound = self.settings.bound if bound is None else bound
        verdict = classify_element(a, prop, bound)
        record = VerdictRecord(**verdict.to_dict())
        self.run_log.record("classified", ring=a.ring.descriptor(), element=str(a), property=prop, verdict=verdict.verdict.value)
        return Outcome(record, _VERDICT_EXIT[verdict.verdict], format_key_values(record))

    def decompose(self, ring_text, matrix_text) -> Outcome:
        a = self._element(ring_text, None, matrix_text)
        require_integer_matrix_ring(a.ring)
        decomposition = clear_decompose_full(a)
        check = verify_clear_decomposition(decomposition)
        label = "beyond theorem hypotheses: the input is singular" if decomposition.beyond_hypotheses else None
        record = DecompositionRecord(
            **decomposition.to_dict(), checks=list(check.checks), valid=check.ok,
            failed_clause=check.failed_clause, label=label,
        )
        return Outcome(record, EXIT_OK if check else EXIT_NEGATIVE, format_key_values(record))

    def snf(self, ring_text, matrix_text) -> Outcome:
        a = self._element(ring_text, None, matrix_text)
        form = smith_normal_form(a)
        record = SmithRecord(**form.to_dict(), **fullness(a).to_dict())
        return Outcome(record, EXIT_OK, format_key_values(record))

    def survey(self, ring_text, n_max, samples, seed, bound) -> Outcome:
        ring = parse_ring(ring_text) if ring_text else Integers()
        if isinstance(ring, Integers):
            table = survey_zn(DEFAULT_N_MAX if n_max is None else n_max, self.settings.budget, self.settings.workers, self.run_log)
            record = SurveyRecord.model_validate(table.to_dict())
            return Outcome(record, EXIT_OK if table.ok else EXIT_NEGATIVE, format_ring_reports(record.rows))
        if ring == MatrixRing(Integers(), 2):
            if seed is None:
                raise UsageError("randomized surveys need an explicit --seed")
            samples = DEFAULT_SAMPLES if samples is None else samples
            bound = DEFAULT_ENTRY_BOUND if bound is None else bound
            report = elementary_divisor_forward_check(samples, seed, bound, self.run_log)
            hom = decomposition_hom_image_check(min(samples, 200), seed, bound, run_log=self.run_log)
            record = ForwardCheckRecord(**report.to_dict(), hom_image=hom.to_dict())
            return Outcome(record, EXIT_OK if report.ok and hom.ok else EXIT_NEGATIVE, format_key_values(record))
        if contains_integers(ring):
            raise UnsupportedRingError(f"no survey is defined for {ring.descriptor()}")
        report = classify_ring(ring, self.settings.budget, self.run_log)
        record = RingReportRecord(**report.to_dict())
        return Outcome(record, EXIT_OK, format_ring_reports([record]))

    def check(self, prop: str | None, ring_text: str | None) -> Outcome:
        if ring_text:
            rings, version = [parse_ring(ring_text)], None
        else:
            path = self.settings.catalog_path()
            rings, version = load_catalog(path), catalog_version(path)
        if prop == OPEN_QUESTIONS:
            rows = open_question_survey(rings, self.settings.budget, self.run_log)
            record = OpenQuestionRecord(catalog_version=version, rows=[row.to_dict() for row in rows])
            text = format_table(
                ["ring", "commutative", "clear", "right ursr1", "left ursr1", "observation"],
                [[r.ring.descriptor(), r.commutative, r.is_clear_ring, r.right_ursr1, r.left_ursr1, r.observation] for r in rows],
            )
            return Outcome(record, EXIT_OK, text)
        props = [prop] if prop else list(CORE_PROPOSITIONS)
        checks = []
        for ring in rings:
            for proposition_id in props:
                result = check_proposition(proposition_id, ring, self.settings.budget, self.run_log)
                checks.append(PropositionRecord(**result.to_dict()))
        failures = sum(1 for c in checks if c.status == "counterexample")
        record = PropositionSuiteRecord(catalog_version=version, checks=checks, failures=failures)
        text = format_table(
            ["proposition", "ring", "status", "checked"],
            [[c.proposition_id, c.ring, c.status, c.checked] for c in checks],
        )
        return Outcome(record, EXIT_NEGATIVE if failures else EXIT_OK, text)

    def oracle(self, ring_text, matrix_text, bound) -> Outcome:
        if ring_text and parse_ring(ring_text) != MatrixRing(Integers(), 2):
            raise UsageError("the non-cleanness oracle works over M2(Z)")
        a = parse_element(matrix_text or "[[12,5],[0,0]]", MatrixRing(Integers(), 2))
        (p, q), (s, t) = a.value
        if s != 0 or t != 0:
            raise UsageError(f"the oracle takes a row matrix [[p,q],[0,0]], got {a}")
        limit = DEFAULT_ORACLE_BOUND if bound is None else bound
        report = row_matrix_clean_oracle(p, q, limit, limit)
        record = OracleRecord(**report.to_dict())
        self.run_log.record("oracle", matrix=str(a), candidates=len(report.candidates), witnesses=len(report.witnesses))
        text = format_table(
            ["c", "d", "det", "a", "a*d", "b integral"],
            [[c.c, c.d, c.det, c.a, c.b_numerator, c.integral] for c in report.candidates],
        )
        return Outcome(record, EXIT_OK if report.all_refuted else EXIT_NEGATIVE, text)
