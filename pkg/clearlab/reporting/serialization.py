"""
JSON records for everything the command line prints.

Integers travel as decimal strings, product elements as 2-element lists and matrices as
lists of rows, so arbitrary precision survives any JSON reader.
"""
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)


class VerdictRecord(_Record):
    property: str
    ring: str
    element: Any
    verdict: Literal["yes", "no", "unknown"]
    witness: dict | None = None
    refutation: Literal["exhaustive-enumeration", "analytic-oracle"] | None = None
    bound: int | None = None
    detail: str | None = None


class DecompositionRecord(_Record):
    ring: str
    A: Any
    r: Any
    u: Any
    unit_inverse: Any
    inner_unit: Any
    P: Any
    Q: Any
    d: Any
    nontrivial: bool
    beyond_hypotheses: bool
    checks: list[str]
    valid: bool
    failed_clause: str | None = None
    label: str | None = None


class SmithRecord(_Record):
    ring: str
    A: Any
    P: Any
    D: Any
    Q: Any
    d1: str
    d2: str
    is_full: bool
    gcd_of_entries: str
    is_nonsingular: bool


class RingReportRecord(_Record):
    ring: str
    cardinality: int
    flags: dict[str, bool]
    counterexamples: dict[str, Any]


class PropositionRecord(_Record):
    proposition_id: str
    ring: str
    status: Literal["verified-exhaustively", "counterexample", "not-applicable"]
    checked: int
    counterexample: Any = None
    detail: str | None = None


class PropositionSuiteRecord(_Record):
    catalog_version: str | None = None
    checks: list[PropositionRecord]
    failures: int


class SurveyRecord(_Record):
    n_max: int
    rows: list[RingReportRecord]
    squarefree_mismatches: list[int]
    lattice_violations: list[int]


class OpenQuestionRecord(_Record):
    catalog_version: str | None = None
    rows: list[dict]


class OracleRecord(_Record):
    matrix: Any
    c_bound: int
    d_bound: int
    direct_refutations: list[dict]
    candidates: list[dict]
    clean_witnesses: list[dict]
    all_refuted: bool


class ForwardCheckRecord(_Record):
    samples: int
    seed: int
    entry_bound: int
    passed: int
    nontrivial: int
    ideal_idempotents_ok: int
    rejected_not_full: int
    rejected_singular: int
    semisimple_base: str
    failures: list[dict]
    hom_image: dict | None = None


def format_table(headers: list[str], rows: list[list]) -> str:
    """Aligned columns, header underlined."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


_SHORT_FLAGS = {
    "is_clean_ring": "clean",
    "is_clear_ring": "clear",
    "is_unit_regular_ring": "unit-reg",
    "is_2good_ring": "2-good",
    "is_2clean_ring": "2-clean",
    "is_exchange_ring": "exchange",
    "has_ursr1": "ursr1",
    "is_semisimple": "J=0",
    "has_nontrivial_idempotents": "idemp",
}


def format_ring_reports(records: list[RingReportRecord]) -> str:
    headers = ["ring", "size"] + list(_SHORT_FLAGS.values())
    rows = [[r.ring, r.cardinality] + ["yes" if r.flags[k] else "no" for k in _SHORT_FLAGS] for r in records]
    return format_table(headers, rows)


def format_key_values(record: BaseModel) -> str:
    data = record.model_dump(exclude_none=True)
    width = max(len(k) for k in data)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in data.items())
