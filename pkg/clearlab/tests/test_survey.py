import unittest

from clearlab.config import REPO_ROOT
from clearlab.reporting.run_log import quiet_log
from clearlab.ring_core.data_structures import Modular
from clearlab.ring_core.descriptor import parse_ring
from clearlab.ring_core.errors import (
    BudgetExceededError, DescriptorError, ImplicationViolationError, UnsupportedRingError, WitnessValidationError,
)
from clearlab.survey.oracles import load_catalog, open_question_survey
from clearlab.survey.propositions import (
    CORE_PROPOSITIONS, COUNTEREXAMPLE, NOT_APPLICABLE, PROPOSITION_ALIASES, PROPOSITIONS, VERIFIED, _first_failure,
    check_proposition,
)
from clearlab.survey.reports import (
    FLAG_NAMES, RingReport, check_budget, classify_ring, element_lattice_violations, is_squarefree, survey_zn,
)


class TestRingReports(unittest.TestCase):
    def test_z4(self):
        report = classify_ring(Modular(4))
        self.assertEqual(report.cardinality, 4)
        self.assertTrue(report.is_clean_ring)
        self.assertTrue(report.is_clear_ring)
        self.assertFalse(report.is_unit_regular_ring)
        self.assertFalse(report.is_semisimple)
        self.assertFalse(report.has_nontrivial_idempotents)
        self.assertEqual(report.counterexamples["is_unit_regular_ring"].value, 2)

    def test_z6(self):
        report = classify_ring(Modular(6))
        self.assertTrue(report.is_unit_regular_ring)
        self.assertTrue(report.is_semisimple)
        self.assertTrue(report.has_ursr1)
        self.assertTrue(report.has_nontrivial_idempotents)

    def test_matrix_ring(self):
        report = classify_ring(parse_ring("M2(Z/2)"))
        self.assertEqual(report.cardinality, 16)
        for flag in ("is_clean_ring", "is_clear_ring", "is_unit_regular_ring", "is_2good_ring", "is_2clean_ring"):
            self.assertTrue(report.flags[flag], f"M2(Z/2) should satisfy {flag}")

    def test_report_serialization(self):
        data = classify_ring(Modular(4)).to_dict()
        self.assertEqual(data["ring"], "Z/4")
        self.assertEqual(set(data["flags"]), set(FLAG_NAMES))
        self.assertEqual(data["counterexamples"]["is_unit_regular_ring"], "2")

    def test_inconsistent_report_is_rejected(self):
        flags = {name: True for name in FLAG_NAMES}
        flags["is_clear_ring"] = False
        with self.assertRaises(ImplicationViolationError):
            RingReport(Modular(4), 4, flags)

    def test_budget(self):
        self.assertEqual(check_budget(parse_ring("M2(Z/3)"), 81), 81)
        with self.assertRaises(BudgetExceededError) as ctx:
            check_budget(parse_ring("M2(Z/3)"), 50)
        self.assertEqual(ctx.exception.required, 81)
        self.assertIn("81", str(ctx.exception))

    def test_run_log_records_each_ring(self):
        log = quiet_log()
        classify_ring(Modular(5), run_log=log)
        entries = log.get_log(event="ring-classified")
        self.assertEqual(len(entries), 1)
        self.assertEqual(entries[0]["ring"], "Z/5")


class TestZnSurvey(unittest.TestCase):
    def test_squarefree(self):
        self.assertTrue(is_squarefree(30))
        self.assertFalse(is_squarefree(12))
        self.assertTrue(is_squarefree(2))

    def test_survey_up_to_60(self):
        table = survey_zn(60)
        self.assertTrue(table.ok, f"mismatches {table.squarefree_mismatches}, lattice {table.lattice_violations}")
        self.assertEqual(len(table.rows), 59)
        for n, row in zip(range(2, 61), table.rows):
            self.assertEqual(row.is_unit_regular_ring, is_squarefree(n), f"Z/{n}")
            self.assertTrue(row.is_clean_ring and row.is_clear_ring, f"Z/{n} is clean and clear")

    def test_survey_bounds(self):
        with self.assertRaises(DescriptorError):
            survey_zn(1)
        with self.assertRaises(DescriptorError):
            survey_zn(513)

    def test_element_lattice(self):
        for text in ("Z/12", "Z/2 x Z/3", "M2(Z/2)"):
            self.assertEqual(element_lattice_violations(parse_ring(text)), [], text)


class TestPropositions(unittest.TestCase):
    def setUp(self):
        self.catalog = load_catalog(REPO_ROOT / "default_catalog.txt")

    def test_core_suite_on_default_catalog(self):
        for ring in self.catalog:
            for proposition_id in CORE_PROPOSITIONS:
                result = check_proposition(proposition_id, ring)
                self.assertNotEqual(
                    result.status, COUNTEREXAMPLE,
                    f"{proposition_id} fails on {ring.descriptor()} at {result.counterexample}",
                )

    def test_clean_implies_clear_is_verified(self):
        result = check_proposition("clean-implies-clear", Modular(12))
        self.assertEqual(result.status, VERIFIED)
        self.assertEqual(result.checked, 12)

    def test_direct_product_matches_crt(self):
        result = check_proposition("direct-product", parse_ring("Z/2 x Z/3"))
        self.assertEqual(result.status, VERIFIED)
        self.assertIn("Z/6", result.detail)
        self.assertEqual(check_proposition("direct-product", Modular(6)).status, NOT_APPLICABLE)

    def test_hom_image(self):
        self.assertEqual(check_proposition("hom-image", Modular(12)).status, VERIFIED)
        self.assertEqual(check_proposition("hom-image", parse_ring("M2(Z/4)")).status, VERIFIED)
        self.assertEqual(check_proposition("hom-image", Modular(7)).status, NOT_APPLICABLE)

    def test_supplementary_checks(self):
        self.assertEqual(check_proposition("local-implies-clear", Modular(9)).status, VERIFIED)
        self.assertEqual(check_proposition("local-implies-clear", Modular(6)).status, NOT_APPLICABLE)
        self.assertEqual(check_proposition("unit-regular-2good", Modular(15)).status, VERIFIED)
        self.assertEqual(check_proposition("unit-regular-2good", Modular(4)).status, NOT_APPLICABLE)
        self.assertEqual(check_proposition("matrix-2good", parse_ring("M2(Z/3)")).status, VERIFIED)
        self.assertEqual(check_proposition("clean-implies-exchange", Modular(8)).status, VERIFIED)

    def test_every_proposition_runs_on_a_small_ring(self):
        ring = parse_ring("Z/2 x Z/2")
        for proposition_id in PROPOSITIONS:
            result = check_proposition(proposition_id, ring)
            self.assertIn(result.status, (VERIFIED, NOT_APPLICABLE), proposition_id)

    def test_two_good_direction_with_idempotents(self):
        result = check_proposition("no-idempotents-2good", parse_ring("M2(Z/3)"))
        self.assertEqual(result.status, VERIFIED)
        self.assertIn("one direction", result.detail)

    def test_unknown_proposition(self):
        with self.assertRaises(UnsupportedRingError):
            check_proposition("bogus", Modular(4))

    def test_catalog_ids_resolve_to_checks(self):
        result = check_proposition("P109-no-idempotents", Modular(8))
        self.assertEqual(result.status, VERIFIED)
        self.assertEqual(result.proposition_id, "no-idempotents-2good")
        for alias, name in PROPOSITION_ALIASES.items():
            self.assertIn(name, PROPOSITIONS, alias)
            self.assertEqual(check_proposition(alias, Modular(6)).proposition_id, name)
        with self.assertRaises(UnsupportedRingError):
            check_proposition("P3-bogus", Modular(4))

    def test_counterexample_is_reported(self):
        result = _first_failure(Modular(4), "never-two", lambda a: a.value != 2)
        self.assertEqual(result.status, COUNTEREXAMPLE)
        self.assertEqual(result.counterexample.value, 2)
        self.assertEqual(result.checked, 4)

    def test_unstable_counterexample_is_rejected(self):
        calls = []

        def flaky(a):
            calls.append(a)
            return len(calls) > 1

        with self.assertRaises(WitnessValidationError):
            _first_failure(Modular(4), "flaky", flaky)

    def test_budget_applies(self):
        with self.assertRaises(BudgetExceededError):
            check_proposition("clean-implies-clear", parse_ring("M2(Z/3)"), budget=10)


class TestOpenQuestionSurvey(unittest.TestCase):
    def test_rows(self):
        rings = [Modular(4), Modular(6), parse_ring("M2(Z/2)")]
        rows = open_question_survey(rings)
        self.assertEqual([r.ring for r in rows], rings)
        z6 = rows[1]
        self.assertTrue(z6.commutative and z6.is_clear_ring and z6.right_ursr1 and z6.left_ursr1)
        self.assertEqual(z6.observation, "consistent")
        self.assertFalse(rows[2].commutative)
        self.assertIn(rows[2].to_dict()["observation"], ("consistent", "sides disagree", "clear without unit-regular stable range 1"))
        self.assertEqual(rows[2].right_ursr1, rows[2].left_ursr1)
        self.assertNotEqual(rows[2].observation, "sides disagree")


if __name__ == '__main__':
    unittest.main()
