import os
import shutil
import tempfile
import unittest

from clearlab.config import REPO_ROOT
from clearlab.reporting.run_log import quiet_log
from clearlab.ring_core.errors import ClearLabError, DescriptorError
from clearlab.smith.normal_form import fullness
from clearlab.survey.oracles import (
    catalog_version, decomposition_hom_image_check, elementary_divisor_forward_check, full_nonsingular_samples,
    load_catalog, non_clean_oracle_12_5, row_matrix_clean_oracle,
)


class TestNonCleanOracle(unittest.TestCase):
    def test_twelve_five_is_not_clean(self):
        report = non_clean_oracle_12_5(100, 100)
        self.assertTrue(report.all_refuted)
        self.assertEqual(report.witnesses, ())
        self.assertTrue(report.candidates, "q*c - p*d = +-1 has solutions in the box")
        for candidate in report.candidates:
            self.assertIn(candidate.det, (1, -1))
            self.assertEqual(candidate.det, 5 * candidate.c - 12 * candidate.d)
            self.assertFalse(candidate.integral, f"b must fail to be an integer at c={candidate.c}, d={candidate.d}")

    def test_direct_refutations(self):
        data = non_clean_oracle_12_5(10, 10).to_dict()
        self.assertEqual(data["matrix"], [["12", "5"], ["0", "0"]])
        self.assertEqual(
            data["direct_refutations"],
            [{"idempotent": "0", "det": "0", "refuted": True}, {"idempotent": "I", "det": "-11", "refuted": True}],
        )
        self.assertTrue(data["all_refuted"])

    def test_oracle_finds_clean_rows(self):
        report = row_matrix_clean_oracle(1, 0, 5, 5)
        self.assertFalse(report.all_refuted, "[[1,0],[0,0]] is an idempotent plus a unit")
        for witness in report.witnesses:
            self.assertTrue(witness.validate())

    def test_bounds_must_be_positive(self):
        with self.assertRaises(DescriptorError):
            row_matrix_clean_oracle(12, 5, 0, 10)


class TestForwardCheck(unittest.TestCase):
    def test_samples_are_full_nonsingular_and_seeded(self):
        first, _, _ = full_nonsingular_samples(50, 1, 10)
        second, _, _ = full_nonsingular_samples(50, 1, 10)
        self.assertEqual(first, second, "the same seed must give the same samples")
        self.assertEqual(len(first), 50)
        for a in first:
            verdict = fullness(a)
            self.assertTrue(verdict.is_full and verdict.is_nonsingular)

    def test_rejections_are_logged(self):
        log = quiet_log()
        full_nonsingular_samples(20, 5, 6, run_log=log)
        entry = log.get_log(event="samples-generated")[-1]
        self.assertEqual(entry["accepted"], 20)
        self.assertEqual(entry["seed"], 5)

    def test_thousand_samples_seed_42(self):
        report = elementary_divisor_forward_check(1000, 42, 50)
        self.assertTrue(report.ok, f"failures: {report.failures[:3]}")
        self.assertEqual(report.passed, 1000)
        self.assertEqual(report.nontrivial, 1000)
        self.assertEqual(report.ideal_idempotents_ok, 1000)
        self.assertEqual(report.to_dict()["semisimple_base"], "J(Z) = 0")

    def test_hom_image_of_decompositions(self):
        report = decomposition_hom_image_check(samples=200, seed=0, entry_bound=50)
        self.assertTrue(report.ok, f"failures: {report.failures[:3]}")
        self.assertEqual(report.checked, 200 * 7)

    def test_bad_arguments(self):
        with self.assertRaises(DescriptorError):
            full_nonsingular_samples(0, 1, 10)


class TestCatalog(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def _write(self, name, text):
        path = os.path.join(self.temp_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_default_catalog(self):
        path = REPO_ROOT / "default_catalog.txt"
        rings = load_catalog(path)
        descriptors = [r.descriptor() for r in rings]
        self.assertEqual(catalog_version(path), "1")
        self.assertEqual(len(rings), 19)
        for expected in ("Z/2", "Z/16", "Z/2 x Z/3", "M2(Z/2)", "M2(Z/3)"):
            self.assertIn(expected, descriptors)

    def test_comments_and_blank_lines(self):
        path = self._write("catalog.txt", "# catalog-version: 7\n\nZ/4  # local\nM2(Z/2)\n")
        self.assertEqual([r.descriptor() for r in load_catalog(path)], ["Z/4", "M2(Z/2)"])
        self.assertEqual(catalog_version(path), "7")

    def test_bad_line_names_the_line(self):
        path = self._write("bad.txt", "Z/4\nZ/\n")
        with self.assertRaises(DescriptorError) as ctx:
            load_catalog(path)
        self.assertIn(":2:", str(ctx.exception))

    def test_missing_catalog(self):
        with self.assertRaises(ClearLabError):
            load_catalog(os.path.join(self.temp_dir, "missing.txt"))


if __name__ == '__main__':
    unittest.main()
