import io
import json
import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

from clearlab.cli import main, run
from clearlab.config import LabSettings
from clearlab.reporting.run_log import quiet_log


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.settings = LabSettings(log_file=None)
        self.log = quiet_log()

    def invoke(self, *argv, settings=None):
        stdout, stderr = io.StringIO(), io.StringIO()
        status = run(list(argv), settings=settings or self.settings, run_log=self.log, stdout=stdout, stderr=stderr)
        return status, stdout.getvalue(), stderr.getvalue()

    def invoke_json(self, *argv, **kwargs):
        status, out, err = self.invoke(*argv, **kwargs)
        return status, json.loads(out) if out else None, err


class TestClassifyCommand(CliTestCase):
    def test_clear_element_of_z4(self):
        status, data, _ = self.invoke_json("classify", "--ring", "Z/4", "--element", "2", "--property", "clear")
        self.assertEqual(status, 0)
        self.assertEqual(data["verdict"], "yes")
        self.assertEqual(data["witness"]["unit_regular_part"]["element"], "3")
        self.assertEqual(data["witness"]["unit"], "3")

    def test_bounded_search_exits_unknown(self):
        status, data, _ = self.invoke_json(
            "classify", "--ring", "M2(Z)", "--matrix", "[[12,5],[0,0]]", "--property", "clean", "--bound", "30",
        )
        self.assertEqual(status, 2)
        self.assertEqual(data["verdict"], "unknown")
        self.assertEqual(data["bound"], 30)

    def test_negative_verdict_exits_one(self):
        status, data, _ = self.invoke_json("classify", "--ring", "Z/4", "--element", "2", "--property", "unit-regular")
        self.assertEqual(status, 1)
        self.assertEqual(data["refutation"], "exhaustive-enumeration")

    def test_output_is_byte_stable(self):
        argv = ("classify", "--ring", "Z/6", "--element", "2", "--property", "clear")
        first = self.invoke(*argv)[1]
        second = self.invoke(*argv)[1]
        self.assertEqual(first, second)

    def test_text_format(self):
        status, out, _ = self.invoke("classify", "--ring", "Z/4", "--element", "2", "--property", "clean", "--format", "text")
        self.assertEqual(status, 0)
        self.assertIn("verdict", out)
        self.assertIn("yes", out)

    def test_budget_is_enforced(self):
        status, out, err = self.invoke(
            "classify", "--ring", "M2(Z/3)", "--matrix", "[[1,0],[0,1]]", "--property", "clean",
            settings=LabSettings(log_file=None, budget=10),
        )
        self.assertEqual(status, 1)
        self.assertEqual(out, "")
        self.assertIn("81", err)


class TestUsageErrors(CliTestCase):
    def test_bad_descriptor_reports_position(self):
        status, out, err = self.invoke("classify", "--ring", "Z/", "--element", "1", "--property", "clear")
        self.assertEqual(status, 64)
        self.assertEqual(out, "")
        self.assertIn("position", err)

    def test_unknown_command(self):
        self.assertEqual(self.invoke("frobnicate")[0], 64)

    def test_unknown_property(self):
        self.assertEqual(self.invoke("classify", "--ring", "Z/4", "--element", "2", "--property", "shiny")[0], 64)
        self.assertEqual(self.invoke("check", "--property", "shiny")[0], 64)

    def test_missing_element(self):
        self.assertEqual(self.invoke("classify", "--ring", "Z/4", "--property", "clear")[0], 64)

    def test_randomized_survey_needs_a_seed(self):
        status, _, err = self.invoke("survey", "--ring", "M2(Z)")
        self.assertEqual(status, 64)
        self.assertIn("--seed", err)

    def test_explicit_zero_is_not_replaced_by_a_default(self):
        self.assertEqual(self.invoke("oracle", "--bound", "0")[0], 64)
        self.assertEqual(self.invoke("survey", "--n-max", "0")[0], 64)
        self.assertEqual(self.invoke("survey", "--n-max", "1")[0], 64)
        self.assertEqual(self.invoke("survey", "--ring", "M2(Z)", "--seed", "1", "--samples", "0")[0], 64)
        self.assertEqual(self.invoke("survey", "--ring", "M2(Z)", "--seed", "1", "--samples", "5", "--bound", "0")[0], 64)

    def test_bad_config_file(self):
        temp_dir = tempfile.mkdtemp()
        try:
            path = os.path.join(temp_dir, "broken.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write("{not json")
            stdout, stderr = io.StringIO(), io.StringIO()
            status = run(["survey", "--ring", "Z/4", "--config", path], run_log=self.log, stdout=stdout, stderr=stderr)
            self.assertEqual(status, 64)
            self.assertIn("not valid JSON", stderr.getvalue())
        finally:
            shutil.rmtree(temp_dir)


class TestOtherCommands(CliTestCase):
    def test_decompose(self):
        status, data, _ = self.invoke_json("decompose", "--ring", "M2(Z)", "--matrix", "[[1,0],[0,5]]")
        self.assertEqual(status, 0)
        self.assertEqual(data["r"], [["0", "0"], ["1", "6"]])
        self.assertTrue(data["nontrivial"])
        self.assertTrue(data["valid"])
        self.assertNotIn("label", data)

    def test_decompose_singular_is_labelled(self):
        status, data, _ = self.invoke_json("decompose", "--ring", "M2(Z)", "--matrix", "[[1,2],[2,4]]")
        self.assertEqual(status, 0)
        self.assertTrue(data["beyond_hypotheses"])
        self.assertIn("beyond theorem hypotheses", data["label"])

    def test_decompose_not_full(self):
        status, out, err = self.invoke("decompose", "--ring", "M2(Z)", "--matrix", "[[2,4],[6,8]]")
        self.assertEqual(status, 1)
        self.assertIn("not full", err)

    def test_snf(self):
        status, data, _ = self.invoke_json("snf", "--ring", "M2(Z)", "--matrix", "[[2,4],[6,8]]")
        self.assertEqual(status, 0)
        self.assertEqual((data["d1"], data["d2"]), ("2", "4"))
        self.assertFalse(data["is_full"])

    def test_survey_of_a_finite_ring(self):
        status, data, _ = self.invoke_json("survey", "--ring", "M2(Z/2)")
        self.assertEqual(status, 0)
        self.assertEqual(data["cardinality"], 16)
        self.assertTrue(data["flags"]["is_clear_ring"])

    def test_check_single_ring(self):
        status, data, _ = self.invoke_json("check", "--ring", "Z/6", "--property", "clean-implies-clear")
        self.assertEqual(status, 0)
        self.assertEqual(data["failures"], 0)
        self.assertEqual(data["checks"][0]["status"], "verified-exhaustively")

    def test_check_accepts_catalog_ids(self):
        status, data, _ = self.invoke_json("check", "--ring", "Z/8", "--property", "P109-no-idempotents")
        self.assertEqual(status, 0)
        self.assertEqual(data["checks"][0]["proposition_id"], "no-idempotents-2good")

    def test_open_questions(self):
        status, data, _ = self.invoke_json("check", "--ring", "Z/6", "--property", "open-questions")
        self.assertEqual(status, 0)
        self.assertEqual(data["rows"][0]["observation"], "consistent")

    def test_oracle_defaults(self):
        status, data, _ = self.invoke_json("oracle")
        self.assertEqual(status, 0)
        self.assertTrue(data["all_refuted"])
        self.assertEqual(data["clean_witnesses"], [])

    def test_oracle_rejects_non_row_matrix(self):
        self.assertEqual(self.invoke("oracle", "--matrix", "[[1,2],[3,4]]")[0], 64)

    def test_run_log_events(self):
        self.invoke("snf", "--ring", "M2(Z)", "--matrix", "[[2,4],[6,8]]")
        invocation = self.log.get_log(event="invocation")
        self.assertEqual(len(invocation), 1)
        self.assertEqual(invocation[0]["command"], "snf")
        self.assertEqual(self.log.get_log(event="exit")[0]["status"], 0)


class TestEntryPoint(unittest.TestCase):
    def test_main_exits_with_the_run_status(self):
        with patch("sys.argv", ["clearlab", "frobnicate"]), patch("sys.stderr", new_callable=io.StringIO) as stderr:
            with self.assertRaises(SystemExit) as ctx:
                main()
        self.assertEqual(ctx.exception.code, 64)
        self.assertIn("Error", stderr.getvalue())


if __name__ == '__main__':
    unittest.main()
