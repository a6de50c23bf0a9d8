import io
import json
import os
import shutil
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from pydantic import ValidationError

from clearlab.config import LabSettings, load_settings
from clearlab.reporting.run_log import RunLog
from clearlab.reporting.serialization import PropositionRecord, VerdictRecord
from clearlab.ring_core.errors import ConfigError


class TestLoadSettings(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def _config(self, content):
        path = os.path.join(self.temp_dir, "clearlab_config.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def test_missing_file_warns_and_uses_defaults(self):
        with patch("sys.stderr", new_callable=io.StringIO) as stderr:
            settings = load_settings(os.path.join(self.temp_dir, "absent.json"), env={})
        self.assertIn("Warning", stderr.getvalue())
        self.assertEqual(settings, LabSettings())

    def test_file_values(self):
        settings = load_settings(self._config({"budget": 500, "bound": 12, "workers": 2}), env={})
        self.assertEqual((settings.budget, settings.bound, settings.workers), (500, 12, 2))
        self.assertEqual(settings.log_file, "clearlab_runs.jsonl")

    def test_environment_overrides_file(self):
        path = self._config({"budget": 500})
        settings = load_settings(path, env={"CLEARLAB_BUDGET": "99", "CLEARLAB_LOG_DIR": "elsewhere"})
        self.assertEqual(settings.budget, 99)
        self.assertEqual(settings.log_dir, "elsewhere")

    def test_invalid_values(self):
        with self.assertRaises(ConfigError):
            load_settings(self._config({"budget": 0}), env={})
        with self.assertRaises(ConfigError):
            load_settings(self._config({"budgett": 10}), env={})
        with self.assertRaises(ConfigError):
            load_settings(self._config("{budget: 10"), env={})
        with self.assertRaises(ConfigError):
            load_settings(self._config([1, 2]), env={})
        with self.assertRaises(ConfigError):
            load_settings(self._config({}), env={"CLEARLAB_WORKERS": "many"})

    def test_catalog_path_relative_to_config(self):
        catalog = os.path.join(self.temp_dir, "mine.txt")
        with open(catalog, "w", encoding="utf-8") as f:
            f.write("Z/4\n")
        settings = LabSettings(catalog_file="mine.txt")
        self.assertEqual(str(settings.catalog_path(base_dir=Path(self.temp_dir))), catalog)


class TestRunLog(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.log = RunLog("runs.jsonl", self.temp_dir, echo=False)

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_entries_are_written_as_json_lines(self):
        self.log.record("invocation", command="snf", argv=["snf", "--ring", "M2(Z)"])
        self.log.record("exit", command="snf", status=0)
        with open(os.path.join(self.temp_dir, "runs.jsonl"), encoding="utf-8") as f:
            lines = [json.loads(line) for line in f]
        self.assertEqual([e["event"] for e in lines], ["invocation", "exit"])
        self.assertEqual(lines[0]["argv"], ["snf", "--ring", "M2(Z)"])
        self.assertIn("timestamp", lines[1])

    def test_non_json_values_are_stringified(self):
        self.log.record("sample", value=10 ** 30, ring=object())
        entry = self.log.get_log()[-1]
        self.assertEqual(entry["value"], 10 ** 30)
        self.assertIsInstance(entry["ring"], str)

    def test_get_log_filters(self):
        for i in range(5):
            self.log.record("row", index=i)
        self.log.warn("slow ring", ring="M2(Z/3)")
        self.assertEqual(len(self.log.get_log()), 6)
        self.assertEqual([e["index"] for e in self.log.get_log(limit=2, event="row")], [3, 4])
        self.assertEqual(self.log.get_log(event="warning")[0]["message"], "slow ring")

    def test_empty_event_is_rejected(self):
        with patch("sys.stderr", new_callable=io.StringIO) as stderr:
            self.log.record("  ")
        self.assertEqual(self.log.get_log(), [])
        self.assertIn("Error", stderr.getvalue())

    def test_clear_log(self):
        self.log.record("row", index=0)
        self.log.clear_log()
        self.assertEqual(self.log.get_log(), [])

    def test_echo_goes_to_stderr(self):
        log = RunLog(None, echo=True)
        with patch("sys.stderr", new_callable=io.StringIO) as stderr:
            log.record("survey-row", ring="Z/4")
        self.assertIn("[clearlab] survey-row ring=Z/4", stderr.getvalue())


class TestRecords(unittest.TestCase):
    def test_round_trip(self):
        record = VerdictRecord(property="clean", ring="M2(Z)", element=[["12", "5"], ["0", "0"]], verdict="unknown", bound=30)
        self.assertEqual(VerdictRecord.model_validate_json(record.to_json()), record)
        self.assertNotIn("witness", json.loads(record.to_json()))

    def test_extra_fields_are_forbidden(self):
        with self.assertRaises(ValidationError):
            PropositionRecord(proposition_id="hom-image", ring="Z/4", status="not-applicable", checked=0, colour="red")

    def test_status_is_constrained(self):
        with self.assertRaises(ValidationError):
            PropositionRecord(proposition_id="hom-image", ring="Z/4", status="maybe", checked=0)


if __name__ == '__main__':
    unittest.main()
