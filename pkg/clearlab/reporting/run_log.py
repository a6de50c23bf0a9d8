from datetime import datetime, timezone
import json
import os
import sys

LOG_DIR = "logs"


def _plain(value):
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


class RunLog:
    """
    Journal of one clearlab process: every record is kept in memory, written as one JSON
    line to the log file, and echoed to standard error. Standard output stays clean for results.
    """

    def __init__(self, log_file_name: str | None = "clearlab_runs.jsonl", log_dir: str = LOG_DIR, echo: bool = True):
        self.log: list[dict] = []
        self.echo = echo
        self.log_file = None
        if log_file_name:
            if not os.path.exists(log_dir):
                os.makedirs(log_dir)
            self.log_file = os.path.join(log_dir, log_file_name)

    def record(self, event: str, **fields):
        """
        Adds an entry to the run log.

        Args:
            event: Short tag for what happened ("invocation", "sample-rejected", "survey-row", ...).
            fields: JSON-friendly details; anything else is stored as its str().
        """
        if not isinstance(event, str) or not event.strip():
            print("Error: RunLog event must be a non-empty string.", file=sys.stderr)
            return
        entry = {"event": event, **{k: _plain(v) for k, v in fields.items()}}
        entry["timestamp"] = datetime.now(timezone.utc).isoformat()
        self.log.append(entry)
        if self.echo:
            details = " ".join(f"{k}={v}" for k, v in fields.items())
            print(f"[clearlab] {event} {details}".rstrip(), file=sys.stderr)

        if self.log_file:
            try:
                with open(self.log_file, "a") as f:
                    f.write(json.dumps(entry) + "\n")
            except IOError as e:
                print(f"Error writing run log file {self.log_file}: {e}", file=sys.stderr)

    def warn(self, message: str, **fields):
        self.record("warning", message=message, **fields)

    def get_log(self, limit: int = 0, event: str | None = None) -> list[dict]:
        """
        Returns recorded entries, optionally only those with the given event tag.
        A positive limit keeps only the last 'limit' of them.
        """
        entries = self.log if event is None else [e for e in self.log if e["event"] == event]
        if limit > 0:
            return entries[-limit:]
        return entries

    def clear_log(self):
        self.log = []


def quiet_log() -> RunLog:
    """In-memory only, nothing echoed."""
    return RunLog(log_file_name=None, echo=False)
