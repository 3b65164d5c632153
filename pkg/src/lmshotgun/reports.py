"""Experiment report records and deterministic file persistence.

Reports embed their full configuration so a run is replayable from the
file alone.  Serialization is canonical (sorted keys, fixed separators)
and wall-clock timing is only recorded on request, so identical configs
produce byte-identical files.  All writes go through a temp file plus
rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from typing import Optional

ARTIFACT_VERSION = "0.1.0"
REPORT_FORMAT_VERSION = 1


@dataclass
class ExperimentReport:
    kind: str
    config: dict
    trials: list = field(default_factory=list)
    aggregates: dict = field(default_factory=dict)
    artifact_version: str = ARTIFACT_VERSION
    format_version: int = REPORT_FORMAT_VERSION
    wall_clock_seconds: Optional[float] = None

    def recompute_aggregates(self) -> dict:
        out = dict(self.aggregates)
        if self.trials and all(isinstance(t, dict) and "success" in t for t in self.trials):
            successes = sum(bool(t["success"]) for t in self.trials)
            out["trials"] = len(self.trials)
            out["successes"] = successes
            out["rate"] = successes / len(self.trials)
        return out

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "format_version": self.format_version,
            "artifact_version": self.artifact_version,
            "config": self.config,
            "trials": self.trials,
            "aggregates": self.aggregates,
            "wall_clock_seconds": self.wall_clock_seconds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExperimentReport":
        payload = json.loads(text)
        report = cls(
            kind=payload["kind"],
            config=payload["config"],
            trials=payload.get("trials", []),
            aggregates=payload.get("aggregates", {}),
            artifact_version=payload.get("artifact_version", ARTIFACT_VERSION),
            format_version=payload.get("format_version", REPORT_FORMAT_VERSION),
            wall_clock_seconds=payload.get("wall_clock_seconds"),
        )
        recomputed = report.recompute_aggregates()
        for key, value in recomputed.items():
            stored = report.aggregates.get(key)
            if stored is not None and stored != value:
                raise ValueError(
                    f"aggregate {key!r} inconsistent with trial records: "
                    f"stored {stored}, recomputed {value}"
                )
        return report


def atomic_write_text(path: str, text: str) -> None:
    """Write via temp file + rename so readers never see partial output."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_json_report(path: str, report: ExperimentReport) -> None:
    atomic_write_text(path, report.to_json())
