"""Verification records and their JSON / markdown renderings.

JSON schema (``oddcat-report/1``)::

    {
      "schema": "oddcat-report/1",
      "code_version": str,
      "suite": str,                 # requested suite, "all" allowed
      "summary": {"pass": int, "fail": int, "skipped": int},
      "records": [
        {
          "suite": str,             # onh, sym, ...
          "section": str,           # grouping heading for markdown
          "check": str,             # short check id, unique within suite+params
          "citation": str,          # descriptive label of the statement checked
          "params": {str: int},     # subset of n, k, l, m, D
          "status": "pass" | "fail" | "skipped",
          "witness": any JSON,      # certificate summary or counterexample
          "wall_time": float        # seconds; the only nondeterministic field
        }, ...
      ]
    }

Records keep the order in which suites ran, which is fixed for given inputs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

SCHEMA = "oddcat-report/1"
STATUSES = ("pass", "fail", "skipped")


def jsonable(x: Any) -> Any:
    """Canonical JSON-ready form: tuples become lists, mapping keys become strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, dict):
        return {k if isinstance(k, str) else repr(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    return repr(x)


@dataclass
class VerificationRecord:
    suite: str
    section: str
    check: str
    citation: str
    params: dict[str, int]
    status: str
    witness: Any = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if not self.citation:
            raise ValueError("every record needs a citation label")

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "section": self.section,
            "check": self.check,
            "citation": self.citation,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "witness": jsonable(self.witness),
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationRecord":
        return cls(
            d["suite"], d["section"], d["check"], d["citation"], dict(d["params"]),
            d["status"], d.get("witness"), d.get("wall_time", 0.0),
        )


@dataclass
class Recorder:
    """Collects records for one suite; ``run`` times a check returning (ok, witness)."""

    suite: str
    records: list[VerificationRecord] = field(default_factory=list)

    def run(self, section: str, check: str, citation: str, params: dict, fn: Callable[[], tuple[bool, Any]]):
        t = time.perf_counter()
        ok, witness = fn()
        rec = VerificationRecord(
            self.suite, section, check, citation, params, "pass" if ok else "fail", witness, time.perf_counter() - t
        )
        self.records.append(rec)
        return rec

    def skip(self, section: str, check: str, citation: str, params: dict, reason: str):
        rec = VerificationRecord(self.suite, section, check, citation, params, "skipped", reason)
        self.records.append(rec)
        return rec


def summary(records: Iterable[VerificationRecord]) -> dict[str, int]:
    out = {s: 0 for s in STATUSES}
    for r in records:
        out[r.status] += 1
    return out


def to_json(records: list[VerificationRecord], suite: str, code_version: str, timing: bool = True) -> str:
    doc = {
        "schema": SCHEMA,
        "code_version": code_version,
        "suite": suite,
        "summary": summary(records),
        "records": [r.to_dict(timing) for r in records],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _fmt_params(p: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(p.items())) or "-"


def to_markdown(records: list[VerificationRecord], suite: str, code_version: str) -> str:
    s = summary(records)
    lines = [
        f"# oddcat verify {suite}",
        "",
        f"schema `{SCHEMA}`, code `{code_version}`: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped",
    ]
    sections: dict[str, list[VerificationRecord]] = {}
    for r in records:
        sections.setdefault(r.section, []).append(r)
    for name, recs in sections.items():
        lines += ["", f"## {name}", "", "| status | suite | check | params | statement | time (s) |", "|---|---|---|---|---|---|"]
        for r in recs:
            lines.append(
                f"| {r.status} | {r.suite} | {r.check} | {_fmt_params(r.params)} | {r.citation} | {r.wall_time:.2f} |"
            )
    failed = [r for r in records if r.failed]
    if failed:
        lines += ["", "## Failures", ""]
        for r in failed:
            lines += [
                f"### {r.suite}/{r.check} ({_fmt_params(r.params)})",
                "",
                f"{r.citation}",
                "",
                "```json",
                json.dumps(jsonable(r.witness), indent=2, sort_keys=True),
                "```",
            ]
    return "\n".join(lines) + "\n"
