"""Machine-readable reports for verification checks.

Every numeric quantity is an integer or an exact rational serialized as
a num/den pair; floats never appear in reports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA_VERSION = 1


def encode_value(v):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, bool) or isinstance(v, int) or isinstance(v, str) or v is None:
        return v
    if v == float("inf"):
        return "infinity"
    if isinstance(v, dict):
        return {k: encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    raise TypeError(f"cannot serialize {type(v).__name__} in a report")


@dataclass
class CheckReport:
    check: str
    ok: bool
    details: dict = field(default_factory=dict)
    notices: list = field(default_factory=list)
    runtime_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "check": self.check,
            "ok": self.ok,
            "details": encode_value(self.details),
            "notices": list(self.notices),
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)


class timed:
    """Context manager filling in a report's runtime_ms."""

    def __init__(self, report: CheckReport):
        self.report = report

    def __enter__(self):
        self._t0 = time.monotonic()
        return self.report

    def __exit__(self, *exc):
        self.report.runtime_ms = int((time.monotonic() - self._t0) * 1000)
        return False
