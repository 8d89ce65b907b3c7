"""Result record shared by the identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check.

    ``passed`` is true iff lhs and rhs compared bit-exactly equal; the
    rendered values are kept so failures are diagnosable from the report
    alone.
    """

    identity: str
    params: dict = field(compare=False)
    lhs: str = ""
    rhs: str = ""
    passed: bool = False
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "elapsed": self.elapsed,
        }
