"""Verdict-and-witness reporting shared by every checker in the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping


class ToolkitError(Exception):
    """Base class for errors raised by this package."""


class InputError(ToolkitError):
    """Malformed, out-of-range, or mismatched input data."""


class PreconditionError(ToolkitError):
    """An operation was applied to a structure that fails its contract."""


class InternalCheckError(ToolkitError):
    """A cross-check that must hold by construction failed; indicates a bug here."""


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a checker: verdict, failed clause, and a concrete witness.

    ``witness`` is a tuple of carrier indices whose meaning depends on the
    failed clause (documented at each checker). ``details`` carries secondary
    diagnostics such as sub-verdicts; it never affects ``ok``.
    """

    check: str
    ok: bool
    failed: str | None = None
    witness: tuple[int, ...] | None = None
    message: str = ""
    details: Mapping[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passing(cls, check: str, message: str = "", **details: Any) -> "CheckReport":
        return cls(check=check, ok=True, message=message, details=details)

    @classmethod
    def failing(
        cls,
        check: str,
        failed: str,
        witness: tuple[int, ...] | None,
        message: str = "",
        **details: Any,
    ) -> "CheckReport":
        return cls(
            check=check,
            ok=False,
            failed=failed,
            witness=witness,
            message=message,
            details=details,
        )

    def summary(self) -> str:
        if self.ok:
            return f"{self.check}: ok" + (f" ({self.message})" if self.message else "")
        parts = [f"{self.check}: FAIL", f"clause={self.failed}"]
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        if self.message:
            parts.append(self.message)
        return " ".join(parts)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"check": self.check, "ok": self.ok}
        if self.failed is not None:
            out["failed"] = self.failed
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.message:
            out["message"] = self.message
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


def _jsonable(value: Any) -> Any:
    if isinstance(value, CheckReport):
        return value.to_json()
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items)
        return [_jsonable(v) for v in items]
    if hasattr(value, "to_json"):
        return value.to_json()
    return value
