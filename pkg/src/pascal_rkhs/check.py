from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of an exact identity check.

    Truthy iff the identity held. On failure ``witness`` carries the first
    offending index and both exact values.
    """

    ok: bool
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def passed(**info) -> Check:
    return Check(True, info)


def failed(**witness) -> Check:
    return Check(False, witness)
