"""Worked examples with their expected Selmer dimensions and known ranks.

``known_rank`` is the rank of E_{-432n^2} reported from an external descent
computation (or forced by t = 1); None where only bounds are known.
"""
from __future__ import annotations

from dataclasses import dataclass

PATTERNS = {
    "l1*l2": (1, 1),
    "l1^2*l2": (2, 1),
    "l1*l2^2": (1, 2),
    "l1^2*l2^2": (2, 2),
}


@dataclass(frozen=True)
class ReferenceCase:
    name: str
    l1: int
    l2: int
    pattern: str
    t: int
    known_rank: int | None = None

    @property
    def n(self) -> int:
        e1, e2 = PATTERNS[self.pattern]
        return self.l1**e1 * self.l2**e2


def _cases(name, l1, l2, t, ranks):
    return [ReferenceCase(name, l1, l2, pat, t, r) for pat, r in ranks.items()]


REFERENCE_CASES = (
    _cases("t1-a", 2, 131, 1, {"l1*l2": 0, "l1^2*l2^2": 0})
    + _cases("t1-b", 11, 29, 1, {"l1^2*l2": 0})
    + _cases("t1-c", 5, 41, 1, {"l1^2*l2": 0})
    + _cases("t1-d", 19, 317, 1, {"l1*l2": 0, "l1^2*l2": 0})
    + _cases("t1-e", 37, 131, 1, {"l1*l2": 0, "l1^2*l2": 0})
    + _cases("t1-f", 97, 17, 1, {"l1*l2^2": 0, "l1^2*l2^2": 0})
    + _cases("t2-a", 281, 89, 2, {"l1*l2": 1, "l1^2*l2": 1})
    + _cases("t2-b", 73, 269, 2, {"l1^2*l2": 1})
    + _cases("t2-c", 139, 389, 2, {"l1*l2": None, "l1^2*l2^2": None})
    + _cases("t2-d", 157, 19, 2, {"l1^2*l2": 1, "l1*l2^2": 1})
    + _cases("t4-a", 19, 467, 4, {"l1*l2": 1, "l1^2*l2": 3, "l1*l2^2": 1, "l1^2*l2^2": 1})
    + _cases("t4-b", 103, 13, 4, {"l1*l2": None, "l1^2*l2^2": None})
    + _cases("t3-a", 53, 71, 3, {"l1*l2": 0, "l1^2*l2": 2, "l1^2*l2^2": 0})
    + _cases("t3-b", 37, 29, 3, {"l1*l2": 2, "l1^2*l2": 0, "l1*l2^2": None, "l1^2*l2^2": 2})
    + _cases("t3-c", 157, 193, 3, {"l1^2*l2": 2, "l1*l2^2": 0})
    + _cases("t3-d", 73, 19, 3, {"l1*l2": 2, "l1^2*l2^2": 0})
    + _cases("t5", 199, 109, 5, {"l1*l2": 4, "l1^2*l2": 2, "l1*l2^2": 0, "l1^2*l2^2": 0})
)
