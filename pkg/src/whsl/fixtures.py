"""Embedded fixture data: the published case lists for a-invariant 1..6.

Each record is one printed case line.  ``status`` is "ok" when the line
is arithmetically sound and reproduced verbatim by the enumerator,
"corrected" when the printed line is internally inconsistent and carries
the forced correction in ``resolved`` (see ``remark``), or "duplicate"
for lines printed twice.  tools/refresh_fixtures.py regenerates the file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .dpd import FractionalDivisor
from .graded import WeightedType

__all__ = ["PaperCase", "paper_cases", "paper_count_table", "PAPER_TABLE"]

# The published count table: rows by (genus, branch count), columns by
# a-invariant.  Note the printed alpha=5 column sums to 60, not to its
# printed total 58; reconciliation reports surface this.
PAPER_TABLE: dict[str, dict[int, int]] = {
    "g=0, br=3": {1: 14, 2: 6, 3: 7, 4: 7, 5: 11, 6: 0},
    "g=0, br>=4": {1: 8, 2: 1, 3: 10, 4: 2, 5: 22, 6: 1},
    "g=1": {1: 6, 2: 8, 3: 8, 4: 7, 5: 8, 6: 8},
    "g=2": {1: 2, 2: 2, 3: 3, 4: 3, 5: 6, 6: 0},
    "g=3": {1: 1, 2: 2, 3: 2, 4: 3, 5: 5, 6: 1},
    "g>=4": {1: 0, 2: 2, 3: 4, 4: 6, 5: 8, 6: 9},
    "Total": {1: 31, 2: 21, 3: 34, 4: 28, 5: 58, 6: 19},
}


@dataclass(frozen=True)
class PaperCase:
    case_id: str
    alpha: int
    printed_type: tuple[int, int, int, int]
    printed_genus: int
    printed_deg_e: int
    printed_branches: tuple[tuple[int, int], ...]
    notes: tuple[str, ...]
    status: str  # ok | corrected | duplicate
    resolved_type: tuple[int, int, int, int]
    resolved_genus: int
    resolved_deg_e: int
    resolved_branches: tuple[tuple[int, int], ...]
    duplicate_of: str | None
    remark: str | None

    @property
    def wt(self) -> WeightedType:
        """The weight type realized by this case (corrections applied)."""
        return WeightedType(*self.resolved_type)

    @property
    def divisor(self) -> FractionalDivisor:
        """The divisor realized by this case (corrections applied)."""
        return FractionalDivisor(
            genus=self.resolved_genus,
            deg_e=self.resolved_deg_e,
            branches=self.resolved_branches,
            notes=self.notes,
        )


def _parse(record: dict) -> PaperCase:
    printed_type = tuple(record["type"])
    printed_branches = tuple(tuple(b) for b in record["branches"])
    resolved = record.get("resolved")
    if resolved is None:
        resolved = {
            "type": record["type"],
            "genus": record["genus"],
            "degE": record["degE"],
            "branches": record["branches"],
        }
    return PaperCase(
        case_id=record["case"],
        alpha=record["alpha"],
        printed_type=printed_type,
        printed_genus=record["genus"],
        printed_deg_e=record["degE"],
        printed_branches=printed_branches,
        notes=tuple(record.get("notes", ())),
        status=record["status"],
        resolved_type=tuple(resolved["type"]),
        resolved_genus=resolved["genus"],
        resolved_deg_e=resolved["degE"],
        resolved_branches=tuple(tuple(b) for b in resolved["branches"]),
        duplicate_of=record.get("duplicate_of"),
        remark=record.get("remark"),
    )


@lru_cache(maxsize=1)
def _all_cases() -> tuple[PaperCase, ...]:
    text = resources.files("whsl").joinpath("data/published_cases.jsonl").read_text("utf-8")
    return tuple(_parse(json.loads(line)) for line in text.splitlines() if line.strip())


def paper_cases(alpha: int | None = None) -> list[PaperCase]:
    """All fixture cases, or those for one a-invariant."""
    cases = _all_cases()
    if alpha is None:
        return list(cases)
    return [case for case in cases if case.alpha == alpha]


def paper_count_table(alpha: int) -> dict[str, int]:
    """The published count-table column for one a-invariant."""
    return {row: by_alpha[alpha] for row, by_alpha in PAPER_TABLE.items()}
