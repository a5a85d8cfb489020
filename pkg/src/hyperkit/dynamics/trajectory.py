from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

SIR_COLUMNS = ("step", "S", "I", "R")
SCHELLING_COLUMNS = ("step", "mean_G", "moves")
WALK_COLUMNS = ("step", "vertex")


@dataclass
class Trajectory:
    """Per-step records of a simulation, one tuple per row."""

    columns: Tuple[str, ...]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)
    final_state: Optional[Dict[int, Any]] = None

    def append(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(tuple(values))

    def column(self, name: str) -> List[Any]:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    @classmethod
    def from_columns(cls, columns: Sequence[str], rows) -> "Trajectory":
        return cls(tuple(columns), [tuple(r) for r in rows])
