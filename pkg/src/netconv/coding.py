"""Coding tables: the value <-> integer-code correspondence for categorical data.

A coding table enumerates the distinct values of a categorical variable in a
fixed order; the code of a value is its position plus the table's base (the
smallest index, 0 or 1). Tables are kept on the network they describe so the
coded (factorized) representation is always invertible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .errors import CodingError


class LevelPolicy(Enum):
    """How level order is chosen when a table is built."""

    FILE_ORDER = "file_order"  # first appearance wins
    SORTED = "sorted"  # Unicode code point order, locale independent


@dataclass(frozen=True)
class CodingTable:
    """Ordered list of distinct categorical values with their code base.

    ``name`` records what is coded ("relation", "node", a property name);
    it is descriptive metadata and excluded from equality because the
    serialized formats do not carry it.
    """

    name: str = field(compare=False)
    levels: tuple[str, ...] = ()
    base: int = 1

    def __post_init__(self):
        seen = set()
        for lv in self.levels:
            if not lv:
                raise ValueError("coding table level must be non-empty text")
            if lv in seen:
                raise ValueError(f"duplicate coding table level: {lv!r}")
            seen.add(lv)

    def __len__(self) -> int:
        return len(self.levels)

    def __contains__(self, value: str) -> bool:
        return value in self.levels

    def code_of(self, value: str) -> int:
        try:
            return self.base + self.levels.index(value)
        except ValueError:
            raise CodingError(f"value {value!r} not in coding table {self.name!r}") from None

    def value_of(self, code: int) -> str:
        i = code - self.base
        if not 0 <= i < len(self.levels):
            raise CodingError(
                f"code {code} out of range [{self.base}, {self.base + len(self.levels) - 1}]"
                f" for coding table {self.name!r}"
            )
        return self.levels[i]

    def in_range(self, code: int) -> bool:
        return self.base <= code < self.base + len(self.levels)


def build_coding_table(
    name: str,
    values: Iterable[Optional[str]],
    policy: LevelPolicy = LevelPolicy.SORTED,
    base: int = 1,
) -> CodingTable:
    """Enumerate the distinct non-missing values of a categorical variable.

    Missing values (None) contribute no level. ``base`` must be 0 or 1.
    """
    if base not in (0, 1):
        raise ValueError(f"coding table base must be 0 or 1, got {base}")
    if policy is LevelPolicy.SORTED:
        levels = sorted({v for v in values if v is not None})
    else:
        levels = []
        for v in values:
            if v is not None and v not in levels:
                levels.append(v)
    return CodingTable(name=name, levels=tuple(levels), base=base)


def encode(
    values: Iterable[Optional[str]], table: CodingTable, missing_code: int = 0
) -> list[int]:
    """Replace each value with its code; missing values map to ``missing_code``.

    When the table's base is 0, code 0 is live and collides with the default
    ``missing_code``; callers wanting missing values at base 0 must pick a
    code outside the table range.
    """
    out = []
    for pos, v in enumerate(values):
        if v is None:
            out.append(missing_code)
        else:
            try:
                out.append(table.code_of(v))
            except CodingError:
                raise CodingError(
                    f"value {v!r} at position {pos} not in coding table {table.name!r}"
                ) from None
    return out


def decode(
    codes: Iterable[int], table: CodingTable, missing_code: int = 0
) -> list[Optional[str]]:
    """Exact inverse of :func:`encode` on its range; ``missing_code`` -> None."""
    out = []
    for pos, c in enumerate(codes):
        if c == missing_code:
            out.append(None)
        elif table.in_range(c):
            out.append(table.value_of(c))
        else:
            raise CodingError(
                f"code {c} at position {pos} out of range for coding table {table.name!r}"
            )
    return out
