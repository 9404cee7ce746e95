"""Exact count tables and their CSV/JSON round trip."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .pmap import FamilyId

SCHEMAS: Dict[str, Tuple[str, ...]] = {
    "by_height": ("p",),
    "by_height_fix": ("p", "m"),
    "odci_profile": ("k_minus", "k_plus", "l_plus", "p"),
    "odci_profile_fix": ("k_minus", "k_plus", "l_plus", "m", "p"),
}


@dataclass
class CountTable:
    n: int
    family: FamilyId
    schema: str
    cells: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.family = FamilyId.parse(self.family)
        if self.schema not in SCHEMAS:
            raise ValueError(f"unknown key schema {self.schema!r}")
        width = len(SCHEMAS[self.schema])
        for key, value in self.cells.items():
            if len(key) != width:
                raise ValueError(f"key {key} does not match schema {self.schema}")
            if value < 0:
                raise ValueError(f"negative count at {key}")

    @property
    def columns(self) -> Tuple[str, ...]:
        return SCHEMAS[self.schema]

    def total(self) -> int:
        return sum(self.cells.values())

    def get(self, *key: int) -> int:
        return self.cells.get(tuple(key), 0)

    def rows(self):
        return sorted(self.cells.items())

    def __add__(self, other: "CountTable") -> "CountTable":
        if (self.n, self.family, self.schema) != (other.n, other.family, other.schema):
            raise ValueError("cannot merge tables with different n, family or schema")
        cells = dict(self.cells)
        for key, value in other.cells.items():
            cells[key] = cells.get(key, 0) + value
        return CountTable(self.n, self.family, self.schema, cells)

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        strip = lambda cells: {k: v for k, v in cells.items() if v}
        return (self.n, self.family, self.schema, strip(self.cells)) == (
            other.n,
            other.family,
            other.schema,
            strip(other.cells),
        )

    def by_height(self) -> "CountTable":
        """Collapse a height/fix table to heights."""
        if self.schema == "by_height":
            return self
        if self.schema != "by_height_fix":
            raise ValueError(f"cannot collapse {self.schema} to by_height")
        cells = {(p,): 0 for p in range(self.n + 1)}
        for (p, _), value in self.cells.items():
            cells[(p,)] += value
        return CountTable(self.n, self.family, "by_height", cells)

    # serialisation -------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*self.columns, "count"])
        for key, value in self.rows():
            writer.writerow([*key, str(value)])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "family": self.family.value,
            "schema": self.schema,
            "columns": list(self.columns),
            "cells": [
                {**dict(zip(self.columns, key)), "count": str(value)} for key, value in self.rows()
            ],
            "total": str(self.total()),
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_text(self) -> str:
        header = [*self.columns, "count"]
        body = [[str(x) for x in key] + [str(v)] for key, v in self.rows()]
        widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
        fmt = lambda r: "  ".join(c.rjust(w) for c, w in zip(r, widths))
        lines = [f"# n={self.n} family={self.family.value} schema={self.schema}", fmt(header)]
        lines += [fmt(r) for r in body]
        lines.append(f"# total {self.total()}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        doc = json.loads(text)
        cols = SCHEMAS[doc["schema"]]
        cells = {tuple(int(c[k]) for k in cols): int(c["count"]) for c in doc["cells"]}
        return cls(int(doc["n"]), doc["family"], doc["schema"], cells)

    @classmethod
    def from_csv(cls, text: str, n: int, family, schema: str | None = None) -> "CountTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        cols = tuple(header[:-1])
        if schema is None:
            matches = [s for s, c in SCHEMAS.items() if c == cols]
            if not matches:
                raise ValueError(f"unrecognised CSV header {header}")
            schema = matches[0]
        cells = {tuple(int(x) for x in row[:-1]): int(row[-1]) for row in reader if row}
        return cls(n, family, schema, cells)
