"""Flat-file catalogs of quantum code records (JSON and CSV).

JSON is an array of objects with the fields in :data:`JSON_FIELDS`;
``provenance`` is ``{"codes": [...], "params": {...}}``.  CSV uses the
fixed column order :data:`CSV_COLUMNS`, with the classical code labels
joined by ``;`` and the parameters written as ``name=value`` pairs joined
by ``;``.  Parsing what was serialized returns equal entries.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .quantum import LEVELS, QuantumCodeRecord
from .tables import COLUMNS, Discrepancy, Table1Row, Table2, Table2Cell, Table2Row

JSON_FIELDS = ("n", "k", "field_size", "dz", "dz_exact", "dx", "dx_exact", "d_sym",
               "construction", "provenance", "verification_level")
CSV_COLUMNS = ("n", "k", "field_size", "dz", "dz_exact", "dx", "dx_exact", "d_sym",
               "construction", "codes", "params", "verification_level", "q",
               "tool_version", "created")


def tool_version() -> str:
    from . import __version__
    return __version__


@dataclass(frozen=True)
class CatalogEntry:
    record: QuantumCodeRecord
    q: int
    verification_level: str = "formula"
    tool_version: str = ""
    created: str | None = None  # ISO timestamp; omitted by default for reproducible output

    def __post_init__(self):
        if self.verification_level not in LEVELS:
            raise ValueError(f"unknown verification level {self.verification_level!r}")
        if self.record.field_size != self.q * self.q:
            raise ValueError(f"field size {self.record.field_size} does not match q={self.q}")

    def attains(self, level: str) -> bool:
        """Levels are cumulative: exhaustive evidence implies rank evidence."""
        return LEVELS.index(self.verification_level) >= LEVELS.index(level)


def entry_for(record: QuantumCodeRecord, q: int, created: str | None = None) -> CatalogEntry:
    return CatalogEntry(record, q, record.verification, tool_version(), created)


def to_dict(entry: CatalogEntry) -> dict:
    r = entry.record
    out = {
        "n": r.n, "k": r.k, "field_size": r.field_size,
        "dz": r.dz, "dz_exact": r.dz_exact, "dx": r.dx, "dx_exact": r.dx_exact,
        "d_sym": r.d_sym, "construction": r.construction,
        "provenance": {"codes": list(r.provenance), "params": dict(r.params)},
        "verification_level": entry.verification_level,
        "q": entry.q, "tool_version": entry.tool_version,
    }
    if entry.created is not None:
        out["created"] = entry.created
    return out


def from_dict(obj: dict) -> CatalogEntry:
    missing = [f for f in JSON_FIELDS if f not in obj]
    if missing:
        raise ValueError(f"catalog entry lacks {missing}")
    prov = obj["provenance"]
    level = obj["verification_level"]
    rec = QuantumCodeRecord(int(obj["n"]), int(obj["k"]), int(obj["field_size"]),
                            int(obj["dz"]), bool(obj["dz_exact"]),
                            int(obj["dx"]), bool(obj["dx_exact"]),
                            obj["construction"], tuple(prov["codes"]),
                            tuple((str(a), int(b)) for a, b in prov["params"].items()),
                            verification=level)
    if rec.d_sym != obj["d_sym"]:
        raise ValueError(f"d_sym {obj['d_sym']} inconsistent with dz/dx {rec.dz}/{rec.dx}")
    q = obj.get("q")
    if q is None:
        q = round(rec.field_size ** 0.5)
    return CatalogEntry(rec, int(q), level, obj.get("tool_version", ""), obj.get("created"))


def dumps_json(entries) -> str:
    return json.dumps([to_dict(e) for e in entries], indent=2, ensure_ascii=False) + "\n"


def loads_json(text: str) -> list[CatalogEntry]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("a catalog is a JSON array")
    return [from_dict(obj) for obj in data]


def _bool(s: str) -> bool:
    if s not in ("true", "false"):
        raise ValueError(f"expected true/false, got {s!r}")
    return s == "true"


def dumps_csv(entries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for e in entries:
        d = to_dict(e)
        w.writerow([
            d["n"], d["k"], d["field_size"], d["dz"], str(d["dz_exact"]).lower(),
            d["dx"], str(d["dx_exact"]).lower(), d["d_sym"], d["construction"],
            ";".join(d["provenance"]["codes"]),
            ";".join(f"{a}={b}" for a, b in d["provenance"]["params"].items()),
            d["verification_level"], d["q"], d["tool_version"], d.get("created") or "",
        ])
    return buf.getvalue()


def loads_csv(text: str) -> list[CatalogEntry]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    out = []
    for row in reader:
        params = {}
        if row["params"]:
            for item in row["params"].split(";"):
                a, _, b = item.partition("=")
                params[a] = int(b)
        obj = {
            "n": int(row["n"]), "k": int(row["k"]), "field_size": int(row["field_size"]),
            "dz": int(row["dz"]), "dz_exact": _bool(row["dz_exact"]),
            "dx": int(row["dx"]), "dx_exact": _bool(row["dx_exact"]),
            "d_sym": int(row["d_sym"]), "construction": row["construction"],
            "provenance": {"codes": row["codes"].split(";") if row["codes"] else [],
                           "params": params},
            "verification_level": row["verification_level"], "q": int(row["q"]),
            "tool_version": row["tool_version"], "created": row["created"] or None,
        }
        out.append(from_dict(obj))
    return out


# -- tables ---------------------------------------------------------------

def _entry_or_none(rec, q):
    return None if rec is None else to_dict(entry_for(rec, q))


def table_to_obj(table) -> dict:
    """JSON-ready form of a Table 1 row list or a :class:`Table2`."""
    if isinstance(table, Table2):
        return {
            "table": 2, "q": table.q, "columns": list(COLUMNS),
            "rows": [{"k": r.k, "cells": [{"column": c.column, "d": c.d, "star": c.star,
                                           "entry": _entry_or_none(c.record, table.q)}
                                          for c in r.cells]}
                     for r in table.rows],
            "discrepancies": [{"k": d.k, "column": d.column, "computed": d.computed,
                               "published": d.published} for d in table.discrepancies],
        }
    return {"table": 1, "rows": [{"q": r.q, "increase": r.increase,
                                  "entry": to_dict(entry_for(r.record, r.q))} for r in table]}


def table_from_obj(obj: dict):
    if obj.get("table") == 1:
        return [Table1Row(int(r["q"]), from_dict(r["entry"]).record, int(r["increase"]))
                for r in obj["rows"]]
    if obj.get("table") == 2:
        rows = []
        for r in obj["rows"]:
            cells = tuple(Table2Cell(c["column"], int(c["d"]),
                                     None if c["entry"] is None else from_dict(c["entry"]).record,
                                     bool(c["star"])) for c in r["cells"])
            rows.append(Table2Row(int(r["k"]), cells))
        disc = tuple(Discrepancy(int(d["k"]), d["column"], int(d["computed"]), int(d["published"]))
                     for d in obj["discrepancies"])
        return Table2(int(obj["q"]), tuple(rows), disc)
    raise ValueError("not a serialized table")


def dumps_table(table) -> str:
    return json.dumps(table_to_obj(table), indent=2, ensure_ascii=False) + "\n"


def loads_table(text: str):
    return table_from_obj(json.loads(text))


__all__ = ["dumps_table", "loads_table", "table_to_obj", "table_from_obj", "CatalogEntry", "entry_for", "to_dict", "from_dict", "dumps_json", "loads_json",
           "dumps_csv", "loads_csv", "JSON_FIELDS", "CSV_COLUMNS", "tool_version"]
