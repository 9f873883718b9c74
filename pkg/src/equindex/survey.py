"""Flat survey rows and their JSON / CSV encodings."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError
from .stiefel import CERTIFICATE_KEYS, NO_CERTIFICATE, StiefelParams, nontidy_certificate
from .tower import TOWER_REPORT_KEYS, TowerReport

SCHEMA_VERSION = 1
NONE = "none"

STIEFEL = "stiefel"
TOWER = "tower"

# column -> value type; "optint" may be absent, "intlist" is a list of ints
_TYPES = {
    "schema_version": "int",
    "l": "int", "k": "int", "N": "int", "cindex": "int",
    "coind_lower": "int", "coind_upper": "int", "s": "int", "alpha": "optint",
    "in_family": "bool", "case": "str", "sq_degree": "optint",
    "certification": "str", "ind_provenance": "str",
    "p": "int", "ht_z": "int", "ht_ez": "int", "cindex_exact": "int",
    "paper_lower": "int", "paper_alternatives": "intlist", "coind": "int",
    "coind_provenance": "str",
}

COLUMNS = {
    STIEFEL: ("schema_version",) + CERTIFICATE_KEYS,
    TOWER: ("schema_version",) + TOWER_REPORT_KEYS,
}

FILTERS = ("all", "in_family", "certified")


@dataclass(frozen=True)
class SurveyRow:
    kind: str
    values: tuple

    @property
    def columns(self) -> tuple[str, ...]:
        return COLUMNS[self.kind]

    def as_dict(self) -> dict:
        return dict(zip(self.columns, self.values))

    def __getitem__(self, key: str):
        return self.as_dict()[key]

    @classmethod
    def from_mapping(cls, kind: str, mapping: dict) -> SurveyRow:
        cols = COLUMNS[kind]
        missing = [c for c in cols if c not in mapping]
        if missing:
            raise ParameterError(f"row is missing columns {missing}")
        extra = [c for c in mapping if c not in cols]
        if extra:
            raise ParameterError(f"row has unknown columns {extra}")
        return cls(kind, tuple(_coerce(c, mapping[c]) for c in cols))


def _coerce(column: str, value):
    kind = _TYPES[column]
    if kind == "optint":
        if value is None or value == NONE:
            return None
        return int(value)
    if kind == "int":
        return int(value)
    if kind == "bool":
        if isinstance(value, bool):
            return value
        if value in ("true", "false"):
            return value == "true"
        raise ParameterError(f"{column}: expected true/false, got {value!r}")
    if kind == "intlist":
        if isinstance(value, str):
            return tuple(int(x) for x in value.split("|")) if value else ()
        return tuple(int(x) for x in value)
    return str(value)


def _json_value(value):
    if value is None:
        return NONE
    if isinstance(value, tuple):
        return list(value)
    return value


def _csv_value(value) -> str:
    if value is None:
        return NONE
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return "|".join(str(v) for v in value)
    return str(value)


def certificate_row(cert) -> SurveyRow:
    return SurveyRow.from_mapping(STIEFEL, {"schema_version": SCHEMA_VERSION, **cert.to_dict()})


def tower_row(report: TowerReport) -> SurveyRow:
    return SurveyRow.from_mapping(TOWER, {"schema_version": SCHEMA_VERSION, **report.to_dict()})


def stiefel_row(l: int, k: int) -> SurveyRow:
    return certificate_row(nontidy_certificate(StiefelParams(l, k)))


def _keep(row: SurveyRow, filter_: str) -> bool:
    if filter_ == "in_family":
        return row["in_family"]
    if filter_ == "certified":
        return row["certification"] != NO_CERTIFICATE
    return True


def _rows_for_l(args: tuple[int, int | None, str]) -> list[SurveyRow]:
    l, k_max, filter_ = args
    top = l - 1 if k_max is None else min(k_max, l - 1)
    rows = (stiefel_row(l, k) for k in range(1, top + 1))
    return [r for r in rows if _keep(r, filter_)]


def scan(l_max: int, k_max: int | None = None, filter_: str = "all", jobs: int = 1) -> list[SurveyRow]:
    """Certificate rows for 2 <= l <= l_max, 1 <= k <= min(k_max, l-1), ordered by (l, k)."""
    if l_max < 2:
        raise ParameterError(f"l-max must be >= 2, got {l_max}")
    if k_max is not None and k_max < 1:
        raise ParameterError(f"k-max must be >= 1, got {k_max}")
    if filter_ not in FILTERS:
        raise ParameterError(f"filter must be one of {FILTERS}, got {filter_!r}")
    work = [(l, k_max, filter_) for l in range(2, l_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_rows_for_l, work, chunksize=8))
    else:
        chunks = [_rows_for_l(w) for w in work]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r["l"], r["k"]))
    return rows


def json_object(row: SurveyRow) -> dict:
    return {c: _json_value(v) for c, v in zip(row.columns, row.values)}


def to_json(rows: Iterable[SurveyRow]) -> str:
    return json.dumps([json_object(r) for r in rows], indent=2) + "\n"


def to_csv(rows: Iterable[SurveyRow], kind: str) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS[kind])
    for r in rows:
        writer.writerow([_csv_value(v) for v in r.values])
    return buf.getvalue()


def from_json(text: str, kind: str) -> list[SurveyRow]:
    return [SurveyRow.from_mapping(kind, obj) for obj in json.loads(text)]


def from_csv(text: str, kind: str) -> list[SurveyRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS[kind]:
        raise ParameterError(f"unexpected CSV header {reader.fieldnames}")
    return [SurveyRow.from_mapping(kind, rec) for rec in reader]


def to_table(rows: list[SurveyRow], kind: str) -> str:
    cols = COLUMNS[kind][1:]
    cells = [[_csv_value(v) for v in r.values[1:]] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"
