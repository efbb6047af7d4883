"""Report emission as csv, json, or plain text at full float precision."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable

FORMATS = ("csv", "json", "plain")


def fmt_value(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower() if v is not None else ""
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, (list, tuple)):
        return ";".join(fmt_value(x) for x in v)
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if hasattr(v, "item"):  # numpy scalars
        return v.item()
    return v


def render(records: Iterable[dict], fmt: str) -> str:
    records = list(records)
    if fmt == "json":
        # json floats use the shortest round-tripping repr
        return json.dumps(_jsonable(records), indent=2) + "\n"
    if fmt == "csv":
        keys: list[str] = []
        for rec in records:
            keys.extend(k for k in rec if k not in keys)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        for rec in records:
            writer.writerow([fmt_value(_jsonable(rec.get(k))) for k in keys])
        return buf.getvalue()
    if fmt == "plain":
        blocks = []
        for rec in records:
            width = max((len(k) for k in rec), default=0)
            blocks.append("\n".join(f"{k:<{width}}  {fmt_value(_jsonable(v))}" for k, v in rec.items()))
        return "\n\n".join(blocks) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
