"""JSON code descriptors and CSV word files.

Symbols on the wire are discrete-log indices with respect to the field's
primitive element, ``-1`` standing for zero.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .galois import FiniteField, field_from_descriptor
from .lrc_core import CodeError, LinearCode, Partition, RecoveringStructure

SCHEMA_VERSION = 1


def to_logs(F: FiniteField, values) -> list[int]:
    return [F.log_index(int(v)) for v in values]


def from_logs(F: FiniteField, logs) -> list[int]:
    return [F.from_log_index(int(i)) for i in logs]


def code_to_dict(code: LinearCode) -> dict:
    F = code.field
    parts = code.structure.partitions
    desc = {
        "schema_version": SCHEMA_VERSION,
        "field": F.descriptor(),
        "family": code.family,
        "n": code.n,
        "k": code.k,
        "r": list(code.localities),
        "designed_distance": code.designed_distance,
        "params": code.params,
        "fibers": [list(f) for f in parts[0].fibers],
        "xvals": to_logs(F, parts[0].xval),
        "labels": [to_logs(F, lab) for lab in code.labels],
        "row_names": list(code.row_names),
        "G": [to_logs(F, row) for row in code.G],
    }
    if len(parts) == 2:
        desc["second"] = {
            "r": parts[1].locality,
            "fibers": [list(f) for f in parts[1].fibers],
            "xvals": to_logs(F, parts[1].xval),
        }
    return desc


def code_from_dict(desc: dict) -> LinearCode:
    if desc.get("schema_version") != SCHEMA_VERSION:
        raise CodeError(f"unsupported descriptor schema {desc.get('schema_version')!r}")
    F = field_from_descriptor(desc["field"])
    parts = [Partition(tuple(map(tuple, desc["fibers"])), tuple(from_logs(F, desc["xvals"])))]
    if "second" in desc:
        sec = desc["second"]
        parts.append(Partition(tuple(map(tuple, sec["fibers"])), tuple(from_logs(F, sec["xvals"]))))
    G = np.array([from_logs(F, row) for row in desc["G"]], dtype=np.int64).reshape(
        desc["k"], desc["n"]
    )
    G.setflags(write=False)
    labels = tuple(tuple(from_logs(F, lab)) for lab in desc.get("labels", []))
    structure = RecoveringStructure(desc["n"], tuple(parts))
    if list(structure.localities) != list(desc["r"]):
        raise CodeError("descriptor localities disagree with its fibers")
    return LinearCode(F, G, structure, desc["family"], int(desc["designed_distance"]),
                      dict(desc.get("params", {})), labels, tuple(desc.get("row_names", [])))


def save_code(code: LinearCode, path: str | Path) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code), indent=1) + "\n", encoding="utf-8")


def load_code(path: str | Path) -> LinearCode:
    return code_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def label_text(F: FiniteField, label) -> str:
    return ":".join(str(F.log_index(v)) for v in label)


def word_to_csv(code: LinearCode, word, present=None) -> str:
    F = code.field
    present = [True] * code.n if present is None else present
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "label", "symbol", "present"])
    for i in range(code.n):
        label = label_text(F, code.labels[i]) if code.labels else ""
        w.writerow([i, label, F.log_index(int(word[i])), int(bool(present[i]))])
    return buf.getvalue()


def word_from_csv(code: LinearCode, text: str) -> tuple[np.ndarray, np.ndarray]:
    F = code.field
    rows = list(csv.DictReader(io.StringIO(text)))
    if len(rows) != code.n:
        raise CodeError(f"word file has {len(rows)} symbols, code length is {code.n}")
    word = np.zeros(code.n, dtype=np.int64)
    present = np.ones(code.n, dtype=bool)
    for row in rows:
        i = int(row["index"])
        present[i] = row.get("present", "1").strip() not in ("0", "")
        word[i] = F.from_log_index(int(row["symbol"])) if present[i] else 0
    return word, present
