"""Reading and writing the ``.gcode`` text format.

::

    GCODE 1
    field p=<p> f=<f> mod=<c0,c1,...,cf>
    code k=<k> n=<n>
    <k lines of n space-separated element encodings>
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .finite_field import FieldError, make_field
from .linear_code import CodeError, LinearCode

_HEADER = "GCODE 1"
_FIELD = re.compile(r"field p=(\d+) f=(\d+) mod=(\d+(?:,\d+)*)")
_CODE = re.compile(r"code k=(\d+) n=(\d+)")
_ROW = re.compile(r"\d+(?: \d+)*")


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def dumps(code: LinearCode) -> str:
    f = code.field
    lines = [
        _HEADER,
        f"field p={f.p} f={f.f} mod={','.join(str(c) for c in f.modulus)}",
        f"code k={code.k} n={code.n}",
    ]
    lines += [" ".join(str(int(x)) for x in row) for row in code.gen]
    return "\n".join(lines) + "\n"


def loads(text: str, name: str | None = None) -> LinearCode:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != _HEADER:
        raise FormatError(1, f"expected {_HEADER!r}")
    if len(lines) < 3:
        raise FormatError(len(lines) + 1, "truncated header")
    m = _FIELD.fullmatch(lines[1])
    if not m:
        raise FormatError(2, "expected 'field p=<p> f=<f> mod=<c0,...,cf>'")
    p, fdeg = int(m.group(1)), int(m.group(2))
    modulus = [int(c) for c in m.group(3).split(",")]
    try:
        field = make_field(p, fdeg, modulus)
    except FieldError as exc:
        raise FormatError(2, str(exc)) from None
    m = _CODE.fullmatch(lines[2])
    if not m:
        raise FormatError(3, "expected 'code k=<k> n=<n>'")
    k, n = int(m.group(1)), int(m.group(2))
    if k < 1 or n < 1:
        raise FormatError(3, "k and n must be positive")
    if len(lines) != 3 + k:
        raise FormatError(min(len(lines), 3 + k) + 1,
                          f"expected exactly {k} generator rows, found {len(lines) - 3}")
    rows = []
    for i in range(k):
        lineno = 4 + i
        line = lines[3 + i]
        if not _ROW.fullmatch(line):
            raise FormatError(lineno, "row must be space-separated integers")
        vals = [int(x) for x in line.split(" ")]
        if len(vals) != n:
            raise FormatError(lineno, f"row has {len(vals)} entries, expected {n}")
        if any(v >= field.q for v in vals):
            raise FormatError(lineno, f"entries must lie in [0, {field.q})")
        rows.append(vals)
    try:
        return LinearCode(field, np.array(rows, dtype=np.int64), name=name)
    except CodeError as exc:
        raise FormatError(4, str(exc)) from None


def read_code(path) -> LinearCode:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), name=path.stem)


def write_code(code: LinearCode, path) -> None:
    Path(path).write_text(dumps(code), encoding="utf-8")
