"""Readers and writers for the plain-text table formats.

Four formats share the same conventions: UTF-8, LF line endings, no
trailing whitespace, a versioned magic first line, and canonical element
order so that write-then-read is byte-stable.

    TRS 1     ternary ring: header, `q <q>`, then q^3 value lines
    QF 1      quasi-field: header, `q <q>`, q^2 addition then q^2
              multiplication lines
    APLANE 1  plane: header, `points <n>`, `lines <m>`, then m lines of
              strictly increasing point indices
    COLL 1    collineation: header, `points <n>`, then n lines `i -> p`
"""

from __future__ import annotations

from .errors import FormatError
from .plane import AffinePlane
from .quasifield import QuasiField
from .ternary import TernaryRing


def _read_lines(path):
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(str(exc), path=path) from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for i, line in enumerate(lines, start=1):
        if line != line.rstrip() or "\r" in line:
            raise FormatError("trailing whitespace or CR", path=path, line_no=i)
    return lines


def _write_lines(path, lines):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


class _Cursor:
    def __init__(self, path, lines):
        self.path = path
        self.lines = lines
        self.pos = 0

    def next(self, what):
        if self.pos >= len(self.lines):
            raise FormatError(f"unexpected end of file, expected {what}",
                              path=self.path, line_no=len(self.lines) + 1)
        self.pos += 1
        return self.lines[self.pos - 1]

    def fail(self, msg):
        raise FormatError(msg, path=self.path, line_no=self.pos)

    def done(self):
        if self.pos != len(self.lines):
            raise FormatError("trailing content after table",
                              path=self.path, line_no=self.pos + 1)


def _expect_magic(cur, magic):
    line = cur.next(f"header `{magic}`")
    if line != magic:
        cur.fail(f"expected header `{magic}`, got `{line}`")


def _expect_int_field(cur, key, minimum=0):
    line = cur.next(f"`{key} <value>`")
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != key or not parts[1].isdigit():
        cur.fail(f"expected `{key} <integer>`, got `{line}`")
    value = int(parts[1])
    if value < minimum:
        cur.fail(f"{key} must be >= {minimum}, got {value}")
    return value


def _expect_value(cur, q, what):
    line = cur.next(what)
    if not line.isdigit():
        cur.fail(f"expected a {what}, got `{line}`")
    v = int(line)
    if not 0 <= v < q:
        cur.fail(f"{what} {v} out of range 0..{q - 1}")
    return v


def read_trs(path):
    cur = _Cursor(path, _read_lines(path))
    _expect_magic(cur, "TRS 1")
    q = _expect_int_field(cur, "q", minimum=2)
    table = tuple(_expect_value(cur, q, "table value") for _ in range(q ** 3))
    cur.done()
    return TernaryRing(q, table)


def write_trs(path, T):
    lines = ["TRS 1", f"q {T.q}"]
    lines.extend(str(v) for v in T.table)
    _write_lines(path, lines)


def read_qf(path):
    cur = _Cursor(path, _read_lines(path))
    _expect_magic(cur, "QF 1")
    q = _expect_int_field(cur, "q", minimum=2)
    add = tuple(_expect_value(cur, q, "addition value") for _ in range(q * q))
    mul = tuple(_expect_value(cur, q, "multiplication value") for _ in range(q * q))
    cur.done()
    return QuasiField(q, add, mul)


def write_qf(path, Q):
    lines = ["QF 1", f"q {Q.q}"]
    lines.extend(str(v) for v in Q.add_table)
    lines.extend(str(v) for v in Q.mul_table)
    _write_lines(path, lines)


def read_plane(path):
    cur = _Cursor(path, _read_lines(path))
    _expect_magic(cur, "APLANE 1")
    n = _expect_int_field(cur, "points", minimum=1)
    m = _expect_int_field(cur, "lines", minimum=0)
    lines = []
    for _ in range(m):
        raw = cur.next("a line of point indices")
        parts = raw.split(" ")
        if not parts or any(not p.isdigit() for p in parts):
            cur.fail(f"expected space-separated point indices, got `{raw}`")
        points = tuple(int(p) for p in parts)
        if any(not 0 <= p < n for p in points):
            cur.fail("point index out of range")
        if any(points[i] >= points[i + 1] for i in range(len(points) - 1)):
            cur.fail("point indices must be strictly increasing")
        lines.append(points)
    if lines != sorted(lines):
        cur.fail("lines are not in canonical lexicographic order")
    cur.done()
    return AffinePlane.from_lines(n, lines)


def write_plane(path, P):
    lines = ["APLANE 1", f"points {P.n}", f"lines {len(P.lines)}"]
    lines.extend(" ".join(str(p) for p in line) for line in P.lines)
    _write_lines(path, lines)


def read_coll(path):
    cur = _Cursor(path, _read_lines(path))
    _expect_magic(cur, "COLL 1")
    n = _expect_int_field(cur, "points", minimum=1)
    perm = []
    for i in range(n):
        raw = cur.next("a mapping line `i -> p`")
        parts = raw.split(" ")
        if (len(parts) != 3 or parts[1] != "->"
                or not parts[0].isdigit() or not parts[2].isdigit()):
            cur.fail(f"expected `{i} -> <point>`, got `{raw}`")
        if int(parts[0]) != i:
            cur.fail(f"expected source point {i}, got {parts[0]}")
        v = int(parts[2])
        if not 0 <= v < n:
            cur.fail(f"image point {v} out of range")
        perm.append(v)
    cur.done()
    if sorted(perm) != list(range(n)):
        raise FormatError("mapping is not a permutation", path=path,
                          line_no=len(cur.lines))
    return tuple(perm)


def write_coll(path, perm):
    lines = ["COLL 1", f"points {len(perm)}"]
    lines.extend(f"{i} -> {v}" for i, v in enumerate(perm))
    _write_lines(path, lines)
