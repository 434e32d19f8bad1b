"""Plain-text formats for arrangements, multigraphs and parking vectors.

Arrangement files::

    # comments and blank lines are ignored
    arrangement 3
    1 2 1/2
    2 3 1/2

Multigraph files use the header ``multigraph <n>`` and lines ``<i> <j> <m>``.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .core import (
    Arrangement,
    DuplicateHyperplane,
    Hyperplane,
    IndexOutOfRange,
    Multigraph,
    NonPositiveConstant,
    ParkplaneError,
    ParkVec,
    SelfLoop,
    format_rational,
    label_to_str,
    signs_to_str,
)


class TextSyntaxError(ParkplaneError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NegativeValue(ParkplaneError):
    pass


def parse_rational(token: str) -> Fraction:
    try:
        if "/" in token:
            num, den = token.split("/")
            if not den.lstrip("+").isdigit() or int(den) == 0:
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(token))
    except ValueError:
        raise ValueError(f"not a rational number: {token!r}") from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _header(lines, keyword: str) -> int:
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise TextSyntaxError(f"missing '{keyword} <n>' header") from None
    if len(tokens) != 2 or tokens[0] != keyword:
        raise TextSyntaxError(f"expected '{keyword} <n>'", lineno)
    try:
        n = int(tokens[1])
    except ValueError:
        raise TextSyntaxError(f"bad vertex count {tokens[1]!r}", lineno) from None
    if n < 1:
        raise TextSyntaxError("vertex count must be positive", lineno)
    return n


def _index(token: str, n: int, lineno: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise TextSyntaxError(f"bad vertex index {token!r}", lineno) from None
    if not 1 <= v <= n:
        raise IndexOutOfRange(f"line {lineno}: vertex {v} outside 1..{n}")
    return v


def parse_arrangement(text: str) -> Arrangement:
    lines = _content_lines(text)
    n = _header(lines, "arrangement")
    hs: List[Hyperplane] = []
    seen = set()
    for lineno, tokens in lines:
        if len(tokens) != 3:
            raise TextSyntaxError("expected '<p> <q> <a>'", lineno)
        p = _index(tokens[0], n, lineno)
        q = _index(tokens[1], n, lineno)
        if p == q:
            raise TextSyntaxError(f"hyperplane needs distinct indices, got {p} {q}", lineno)
        try:
            a = parse_rational(tokens[2])
        except ValueError as exc:
            raise TextSyntaxError(str(exc), lineno) from None
        if a <= 0:
            raise NonPositiveConstant(f"line {lineno}: constant must be positive, got {tokens[2]}")
        h = Hyperplane(p, q, a)
        if h in seen:
            raise DuplicateHyperplane(f"line {lineno}: {h} repeats an earlier line")
        seen.add(h)
        hs.append(h)
    return Arrangement(n, tuple(hs))


def write_arrangement(arr: Arrangement) -> str:
    out = [f"arrangement {arr.n}"]
    out += [f"{h.p} {h.q} {format_rational(h.a)}" for h in arr]
    return "\n".join(out) + "\n"


def parse_multigraph(text: str) -> Multigraph:
    lines = _content_lines(text)
    n = _header(lines, "multigraph")
    edges = []
    for lineno, tokens in lines:
        if len(tokens) != 3:
            raise TextSyntaxError("expected '<i> <j> <m>'", lineno)
        i = _index(tokens[0], n, lineno)
        j = _index(tokens[1], n, lineno)
        if i == j:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {i}")
        try:
            m = int(tokens[2])
        except ValueError:
            raise TextSyntaxError(f"bad multiplicity {tokens[2]!r}", lineno) from None
        if m < 1:
            raise TextSyntaxError("multiplicity must be at least 1", lineno)
        edges.append((i, j, m))
    return Multigraph.from_edges(n, edges)


def write_multigraph(G: Multigraph) -> str:
    out = [f"multigraph {G.n}"]
    out += [f"{i} {j} {m}" for i, j, m in G.edges()]
    return "\n".join(out) + "\n"


def parse_parkvec(text: str) -> ParkVec:
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            v = int(token)
        except ValueError:
            raise TextSyntaxError(f"bad value {token!r} in parking vector") from None
        if v < 0:
            raise NegativeValue(f"parking vector entries must be >= 0, got {v}")
        values.append(v)
    return tuple(values)


def write_parkvec(f: Sequence[int]) -> str:
    return ",".join(str(v) for v in f)


def point_to_str(point: Sequence[Fraction]) -> str:
    return "(" + ",".join(format_rational(x) for x in point) + ")"


def region_record(region) -> dict:
    return {
        "signs": signs_to_str(region.signs),
        "label": label_to_str(region.label),
        "witness": [format_rational(x) for x in region.witness],
    }


def write_regions(regions: Iterable, fmt: str = "tsv") -> str:
    """Serialize regions as TSV (``signs  label  witness``) or JSON lines."""
    if fmt == "json":
        return "".join(json.dumps(region_record(r)) + "\n" for r in regions)
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    rows = ["signs\tlabel\twitness"]
    for r in regions:
        rows.append(f"{signs_to_str(r.signs)}\t{label_to_str(r.label)}\t{point_to_str(r.witness)}")
    return "\n".join(rows) + "\n"


def write_report(report, fmt: str = "tsv") -> str:
    """Serialize a verification report (anything with ``as_dict()``)."""
    data = report.as_dict()
    if fmt == "json":
        return json.dumps(data) + "\n"
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    rows = []
    for key, value in data.items():
        if isinstance(value, dict):
            value = " ".join(f"{k}:{v}" for k, v in value.items())
        elif isinstance(value, list):
            value = " ".join(str(v) for v in value)
        rows.append(f"{key}\t{value}")
    return "\n".join(rows) + "\n"


def label_table(regions: Iterable) -> List[Tuple[ParkVec, int]]:
    """``(label, number of regions carrying it)`` sorted by label."""
    counts = Counter(r.label for r in regions)
    return sorted(counts.items())
