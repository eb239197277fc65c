"""graph6, DIMACS edge format and JSON edge lists.

All parsers raise :class:`FormatError` (never anything else) on bad input.
DIMACS is 1-based on the wire and 0-based in memory.
"""
from __future__ import annotations

import json
import os
import sys
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FormatWarning(UserWarning):
    pass


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    name: str | None = None
    source: str = "<memory>"


# -------------------------------------------------------------------- graph6

def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise FormatError("graph6 eight-byte size form (n > 258047) is not supported")
    if len(data) < 4:
        raise FormatError("truncated graph6 size prefix")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n < 63:
        raise FormatError(f"non-canonical graph6 size prefix encodes n={n}")
    return n, 4


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header).

    Trailing characters beyond the required length are accepted only if they
    are all ``?`` (zero padding); any nonzero bit beyond the triangle is an error.
    """
    if isinstance(line, str):
        try:
            data = line.encode("ascii")
        except UnicodeEncodeError:
            raise FormatError("graph6 must be ascii") from None
    else:
        data = bytes(line)
    data = data.strip(b"\r\n")
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} outside the graph6 range 63..126")
    n, off = _graph6_size(data)
    body = data[off:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise FormatError(f"graph6 body too short: need {need} bytes for n={n}, got {len(body)}")
    if any(b != 63 for b in body[need:]):
        raise FormatError("nonzero data after the end of the adjacency triangle")
    bits = 0
    for b in body[:need]:
        bits = (bits << 6) | (b - 63)
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits in graph6 body")
    bits >>= pad
    es = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> k) & 1:
                es.append((i, j))
            k -= 1
    return Graph(n, es)


def emit_graph6(g: Graph) -> str:
    """Labeled graph6 encoding (no header, no newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise FormatError(f"n={n} exceeds graph6 support limit {GRAPH6_MAX_N}")
    if n < 63:
        out = [n + 63]
    else:
        out = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    acc = 0
    cnt = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((i, j) in g.edges)
            cnt += 1
            if cnt == 6:
                out.append(acc + 63)
                acc = cnt = 0
    if cnt:
        out.append((acc << (6 - cnt)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6(stream: Iterable[str | bytes]) -> Iterator[Graph]:
    """Yield one graph per non-blank line; errors carry the 1-based line number."""
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line.strip())
        except FormatError as exc:
            raise FormatError(str(exc), lineno) from None


# -------------------------------------------------------------------- DIMACS

def _dedupe(pairs, n, strict, where):
    seen = set()
    out = []
    for lineno, u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in edge {(u, v)} for n={n}", lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            if strict:
                raise FormatError(f"duplicate edge {key}", lineno)
            warnings.warn(f"{where}: duplicate edge {key} dropped", FormatWarning, stacklevel=3)
            continue
        seen.add(key)
        out.append(key)
    return out


def parse_dimacs(text: str, strict: bool = False) -> Graph:
    n = m = None
    pairs = []
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if n is not None:
                    raise FormatError("second problem line", lineno)
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise FormatError("expected 'p edge <n> <m>'", lineno)
                n, m = int(parts[2]), int(parts[3])
                if n < 0 or m < 0:
                    raise FormatError("negative counts in problem line", lineno)
            elif tag == "e":
                if n is None:
                    raise FormatError("edge line before problem line", lineno)
                if len(parts) != 3:
                    raise FormatError("expected 'e <u> <v>'", lineno)
                pairs.append((lineno, int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise FormatError(f"unknown line type {tag!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"non-integer field: {raw.strip()!r}", lineno) from None
    if n is None:
        raise FormatError("missing 'p edge' problem line")
    if len(pairs) != m:
        msg = f"header declares {m} edges but {len(pairs)} edge lines follow"
        if strict:
            raise FormatError(msg)
        warnings.warn(msg, FormatWarning, stacklevel=2)
    return Graph(n, _dedupe(pairs, n, strict, "dimacs"))


def emit_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"c {c}" for c in comment.splitlines()]
    lines.append(f"p edge {g.n} {g.e}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------- JSON

def parse_edgelist_json(text: str | dict, strict: bool = False) -> Graph:
    return _json_document(text, strict).graph


def _json_document(text, strict, source="<memory>") -> GraphDocument:
    try:
        obj = json.loads(text) if isinstance(text, str) else text
    except (json.JSONDecodeError, RecursionError) as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise FormatError("expected a JSON object with keys 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError("'n' must be a nonnegative integer")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise FormatError("'edges' must be a list")
    pairs = []
    for i, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise FormatError(f"edge #{i} is not a pair of integers: {e!r}")
        pairs.append((None, e[0], e[1]))
    if "m" in obj and obj["m"] != len(edges):
        msg = f"declared m={obj['m']} but {len(edges)} edges listed"
        if strict:
            raise FormatError(msg)
        warnings.warn(msg, FormatWarning, stacklevel=3)
    name = obj.get("name")
    g = Graph(n, _dedupe(pairs, n, strict, "json"))
    return GraphDocument(g, name if isinstance(name, str) else None, source)


def emit_edgelist_json(g: Graph, name: str | None = None) -> str:
    obj = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if name is not None:
        obj["name"] = name
    return json.dumps(obj)


# ------------------------------------------------------------ file handling

def sniff_format(text: str, filename: str | None = None) -> str:
    if filename:
        ext = os.path.splitext(filename)[1].lower()
        if ext in (".g6", ".graph6"):
            return "graph6"
        if ext in (".json",):
            return "json"
        if ext in (".dimacs", ".col", ".dim"):
            return "dimacs"
    head = text.lstrip()
    if head.startswith("{"):
        return "json"
    first = head.split(None, 1)[0] if head else ""
    if first in ("p", "c", "e"):
        return "dimacs"
    return "graph6"


def parse_text(text: str, fmt: str | None = None, strict: bool = False,
               source: str = "<memory>") -> GraphDocument:
    fmt = fmt or sniff_format(text, source)
    try:
        if fmt == "graph6":
            lines = [x for x in text.splitlines() if x.strip()]
            if len(lines) != 1:
                raise FormatError(f"expected exactly one graph6 line, got {len(lines)}")
            return GraphDocument(parse_graph6(lines[0].strip()), None, source)
        if fmt == "dimacs":
            return GraphDocument(parse_dimacs(text, strict), None, source)
        if fmt == "json":
            return _json_document(text, strict, source)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"unknown format {fmt!r}")


def read_graph(path: str | None, fmt: str | None = None, strict: bool = False) -> GraphDocument:
    """Read a graph from ``path`` or, when ``path`` is None or '-', from stdin."""
    if path in (None, "-"):
        return parse_text(sys.stdin.read(), fmt, strict, "<stdin>")
    try:
        with open(path, encoding="ascii", errors="strict") as fh:
            text = fh.read()
    except UnicodeDecodeError:
        raise FormatError(f"{path}: not an ascii file") from None
    return parse_text(text, fmt, strict, path)


def write_text(text: str, out: IO[str] | None = None) -> None:
    (out or sys.stdout).write(text if text.endswith("\n") else text + "\n")
