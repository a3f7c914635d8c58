"""Text interchange formats: graph6 and a plain edge-list format.

graph6 packs the upper triangle column-wise -- x(0,1), x(0,2), x(1,2),
x(0,3), ... -- six bits per printable byte (offset 63), most significant bit
first. Sizes up to 62 use one size byte; 63..258047 use the extended form
(byte 126 followed by three 6-bit digits, big-endian).
"""

from __future__ import annotations

from .errors import GraphParseError
from .graphs import Graph

_MAX_LONG_N = 258047


def parse_graph6(text):
    """Decode one graph6 line into a Graph."""
    line = text.rstrip("\n")
    if not line:
        raise GraphParseError("empty graph6 line", offset=0)
    data = line.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(
                f"byte {b!r} at offset {off} outside graph6 range 63..126", offset=off
            )
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphParseError(
                "8-byte graph6 size form (n > 258047) is not supported", offset=1
            )
        if len(data) < 4:
            raise GraphParseError("truncated extended size field", offset=len(data))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | (data[k] - 63)
        pos = 4
        if n <= 62:
            raise GraphParseError(
                f"extended size field used for n={n} <= 62", offset=0
            )
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphParseError(
            f"payload too short: need {nbytes} bytes for n={n}, got {len(data) - pos}",
            offset=len(data),
        )
    if len(data) - pos > nbytes:
        raise GraphParseError(
            f"trailing garbage after {nbytes} payload bytes", offset=pos + nbytes
        )
    edges = []
    bit = 0
    i, j = 0, 1
    for k in range(pos, len(data)):
        group = data[k] - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (group >> shift) & 1:
                    raise GraphParseError(
                        f"nonzero padding bit in final byte at offset {k}", offset=k
                    )
                continue
            if (group >> shift) & 1:
                edges.append((i, j))
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)


def emit_graph6(g):
    """Byte-exact graph6 encoding of g under its current labelling."""
    n = g.n
    if n > _MAX_LONG_N:
        raise GraphParseError(f"n={n} exceeds supported graph6 sizes")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(
            chr(63 + ((n >> shift) & 0x3F)) for shift in (12, 6, 0)
        )
    rows = g.bitrows
    out = []
    group = 0
    nb = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | ((rows[i] >> j) & 1)
            nb += 1
            if nb == 6:
                out.append(chr(63 + group))
                group, nb = 0, 0
    if nb:
        group <<= 6 - nb
        out.append(chr(63 + group))
    return head + "".join(out)


def parse_edgelist(text):
    """Decode the plain edge-list format: "n m" header then m "u v" lines."""
    header = None
    edges = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphParseError(
                    f'line {lineno}: expected header "n m"', line=lineno
                )
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: non-integer header fields", line=lineno
                ) from None
            if n < 1 or m < 0:
                raise GraphParseError(f"line {lineno}: bad header values", line=lineno)
            header = (n, m)
            continue
        if len(parts) != 2:
            raise GraphParseError(f'line {lineno}: expected "u v"', line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(
                f"line {lineno}: non-integer vertex labels", line=lineno
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(
                f"line {lineno}: vertex out of range 0..{n - 1}", line=lineno
            )
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}", line=lineno)
        e = (u, v) if u < v else (v, u)
        if e in set(edges):
            raise GraphParseError(f"line {lineno}: duplicate edge {e}", line=lineno)
        edges.append(e)
    if header is None:
        raise GraphParseError("missing header line", line=1)
    if len(edges) != m:
        raise GraphParseError(
            f"header declares m={m} edges but {len(edges)} were listed",
            line=len(text.splitlines()),
        )
    return Graph(n, edges)


def emit_edgelist(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines)


def detect_format(path):
    """Map a file extension to a format name; graph6 wins for unknown ones."""
    lower = str(path).lower()
    if lower.endswith(".el") or lower.endswith(".edgelist"):
        return "el"
    return "g6"


def parse_auto(text, fmt):
    if fmt == "g6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    if fmt == "el":
        return parse_edgelist(text)
    raise GraphParseError(f"unknown input format {fmt!r}")
