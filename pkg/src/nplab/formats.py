"""graph6 text codec and DOT export.

The graph6 encoding is bit-exact per the published format: every byte is
offset by 63, the order is a 1-, 4- or 8-byte prefix, and the data bytes
pack the upper triangle column by column — pair order (0,1), (0,2), (1,2),
(0,3), ... — six bits per byte, most significant bit first, zero padded.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 string", 0)
    data = line.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {chr(b)!r} outside graph6 range", off)

    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated 18-bit order field", len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit order field", len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    if n < 1:
        raise Graph6Error(f"unsupported graph order {n}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for order {n}, got {len(data) - pos}",
            pos,
        )
    masks = [0] * n
    bit = 0
    for col in range(1, n):
        for row in range(col):
            if (data[pos + bit // 6] - 63) >> (5 - bit % 6) & 1:
                masks[row] |= 1 << col
                masks[col] |= 1 << row
            bit += 1
    for pad in range(nbits, nbytes * 6):
        if (data[pos + pad // 6] - 63) >> (5 - pad % 6) & 1:
            raise Graph6Error("nonzero padding bits", pos + pad // 6)
    m = sum(mask.bit_count() for mask in masks) // 2
    return Graph(n, tuple(masks), m)


def write_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.extend([(n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        out.extend([126, 126])
        out.extend([(n >> s & 63) + 63 for s in range(30, -1, -6)])
    chunk = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            chunk = chunk << 1 | (g.adj[row] >> col & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk = 0
                filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    text = out.decode("ascii")
    return HEADER + text if header else text


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield (line_number, raw_line, graph) for non-blank lines; 0-based."""
    for i, raw in enumerate(lines):
        line = raw.strip()
        if not line:
            continue
        yield i, line, parse_graph6(line)


def export_dot(g: Graph, labeling=None) -> str:
    """Undirected DOT document; node text is the label when provided."""
    if labeling is not None and len(labeling) != g.n:
        raise ValueError(
            f"labeling of size {len(labeling)} does not fit order {g.n}"
        )
    lines = ["graph G {"]
    for v in range(g.n):
        text = labeling.of(v) if labeling is not None else v
        lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
