"""Plain-text and DOT formats for sequences and digraphs.

Sequence format: one vertex per line, ``out in``. Digraph format: a line with
``n`` followed by ``n`` rows of ``n`` 0/1 entries. In both, blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from typing import Iterator

from digraphseq.core import DegreeSequence, Digraph
from digraphseq.errors import ParseError


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _nonneg_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"expected a nonnegative integer, got {value}", lineno)
    return value


def parse_sequence(text: str) -> DegreeSequence:
    pairs = []
    for lineno, fields in _content_lines(text):
        if len(fields) != 2:
            raise ParseError(f"expected 2 fields 'out in', got {len(fields)}", lineno)
        pairs.append((_nonneg_int(fields[0], lineno), _nonneg_int(fields[1], lineno)))
    return DegreeSequence(pairs)


def format_sequence(s: DegreeSequence) -> str:
    return "".join(f"{p.out_deg} {p.in_deg}\n" for p in s)


def parse_beta(text: str) -> list[int]:
    """Whitespace-separated integers, on one line or several."""
    return [_nonneg_int(tok, lineno) for lineno, fields in _content_lines(text) for tok in fields]


def parse_digraph(text: str) -> Digraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input, expected vertex count")
    lineno, fields = lines[0]
    if len(fields) != 1:
        raise ParseError("first line must hold the vertex count only", lineno)
    n = _nonneg_int(fields[0], lineno)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} matrix rows, got {len(lines) - 1}", lines[-1][0])
    matrix = []
    for i, (lineno, fields) in enumerate(lines[1:]):
        if len(fields) != n:
            raise ParseError(f"expected {n} entries, got {len(fields)}", lineno)
        row = []
        for tok in fields:
            if tok not in ("0", "1"):
                raise ParseError(f"matrix entries must be 0 or 1, got {tok!r}", lineno)
            row.append(int(tok))
        if row[i]:
            raise ParseError(f"self-loop at vertex {i + 1}", lineno)
        matrix.append(row)
    return Digraph.from_matrix(matrix)


def format_digraph(g: Digraph) -> str:
    lines = [str(g.n)]
    lines.extend(" ".join(map(str, row)) for row in g.to_matrix())
    return "\n".join(lines) + "\n"


def to_dot(g: Digraph, name: str = "G") -> str:
    """DOT source with vertices named ``v1..vn``."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  v{i + 1};" for i in range(g.n))
    lines.extend(f"  v{u + 1} -> v{v + 1};" for u, v in g.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dict(g: Digraph) -> dict:
    return {
        "n": g.n,
        "arcs": [[u + 1, v + 1] for u, v in g.arcs()],
        "matrix": g.to_matrix(),
    }


def sequence_to_list(s: DegreeSequence) -> list[list[int]]:
    return [[p.out_deg, p.in_deg] for p in s]
