"""Value types for degree sequences and labeled digraphs.

A :class:`Digraph` stores its adjacency matrix row-major as a tuple of Python
ints, bit ``j`` of ``rows[i]`` being the entry ``a_ij``. All indices in the
library are 0-based; 1-based numbering is applied only when rendering output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from digraphseq.errors import SizeLimitError

MAX_VERTICES = 50_000


def set_max_vertices(limit: int) -> None:
    """Change the vertex-count guard applied when building sequences and digraphs."""
    global MAX_VERTICES
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    MAX_VERTICES = limit


def _check_size(n: int) -> None:
    if n > MAX_VERTICES:
        raise SizeLimitError(f"n={n} exceeds the vertex limit {MAX_VERTICES}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


_DENSE_TRANSPOSE_MIN = 48


def _transpose_dense(rows: Sequence[int], n: int) -> tuple[int, ...]:
    width = (n + 7) // 8
    packed = np.frombuffer(b"".join(r.to_bytes(width, "little") for r in rows), dtype=np.uint8)
    bits = np.unpackbits(packed.reshape(n, width), axis=1, count=n, bitorder="little")
    cols = np.packbits(bits.T, axis=1, bitorder="little")
    return tuple(int.from_bytes(c.tobytes(), "little") for c in cols)


class DegreePair(NamedTuple):
    out_deg: int
    in_deg: int


@dataclass(frozen=True)
class DegreeSequence:
    """Ordered list of (out, in) degree pairs."""

    pairs: tuple[DegreePair, ...]

    def __init__(self, pairs: Iterable[Sequence[int]] = ()):
        converted = []
        for pair in pairs:
            out_deg, in_deg = pair
            if not (isinstance(out_deg, int) and isinstance(in_deg, int)):
                raise TypeError(f"degrees must be integers, got {pair!r}")
            if out_deg < 0 or in_deg < 0:
                raise ValueError(f"degrees must be nonnegative, got {pair!r}")
            converted.append(DegreePair(int(out_deg), int(in_deg)))
        _check_size(len(converted))
        object.__setattr__(self, "pairs", tuple(converted))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[DegreePair]:
        return iter(self.pairs)

    def __getitem__(self, i: int) -> DegreePair:
        return self.pairs[i]

    def __repr__(self) -> str:
        return f"DegreeSequence({[tuple(p) for p in self.pairs]})"

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def out_degrees(self) -> tuple[int, ...]:
        return tuple(p.out_deg for p in self.pairs)

    @property
    def in_degrees(self) -> tuple[int, ...]:
        return tuple(p.in_deg for p in self.pairs)

    def as_tuples(self) -> tuple[tuple[int, int], ...]:
        return tuple((p.out_deg, p.in_deg) for p in self.pairs)

    def in_range(self) -> bool:
        """True when every degree is at most ``n - 1``."""
        top = self.n - 1
        return all(p.out_deg <= top and p.in_deg <= top for p in self.pairs)

    def is_positive_lex(self) -> bool:
        return all(a >= b for a, b in zip(self.pairs, self.pairs[1:]))

    def out_nonincreasing(self) -> bool:
        outs = self.out_degrees
        return all(a >= b for a, b in zip(outs, outs[1:]))

    def permuted(self, p: VertexPermutation) -> DegreeSequence:
        """Move the pair at position ``i`` to position ``p[i]``."""
        if len(p) != self.n:
            raise ValueError(f"permutation of size {len(p)} applied to sequence of length {self.n}")
        out: list[DegreePair | None] = [None] * self.n
        for i, pair in enumerate(self.pairs):
            out[p[i]] = pair
        return DegreeSequence(out)  # type: ignore[arg-type]


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection on vertex positions: vertex ``i`` moves to ``targets[i]``."""

    targets: tuple[int, ...]

    def __init__(self, targets: Iterable[int]):
        targets = tuple(int(t) for t in targets)
        if sorted(targets) != list(range(len(targets))):
            raise ValueError(f"not a permutation: {targets!r}")
        object.__setattr__(self, "targets", targets)

    @classmethod
    def identity(cls, n: int) -> VertexPermutation:
        return cls(range(n))

    def __len__(self) -> int:
        return len(self.targets)

    def __getitem__(self, i: int) -> int:
        return self.targets[i]

    def inverse(self) -> VertexPermutation:
        inv = [0] * len(self.targets)
        for i, t in enumerate(self.targets):
            inv[t] = i
        return VertexPermutation(inv)

    def is_identity(self) -> bool:
        return all(i == t for i, t in enumerate(self.targets))


@dataclass(frozen=True)
class Digraph:
    """Labeled simple digraph on vertices ``0..n-1``.

    ``rows[i]`` is the out-neighbourhood of ``i`` as a bitmask. The diagonal is
    always zero and no bit at position ``>= n`` may be set.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_size(self.n)
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {i} has entries outside the {self.n} columns")
            if row >> i & 1:
                raise ValueError(f"nonzero diagonal entry at ({i}, {i})")

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Digraph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Digraph:
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise ValueError(f"row {i} has length {len(line)}, expected {n}")
            mask = 0
            for j, entry in enumerate(line):
                if entry not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is {entry!r}, expected 0 or 1")
                if entry:
                    mask |= 1 << j
            rows.append(mask)
        return cls(n, tuple(rows))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """In-neighbourhoods as bitmasks (the transpose)."""
        if self.n > _DENSE_TRANSPOSE_MIN:
            return _transpose_dense(self.rows, self.n)
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            bit = 1 << i
            for j in iter_bits(row):
                cols[j] |= bit
        return tuple(cols)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in lexicographic order."""
        return [(i, j) for i, row in enumerate(self.rows) for j in iter_bits(row)]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def is_complete(self) -> bool:
        return self.arc_count() == self.n * (self.n - 1)

    def to_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.rows]

    def with_arc(self, u: int, v: int) -> Digraph:
        rows = list(self.rows)
        rows[u] |= 1 << v
        return Digraph(self.n, tuple(rows))

    def without_arc(self, u: int, v: int) -> Digraph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        return Digraph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def degree_sequence_of(g: Digraph) -> DegreeSequence:
    """(row sum, column sum) of every vertex, in the digraph's vertex order."""
    return DegreeSequence(
        (row.bit_count(), col.bit_count()) for row, col in zip(g.rows, g.columns)
    )


def positive_lex_sort(s: DegreeSequence) -> tuple[DegreeSequence, VertexPermutation]:
    """Stable sort into positive lexicographic order.

    Pairs are ordered by nonincreasing out-degree, ties by nonincreasing
    in-degree; fully tied pairs keep their relative order. The returned
    permutation sends each original position to its sorted position.
    """
    order = sorted(range(s.n), key=lambda i: (-s[i].out_deg, -s[i].in_deg))
    targets = [0] * s.n
    for pos, i in enumerate(order):
        targets[i] = pos
    return DegreeSequence(s[i] for i in order), VertexPermutation(targets)


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Prefix-sum dominance: ``a`` is below ``b``.

    Every proper prefix sum of ``a`` is at most the corresponding one of ``b``
    and the totals agree.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return sa == sb


def apply_permutation(g: Digraph, p: VertexPermutation) -> Digraph:
    """Relabel vertex ``i`` as ``p[i]``."""
    if len(p) != g.n:
        raise ValueError(f"permutation of size {len(p)} applied to digraph on {g.n} vertices")
    rows = [0] * g.n
    for i, row in enumerate(g.rows):
        mask = 0
        for j in iter_bits(row):
            mask |= 1 << p[j]
        rows[p[i]] = mask
    return Digraph(g.n, tuple(rows))
