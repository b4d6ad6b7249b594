"""Threshold digraphs: recognition, construction and arc monotonicity.

A digraph is threshold when it is the unique labeled realization of its
degree sequence. The checks here are the equivalent forms of that property:
no forbidden configuration, the column-prefix adjacency condition under
positive lexicographic order, and equality in every Fulkerson-Chen sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from digraphseq.core import (
    DegreeSequence,
    Digraph,
    apply_permutation,
    degree_sequence_of,
    iter_bits,
    lowest_bit,
    positive_lex_sort,
)
from digraphseq.errors import (
    CompleteDigraphError,
    NoArcError,
    NotSortedError,
    NotThresholdError,
)


class ConfigKind(enum.Enum):
    TWO_SWITCH = "two_switch"
    INDUCED_THREE_CYCLE = "induced_three_cycle"


@dataclass(frozen=True)
class ForbiddenConfig:
    """A 2-switch ``(w, x, y, z)`` or an induced directed 3-cycle ``(x, y, z)``.

    For a 2-switch, arcs ``w->x`` and ``y->z`` are present and ``w->z``,
    ``y->x`` absent. For a 3-cycle, ``x->y->z->x`` are the only arcs among the
    three vertices.
    """

    kind: ConfigKind
    vertices: tuple[int, ...]

    def holds_in(self, g: Digraph) -> bool:
        """Re-check the defining arc pattern against ``g``."""
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if self.kind is ConfigKind.TWO_SWITCH:
            w, x, y, z = vs
            return (
                g.has_arc(w, x) and g.has_arc(y, z)
                and not g.has_arc(w, z) and not g.has_arc(y, x)
            )
        x, y, z = vs
        return (
            g.has_arc(x, y) and g.has_arc(y, z) and g.has_arc(z, x)
            and not g.has_arc(y, x) and not g.has_arc(z, y) and not g.has_arc(x, z)
        )

    def switched(self, g: Digraph) -> Digraph:
        """The other realization obtained by swapping present and absent arcs."""
        if self.kind is ConfigKind.TWO_SWITCH:
            w, x, y, z = self.vertices
            swap_out = [(w, x), (y, z)]
            swap_in = [(w, z), (y, x)]
        else:
            x, y, z = self.vertices
            swap_out = [(x, y), (y, z), (z, x)]
            swap_in = [(y, x), (z, y), (x, z)]
        for u, v in swap_out:
            g = g.without_arc(u, v)
        for u, v in swap_in:
            g = g.with_arc(u, v)
        return g

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": [v + 1 for v in self.vertices]}

    def __str__(self) -> str:
        name = "TwoSwitch" if self.kind is ConfigKind.TWO_SWITCH else "InducedThreeCycle"
        return f"{name}({', '.join(str(v + 1) for v in self.vertices)})"


def find_forbidden_configuration(g: Digraph) -> ForbiddenConfig | None:
    """First forbidden configuration in lexicographic order, or ``None``.

    All 2-switches are searched before any 3-cycle.
    """
    n, rows = g.n, g.rows
    for w in range(n):
        for x in iter_bits(rows[w]):
            for y in range(n):
                if y == w or y == x or rows[y] >> x & 1:
                    continue
                zs = rows[y] & ~rows[w] & ~(1 << w | 1 << x)
                if zs:
                    return ForbiddenConfig(ConfigKind.TWO_SWITCH, (w, x, y, lowest_bit(zs)))
    for x in range(n):
        for y in iter_bits(rows[x]):
            if y == x or rows[y] >> x & 1:
                continue
            # z closes the cycle: y->z, z->x, and none of the reverse arcs
            zs = rows[y] & g.columns[x] & ~rows[x] & ~g.columns[y]
            zs &= ~(1 << x | 1 << y)
            if zs:
                return ForbiddenConfig(ConfigKind.INDUCED_THREE_CYCLE, (x, y, lowest_bit(zs)))
    return None


def _is_prefix_skipping(column: int, k: int) -> bool:
    # drop the diagonal bit k, then the set bits must be exactly 0..m-1
    low = column & ((1 << k) - 1)
    squeezed = low | (column >> (k + 1)) << k
    return squeezed & (squeezed + 1) == 0


def check_adjacency_condition(g: Digraph) -> bool:
    """For distinct ``i < j`` and ``k``, ``a_jk = 1`` implies ``a_ik = 1``.

    Evaluated in the given vertex order: each column's ones must fill a prefix
    of the rows once the diagonal entry is skipped.
    """
    return all(_is_prefix_skipping(col, k) for k, col in enumerate(g.columns))


def fulkerson_chen_lhs_naive(in_degrees: Sequence[int]) -> list[int]:
    """Left-hand sides for ``k = 1..n`` by the direct double sum."""
    n = len(in_degrees)
    return [
        sum(min(d, k - 1) for d in in_degrees[:k]) + sum(min(d, k) for d in in_degrees[k:])
        for k in range(1, n + 1)
    ]


def fulkerson_chen_lhs(in_degrees: Sequence[int]) -> list[int]:
    """Left-hand sides for ``k = 1..n`` in linear time.

    Uses ``lhs(k) = sum_i min(d_i, k) - #{i <= k : d_i >= k}`` where the first
    term grows by ``#{i : d_i >= k}`` per step and the second is a sum of
    interval indicators ``[i, d_i]``.
    """
    n = len(in_degrees)
    at_least = [0] * (n + 2)
    window = [0] * (n + 2)
    for i, d in enumerate(in_degrees, start=1):
        d = min(d, n)
        at_least[d] += 1
        if d >= i:
            window[i] += 1
            window[d + 1] -= 1
    for v in range(n - 1, -1, -1):
        at_least[v] += at_least[v + 1]
    lhs = []
    total = running = 0
    for k in range(1, n + 1):
        total += at_least[k]
        running += window[k]
        lhs.append(total - running)
    return lhs


def check_fulkerson_chen_equality(s: DegreeSequence) -> bool:
    """Every Fulkerson-Chen sum, ``k = 1..n``, holds with equality.

    Raises:
        NotSortedError: if ``s`` is not in positive lexicographic order.
    """
    if not s.is_positive_lex():
        raise NotSortedError("sequence must be in positive lexicographic order")
    prefix = 0
    for lhs, out_deg in zip(fulkerson_chen_lhs(s.in_degrees), s.out_degrees):
        prefix += out_deg
        if lhs != prefix:
            return False
    return True


def canonicalize(g: Digraph) -> Digraph:
    """Relabel ``g`` so its degree sequence is stably positive-lex sorted."""
    _, perm = positive_lex_sort(degree_sequence_of(g))
    return g if perm.is_identity() else apply_permutation(g, perm)


def is_threshold(g: Digraph) -> bool:
    return check_adjacency_condition(canonicalize(g))


def construct_from_beta(beta: Sequence[int]) -> Digraph:
    """Threshold digraph whose column ``j`` holds ``beta[j]`` ones.

    Column ``j`` gets its ones in the first ``beta[j]`` rows other than ``j``.
    In 1-based terms ``a_ij = 1`` iff ``i < j`` and ``i <= beta_j``, or
    ``i > j`` and ``i <= beta_j + 1``.
    """
    n = len(beta)
    # reach[j]: column j fills rows 0..reach[j]-1, minus the diagonal
    reach = [0] * n
    for j, b in enumerate(beta):
        if not isinstance(b, int) or not 0 <= b <= n - 1:
            raise ValueError(f"beta[{j + 1}] = {b!r} outside [0, {n - 1}]")
        reach[j] = b if b <= j else b + 1
    ending = [0] * (n + 1)
    for j, r in enumerate(reach):
        ending[r] |= 1 << j
    rows = [0] * n
    mask = 0
    for i in range(n - 1, -1, -1):
        mask |= ending[i + 1]
        rows[i] = mask & ~(1 << i)
    return Digraph(n, tuple(rows))


def _require_threshold(g: Digraph) -> None:
    if not is_threshold(g):
        raise NotThresholdError("digraph is not threshold")


def shrink_arc(g: Digraph) -> tuple[tuple[int, int], Digraph]:
    """First arc (lexicographic) whose removal leaves a threshold digraph."""
    _require_threshold(g)
    for u, v in g.arcs():
        smaller = g.without_arc(u, v)
        if is_threshold(smaller):
            return (u, v), smaller
    if g.arc_count() == 0:
        raise NoArcError("digraph has no arcs")
    raise AssertionError(f"no removable arc found in threshold digraph {g!r}")


def grow_arc(g: Digraph) -> tuple[tuple[int, int], Digraph]:
    """First non-arc (lexicographic) whose addition keeps the digraph threshold."""
    _require_threshold(g)
    for u in range(g.n):
        for v in range(g.n):
            if u == v or g.has_arc(u, v):
                continue
            larger = g.with_arc(u, v)
            if is_threshold(larger):
                return (u, v), larger
    if g.is_complete():
        raise CompleteDigraphError("digraph is complete")
    raise AssertionError(f"no addable arc found in threshold digraph {g!r}")
