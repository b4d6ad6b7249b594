"""Digraphicality testing and the column-move realizer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from digraphseq.core import DegreeSequence, Digraph
from digraphseq.errors import NotDigraphicalError, NotSortedError
from digraphseq.threshold import construct_from_beta, fulkerson_chen_lhs


@dataclass(frozen=True)
class FcVerdict:
    """Outcome of the Fulkerson-Chen test.

    ``failing_k`` is the least ``k`` in ``1..n-1`` whose inequality fails.
    ``degree_out_of_range`` flags a degree of ``n`` or more.
    """

    digraphical: bool
    failing_k: int | None = None
    sum_mismatch: bool = False
    degree_out_of_range: bool = False

    def to_dict(self) -> dict:
        return {
            "digraphical": self.digraphical,
            "failing_k": self.failing_k,
            "sum_mismatch": self.sum_mismatch,
            "degree_out_of_range": self.degree_out_of_range,
        }


class RealizationStep(NamedTuple):
    """One column move: the one at ``(r1, column)`` goes to ``(r2, column)``."""

    r1: int
    r2: int
    column: int


@dataclass
class RealizationTrace:
    t_max: int
    steps: list[RealizationStep] = field(default_factory=list)
    beta_history: list[tuple[int, ...]] | None = None

    def to_dict(self) -> dict:
        data: dict = {
            "t_max": self.t_max,
            "steps": [{"r1": s.r1 + 1, "r2": s.r2 + 1, "column": s.column + 1} for s in self.steps],
        }
        if self.beta_history is not None:
            data["beta_history"] = [list(b) for b in self.beta_history]
        return data


def column_prefix_count(g: Digraph, i: int, k: int) -> int:
    """Number of ones among the first ``k`` rows of column ``i``."""
    if not 0 <= i < g.n:
        raise IndexError(f"column {i} out of range for n={g.n}")
    if not 0 <= k <= g.n:
        raise IndexError(f"row bound {k} out of range for n={g.n}")
    return (g.columns[i] & ((1 << k) - 1)).bit_count()


def _evaluate(s: DegreeSequence) -> FcVerdict:
    n = s.n
    outs, ins = s.out_degrees, s.in_degrees
    out_of_range = not s.in_range()
    mismatch = sum(outs) != sum(ins)
    failing_k = None
    prefix = 0
    for k, lhs in enumerate(fulkerson_chen_lhs(ins)[: n - 1], start=1):
        prefix += outs[k - 1]
        if lhs < prefix:
            failing_k = k
            break
    ok = not (out_of_range or mismatch) and failing_k is None
    return FcVerdict(ok, failing_k, mismatch, out_of_range)


def check_fulkerson_chen(s: DegreeSequence) -> FcVerdict:
    """Decide whether a positive-lex sorted sequence is digraphical.

    Raises:
        NotSortedError: if ``s`` is not in positive lexicographic order.
    """
    if not s.is_positive_lex():
        raise NotSortedError("sequence must be in positive lexicographic order")
    return _evaluate(s)


def check_relaxed(s: DegreeSequence) -> FcVerdict:
    """Same inequalities, requiring only nonincreasing out-degrees.

    Raises:
        NotSortedError: if the out-degrees increase anywhere.
    """
    if not s.out_nonincreasing():
        raise NotSortedError("out-degrees must be nonincreasing")
    return _evaluate(s)


def realize(s: DegreeSequence, keep_history: bool = False) -> tuple[Digraph, RealizationTrace]:
    """Build a realization of a sorted digraphical sequence.

    Starts from the threshold digraph with column sums ``s.in_degrees`` and
    moves ones down their columns until the row sums match the out-degrees.
    Each move takes the smallest row ``r1`` with too many ones, the first row
    ``r2`` after it where prefix sums of actual and target row sums agree, and
    the smallest column with a one in ``r1`` and a zero in ``r2`` (other than
    ``r2`` itself).

    Raises:
        NotSortedError: if ``s`` is not positive-lex sorted.
        NotDigraphicalError: if ``s`` has no realization.
    """
    verdict = check_fulkerson_chen(s)
    if not verdict.digraphical:
        raise NotDigraphicalError(verdict)
    n = s.n
    target = s.out_degrees
    start = construct_from_beta(s.in_degrees)
    rows = list(start.rows)
    beta = [r.bit_count() for r in rows]
    t_max = sum(abs(a - b) for a, b in zip(target, beta)) // 2
    trace = RealizationTrace(t_max, [], [tuple(beta)] if keep_history else None)

    # excess[k]: prefix sum of (beta - target) through k; nonnegative throughout
    excess = []
    acc = 0
    for b, a in zip(beta, target):
        acc += b - a
        excess.append(acc)

    steps = trace.steps
    r1 = 0
    while True:
        while r1 < n and excess[r1] == 0:
            r1 += 1
        if r1 == n:
            break
        r2 = r1 + 1
        while excess[r2]:
            r2 += 1
        # the same (r1, r2) pair is selected until some excess in between hits zero
        repeats = min(excess[r1:r2])
        upper, lower, diag = rows[r1], rows[r2], 1 << r2
        for _ in range(repeats):
            movable = upper & ~lower & ~diag
            if not movable:
                raise AssertionError(f"no movable column between rows {r1} and {r2}")
            bit = movable & -movable
            upper ^= bit
            lower |= bit
            steps.append(RealizationStep(r1, r2, bit.bit_length() - 1))
            if keep_history:
                beta[r1] -= 1
                beta[r2] += 1
                trace.beta_history.append(tuple(beta))
        rows[r1], rows[r2] = upper, lower
        for k in range(r1, r2):
            excess[k] -= repeats

    if len(trace.steps) != t_max:
        raise AssertionError(f"realizer took {len(trace.steps)} steps, expected {t_max}")
    return Digraph(n, tuple(rows)), trace
