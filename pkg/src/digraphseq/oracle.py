"""Exhaustive ground truth for small vertex counts.

Everything here works by brute force over all labeled digraphs (or all
beta-sequences) and is meant to cross-check the fast decision procedures.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

import numpy as np

from digraphseq.core import DegreeSequence, Digraph, degree_sequence_of, positive_lex_sort
from digraphseq.errors import SizeLimitError
from digraphseq.threshold import (
    canonicalize,
    check_adjacency_condition,
    check_fulkerson_chen_equality,
    construct_from_beta,
    find_forbidden_configuration,
)

log = logging.getLogger(__name__)

ENUMERATION_LIMIT = 5
EQUIVALENCE_LIMIT = 4


def _guard(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise SizeLimitError(f"n={n} exceeds the exhaustive limit {limit}")


def _off_diagonal(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def enumerate_digraphs(n: int) -> Iterator[Digraph]:
    """Every labeled digraph on ``n`` vertices.

    Bit ``b`` of the pattern is the ``b``-th off-diagonal entry in row-major
    order; patterns are produced in increasing order.
    """
    _guard(n, ENUMERATION_LIMIT)
    if n == 0:
        yield Digraph.empty(0)
        return
    width = n - 1
    row_mask = (1 << width) - 1
    for pattern in range(1 << (n * width)):
        rows = []
        for i in range(n):
            chunk = pattern >> (i * width) & row_mask
            # re-insert the zero diagonal at column i
            rows.append((chunk & ((1 << i) - 1)) | (chunk >> i) << (i + 1))
        yield Digraph(n, tuple(rows))


def _encode(pairs, n: int) -> int:
    key = 0
    for out_deg, in_deg in reversed(pairs):
        key = key * n * n + out_deg * n + in_deg
    return key


@lru_cache(maxsize=None)
def _realization_table(n: int) -> dict[int, int]:
    """Map encoded degree sequence -> number of labeled realizations."""
    if n == 0:
        return {0: 1}
    positions = _off_diagonal(n)
    patterns = np.arange(1 << len(positions), dtype=np.uint32)
    out_masks = np.zeros(n, dtype=np.uint32)
    in_masks = np.zeros(n, dtype=np.uint32)
    for b, (i, j) in enumerate(positions):
        out_masks[i] |= np.uint32(1 << b)
        in_masks[j] |= np.uint32(1 << b)
    keys = np.zeros(patterns.shape, dtype=np.int64)
    scale = 1
    for v in range(n):
        outs = np.bitwise_count(patterns & out_masks[v]).astype(np.int64)
        ins = np.bitwise_count(patterns & in_masks[v]).astype(np.int64)
        keys += (outs * n + ins) * scale
        scale *= n * n
    values, counts = np.unique(keys, return_counts=True)
    return dict(zip(values.tolist(), counts.tolist()))


def count_realizations(s: DegreeSequence) -> int:
    """Number of labeled digraphs with exactly degree sequence ``s``."""
    _guard(s.n, ENUMERATION_LIMIT)
    if not s.in_range():
        return 0
    return _realization_table(s.n).get(_encode(s.as_tuples(), s.n), 0)


def unique_realization(s: DegreeSequence) -> bool:
    return count_realizations(s) == 1


def _all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def canonical_code(g: Digraph, perms: np.ndarray | None = None) -> int:
    """Smallest packed adjacency matrix over all relabelings of ``g``."""
    n = g.n
    if n == 0:
        return 0
    if perms is None:
        perms = _all_permutations(n)
    matrix = np.array(g.to_matrix(), dtype=np.int64)
    # relabeled[p, a, b] = matrix[perm_p[a], perm_p[b]]
    relabeled = matrix[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
    weights = 1 << np.arange(n * n - 1, -1, -1, dtype=np.int64)
    return int((relabeled * weights).sum(axis=1).min())


@dataclass(frozen=True)
class CensusReport:
    n: int
    labeled_count: int
    class_count: int
    lower_bound: Fraction
    upper_bound: int

    @property
    def bounds_ok(self) -> bool:
        return (
            self.lower_bound <= self.class_count <= self.labeled_count <= self.upper_bound
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "labeled_count": self.labeled_count,
            "class_count": self.class_count,
            "lower_bound": str(self.lower_bound),
            "upper_bound": self.upper_bound,
            "bounds_ok": self.bounds_ok,
        }


def census_threshold(n: int) -> CensusReport:
    """Count threshold digraphs built from every beta in ``[0, n-1]^n``.

    Labeled digraphs are deduplicated by matrix, isomorphism classes by the
    minimum packed matrix over all ``n!`` relabelings.
    """
    _guard(n, ENUMERATION_LIMIT)
    perms = _all_permutations(n)
    labeled = set()
    classes = set()
    for beta in itertools.product(range(n), repeat=n):
        g = construct_from_beta(beta)
        labeled.add(g.rows)
        classes.add(canonical_code(g, perms))
    return CensusReport(
        n=n,
        labeled_count=len(labeled),
        class_count=len(classes),
        lower_bound=Fraction(n**n, factorial(n)),
        upper_bound=n**n,
    )


@dataclass(frozen=True)
class Disagreement:
    digraph: Digraph
    unique: bool
    no_forbidden: bool
    adjacency: bool
    fc_equality: bool


def equivalence_disagreements(n: int) -> Iterator[Disagreement]:
    """Digraphs on which the four threshold predicates do not all agree."""
    _guard(n, EQUIVALENCE_LIMIT)
    for g in enumerate_digraphs(n):
        seq, _ = positive_lex_sort(degree_sequence_of(g))
        verdicts = (
            unique_realization(seq),
            find_forbidden_configuration(g) is None,
            check_adjacency_condition(canonicalize(g)),
            check_fulkerson_chen_equality(seq),
        )
        if len(set(verdicts)) > 1:
            yield Disagreement(g, *verdicts)


def verify_equivalence(n: int) -> bool:
    """True iff all four threshold predicates agree on every digraph on ``n`` vertices."""
    ok = True
    for bad in equivalence_disagreements(n):
        log.error("threshold predicates disagree: %s", bad)
        ok = False
    return ok
