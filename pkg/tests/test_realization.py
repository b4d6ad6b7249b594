import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_force_degree_tuples, brute_force_digraphs
from digraphseq.core import DegreeSequence, Digraph, degree_sequence_of, dominance_leq, positive_lex_sort
from digraphseq.errors import NotDigraphicalError, NotSortedError
from digraphseq.realization import (
    FcVerdict,
    RealizationStep,
    check_fulkerson_chen,
    check_relaxed,
    column_prefix_count,
    realize,
)
from digraphseq.threshold import construct_from_beta

CYCLE4 = DegreeSequence([(1, 1)] * 4)


def seq(*pairs):
    return DegreeSequence(pairs)


@pytest.fixture(scope="module")
def realizable_n3():
    return {brute_force_degree_tuples(g) for g in brute_force_digraphs(3)}


def assert_trace_invariants(s, trace):
    target = s.out_degrees
    history = trace.beta_history
    assert len(history) == trace.t_max + 1 == len(trace.steps) + 1
    assert trace.t_max == sum(abs(a - b) for a, b in zip(target, history[0])) // 2
    for step, before, after in zip(trace.steps, history, history[1:]):
        delta = [y - x for x, y in zip(before, after)]
        expected = [0] * s.n
        expected[step.r1] = -1
        expected[step.r2] = 1
        assert delta == expected
        assert dominance_leq(after, before) and after != before
        assert dominance_leq(target, after)
        l1_before = sum(abs(a - b) for a, b in zip(target, before))
        l1_after = sum(abs(a - b) for a, b in zip(target, after))
        assert l1_after == l1_before - 2
    assert history[-1] == target


class TestColumnPrefixCount:
    def test_example(self):
        g = construct_from_beta((2, 1, 0))
        assert column_prefix_count(g, 0, 3) == 2

    def test_zero_rows(self):
        assert column_prefix_count(Digraph.complete(4), 2, 0) == 0

    def test_complete(self):
        assert column_prefix_count(Digraph.complete(5), 0, 5) == 4

    @pytest.mark.parametrize("i,k", [(-1, 0), (3, 0), (0, 4)])
    def test_out_of_range(self, i, k):
        with pytest.raises(IndexError):
            column_prefix_count(Digraph.empty(3), i, k)


class TestCheckFulkersonChen:
    def test_cycle(self):
        assert check_fulkerson_chen(CYCLE4).digraphical

    def test_failing_k(self, realizable_n3):
        s = seq((2, 0), (1, 2), (0, 1))
        assert s.as_tuples() not in realizable_n3
        assert check_fulkerson_chen(s) == FcVerdict(False, failing_k=2)

    @pytest.mark.parametrize("n", range(5))
    def test_all_zero(self, n):
        assert check_fulkerson_chen(DegreeSequence([(0, 0)] * n)).digraphical

    def test_sum_mismatch(self):
        v = check_fulkerson_chen(seq((1, 0)))
        assert not v.digraphical and v.sum_mismatch and v.degree_out_of_range

    def test_out_of_range_flagged(self):
        v = check_fulkerson_chen(seq((3, 0), (0, 1), (0, 1)))
        assert not v.digraphical and v.degree_out_of_range

    def test_requires_sorted(self):
        with pytest.raises(NotSortedError):
            check_fulkerson_chen(seq((0, 1), (1, 0)))

    def test_matches_brute_force_n3(self, realizable_n3):
        for flat in itertools.product(range(4), repeat=6):
            s = DegreeSequence(zip(flat[::2], flat[1::2]))
            sorted_s, _ = positive_lex_sort(s)
            assert check_fulkerson_chen(sorted_s).digraphical == (s.as_tuples() in realizable_n3)


class TestCheckRelaxed:
    def test_both_orders_fail(self):
        # in-degree 3 is also out of range for n = 3, flagged alongside the failing k
        s = seq((2, 1), (2, 3), (1, 1))
        assert check_relaxed(s) == FcVerdict(False, failing_k=2, degree_out_of_range=True)
        sorted_s, _ = positive_lex_sort(s)
        assert sorted_s.as_tuples() == ((2, 3), (2, 1), (1, 1))
        assert check_fulkerson_chen(sorted_s) == FcVerdict(False, failing_k=2, degree_out_of_range=True)

    def test_realizable_unsorted(self):
        s = seq((1, 0), (1, 2), (1, 1))
        assert check_relaxed(s).digraphical
        witness = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 1)])
        assert degree_sequence_of(witness) == s

    def test_all_zero(self):
        assert check_relaxed(DegreeSequence([(0, 0)] * 3)).digraphical

    def test_requires_nonincreasing_out(self):
        with pytest.raises(NotSortedError):
            check_relaxed(seq((0, 1), (1, 0)))

    def test_first_inequality_is_needed(self):
        # the k = 1 inequality alone rules this out
        s = seq((1, 1), (0, 0))
        assert check_relaxed(s) == FcVerdict(False, failing_k=1)


class TestRealize:
    def test_threshold_fixed_point(self):
        g, trace = realize(seq((1, 2), (1, 1), (1, 0)))
        assert trace.t_max == 0 and trace.steps == []
        assert g == construct_from_beta((2, 1, 0))

    def test_hand_traced_cycle(self):
        g, trace = realize(CYCLE4, keep_history=True)
        assert trace.t_max == 2
        assert trace.steps == [RealizationStep(0, 3, 1), RealizationStep(0, 2, 3)]
        assert trace.to_dict()["steps"] == [
            {"r1": 1, "r2": 4, "column": 2},
            {"r1": 1, "r2": 3, "column": 4},
        ]
        assert trace.beta_history[0] == (3, 1, 0, 0)
        assert g.arcs() == [(0, 2), (1, 0), (2, 3), (3, 1)]
        assert degree_sequence_of(g) == CYCLE4

    def test_rejects_non_digraphical(self):
        with pytest.raises(NotDigraphicalError) as info:
            realize(seq((2, 0), (1, 2), (0, 1)))
        assert info.value.verdict.failing_k == 2

    def test_requires_sorted(self):
        with pytest.raises(NotSortedError):
            realize(seq((0, 1), (1, 0)))

    def test_empty(self):
        g, trace = realize(DegreeSequence([]))
        assert g.n == 0 and trace.t_max == 0

    @settings(max_examples=200)
    @given(st.data())
    def test_realizes_degree_sequences_of_random_digraphs(self, data):
        n = data.draw(st.integers(1, 12))
        arcs = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
        g = Digraph.from_arcs(n, [(u, v) for u, v in arcs if u != v])
        s, _ = positive_lex_sort(degree_sequence_of(g))
        h, trace = realize(s, keep_history=True)
        assert degree_sequence_of(h) == s
        assert_trace_invariants(s, trace)


def unbatched_steps(s):
    """Reference loop: recompute r1, r2 and the column from scratch every step."""
    m = construct_from_beta(s.in_degrees).to_matrix()
    target = list(s.out_degrees)
    steps = []
    while True:
        beta = [sum(row) for row in m]
        if beta == target:
            return steps, m
        r1 = min(i for i in range(s.n) if target[i] < beta[i])
        r2 = next(
            j for j in range(r1 + 1, s.n) if sum(target[: j + 1]) == sum(beta[: j + 1])
        )
        c = min(c for c in range(s.n) if m[r1][c] == 1 and m[r2][c] == 0 and c != r2)
        m[r1][c], m[r2][c] = 0, 1
        steps.append(RealizationStep(r1, r2, c))


@settings(max_examples=200)
@given(st.data())
def test_batched_realizer_matches_step_by_step_reference(data):
    n = data.draw(st.integers(1, 10))
    arcs = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    g = Digraph.from_arcs(n, [(u, v) for u, v in arcs if u != v])
    s, _ = positive_lex_sort(degree_sequence_of(g))
    h, trace = realize(s)
    steps, matrix = unbatched_steps(s)
    assert trace.steps == steps
    assert h.to_matrix() == matrix
