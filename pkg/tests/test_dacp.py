from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from partpat import (
    Dacp,
    DacpError,
    SetPartition,
    contains,
    dacp_contains,
    dacp_from_obj,
    dacp_to_obj,
    from_dacp,
    parse,
    to_dacp,
    validate_dacp,
)

from conftest import partitions_up_to, patterns_of


def relabel(g: Dacp, perm: dict[int, int]) -> Dacp:
    return Dacp(g.n, frozenset((perm[a], perm[b]) for a, b in g.edges))


class TestToDacp:
    def test_one_block_has_no_edges(self):
        assert to_dacp(parse("12345")).edges == frozenset()

    def test_singletons_give_transitive_tournament(self):
        g = to_dacp(parse("1/2/3/4"))
        assert g.edges == frozenset((a, b) for a in range(1, 5) for b in range(1, a))

    def test_paper_partition(self):
        g = to_dacp(parse("134/25"))
        assert sorted(g.edges) == [(2, 1), (3, 2), (4, 2), (5, 1), (5, 3), (5, 4)]

    def test_outputs_always_validate(self):
        for p in partitions_up_to(6):
            validate_dacp(to_dacp(p))

    def test_non_adjacency_is_transitive(self):
        for p in partitions_up_to(6):
            g = to_dacp(p)
            linked = {frozenset(e) for e in g.edges}
            for u, v, w in itertools.permutations(range(1, g.n + 1), 3):
                if (
                    frozenset((u, v)) not in linked
                    and frozenset((v, w)) not in linked
                ):
                    assert frozenset((u, w)) not in linked


class TestFromDacp:
    def test_empty_graph(self):
        assert from_dacp(Dacp(4, frozenset())) == parse("1234")
        assert from_dacp(Dacp(0, frozenset())) == parse("")

    def test_transitive_tournament(self):
        edges = frozenset((a, b) for a in range(1, 5) for b in range(1, a))
        assert from_dacp(Dacp(4, edges)) == parse("1/2/3/4")

    def test_paper_graph_and_relabeled_copy(self):
        edges = {(2, 1), (3, 2), (4, 2), (5, 1), (5, 3), (5, 4)}
        assert from_dacp(Dacp(5, frozenset(edges))) == parse("134/25")
        perm = {1: 3, 2: 5, 3: 1, 4: 2, 5: 4}
        shuffled = frozenset((perm[a], perm[b]) for a, b in edges)
        assert from_dacp(Dacp(5, shuffled)) == parse("134/25")

    def test_roundtrip_small(self):
        for p in partitions_up_to(6):
            assert from_dacp(to_dacp(p)) == p

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_isomorphism_invariance(self, data):
        n = data.draw(st.integers(min_value=1, max_value=7))
        options = list(partitions_up_to(7))
        p = data.draw(st.sampled_from([q for q in options if q.n == n]))
        perm_values = data.draw(st.permutations(list(range(1, n + 1))))
        perm = {i + 1: v for i, v in enumerate(perm_values)}
        assert from_dacp(relabel(to_dacp(p), perm)) == p


class TestValidation:
    def test_two_cycle_is_directed_cycle(self):
        with pytest.raises(DacpError, match="directed cycle"):
            from_dacp(Dacp(2, frozenset({(1, 2), (2, 1)})))

    def test_longer_cycle(self):
        with pytest.raises(DacpError, match="directed cycle"):
            validate_dacp(Dacp(3, frozenset({(1, 2), (2, 3), (3, 1)})))

    def test_complement_not_cliques(self):
        # path complement: 1-2 and 2-3 non-adjacent but 1-3 adjacent
        with pytest.raises(DacpError, match="not a disjoint union of cliques"):
            validate_dacp(Dacp(3, frozenset({(3, 1)})))

    def test_self_loop(self):
        with pytest.raises(DacpError, match="self-loop"):
            validate_dacp(Dacp(2, frozenset({(1, 1)})))

    def test_vertex_out_of_range(self):
        with pytest.raises(DacpError, match="out of range"):
            validate_dacp(Dacp(2, frozenset({(3, 1)})))


class TestDacpContains:
    def test_transported_containment_example(self):
        assert dacp_contains(to_dacp(parse("124/35")), to_dacp(parse("1/23")))

    def test_single_vertex_always_contained(self):
        single = to_dacp(parse("1"))
        for p in partitions_up_to(5):
            if p.n >= 1:
                assert dacp_contains(to_dacp(p), single)

    def test_mirrors_partition_avoidance(self):
        assert not dacp_contains(to_dacp(parse("13/24")), to_dacp(parse("12/34")))

    def test_label_independent(self):
        host = to_dacp(parse("124/35"))
        pattern = to_dacp(parse("1/23"))
        perm = {1: 2, 2: 3, 3: 1}
        assert dacp_contains(host, relabel(pattern, perm))

    def test_equivalence_with_partition_containment(self):
        # moderate sweep; the acceptance suite covers hosts up to n = 7
        pats = [(p, to_dacp(p)) for k in range(1, 4) for p in patterns_of(k)]
        for host in partitions_up_to(5):
            hg = to_dacp(host)
            for p, pg in pats:
                assert dacp_contains(hg, pg) == contains(host, p), (str(host), str(p))


class TestSerialization:
    def test_to_obj_sorted(self):
        obj = dacp_to_obj(to_dacp(parse("134/25")))
        assert obj == {
            "n": 5,
            "edges": [[2, 1], [3, 2], [4, 2], [5, 1], [5, 3], [5, 4]],
        }

    def test_roundtrip(self):
        for p in partitions_up_to(5):
            g = to_dacp(p)
            assert dacp_from_obj(dacp_to_obj(g)) == g

    def test_malformed_objects_rejected(self):
        with pytest.raises(DacpError):
            dacp_from_obj({"edges": []})
        with pytest.raises(DacpError):
            dacp_from_obj({"n": "4", "edges": []})
        with pytest.raises(DacpError):
            dacp_from_obj({"n": 4, "edges": [[1, 2, 3]]})
        with pytest.raises(DacpError):
            dacp_from_obj({"n": 4, "edges": [[1, "2"]]})
