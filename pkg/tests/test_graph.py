import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uccakit.errors import (
    CycleDetected,
    DuplicateEdge,
    DuplicatePrimaryParent,
    GraphError,
    SealedPassage,
    StructuralViolation,
    TerminalAsParent,
    UnknownNode,
)
from uccakit.graph import Edge, NodeId, NodeKind, Passage, build_passage

from .helpers import random_passage

passages = st.integers(0, 2**32 - 1).map(
    lambda seed: random_passage(random.Random(seed))
)


class TestBuildPassage:
    def test_fresh_passage(self):
        p = build_passage(
            "p1", ["After", "graduation", ",", "John", "moved", "to", "Paris"]
        )
        assert len(p.terminals) == 7
        assert len(p.non_terminals) == 1
        assert not p.edges
        assert [t.position for t in p.terminals] == list(range(1, 8))

    def test_single_token(self):
        p = build_passage("p0", ["x"])
        assert len(p.terminals) == 1
        assert p.root == NodeId(1, 1)

    def test_empty_tokens_rejected(self):
        with pytest.raises(GraphError):
            build_passage("p-empty", [])


class TestAddNode:
    def test_sequential_allocation(self):
        p = build_passage("p", ["x"])
        assert p.add_node(NodeKind.NON_TERMINAL) == NodeId(1, 2)

    def test_implicit_has_no_text(self):
        p = build_passage("p", ["x"])
        nid = p.add_node(NodeKind.IMPLICIT)
        assert p.node(nid).kind is NodeKind.IMPLICIT
        assert p.node(nid).text is None

    def test_consecutive_ids_distinct(self):
        p = build_passage("p", ["x"])
        assert p.add_node(NodeKind.NON_TERMINAL) != p.add_node(NodeKind.NON_TERMINAL)


class TestAddEdge:
    def test_primary_edge(self):
        p = build_passage("p", ["After", "x"])
        p.add_edge(p.root, p.terminal_id(1), "L")
        assert len(p.edges) == 1

    def test_remote_permits_reentrancy(self):
        p = build_passage("p", ["John", "x"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, u, "H")
        p.add_edge(p.root, p.terminal_id(1), "A")
        p.add_edge(u, p.terminal_id(1), "A", remote=True)
        assert sum(e.remote for e in p.edges) == 1

    def test_second_primary_parent_rejected(self):
        p = build_passage("p", ["John", "x"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, p.terminal_id(1), "A")
        with pytest.raises(DuplicatePrimaryParent):
            p.add_edge(u, p.terminal_id(1), "A")

    def test_unknown_node(self):
        p = build_passage("p", ["x"])
        with pytest.raises(UnknownNode):
            p.add_edge(p.root, NodeId(1, 99), "A")

    def test_terminal_as_parent(self):
        p = build_passage("p", ["x", "y"])
        with pytest.raises(TerminalAsParent):
            p.add_edge(p.terminal_id(1), p.terminal_id(2), "A")

    def test_implicit_as_parent(self):
        p = build_passage("p", ["x"])
        imp = p.add_node(NodeKind.IMPLICIT)
        with pytest.raises(TerminalAsParent):
            p.add_edge(imp, p.terminal_id(1), "A")

    def test_cycle_rejected(self):
        p = build_passage("p", ["x"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        v = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, u, "H")
        p.add_edge(u, v, "A")
        with pytest.raises(CycleDetected):
            p.add_edge(v, u, "A", remote=True)

    def test_exact_duplicate_rejected(self):
        p = build_passage("p", ["x", "y"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, u, "H")
        with pytest.raises(DuplicateEdge):
            p.add_edge(p.root, u, "H")

    def test_same_pair_two_categories_allowed(self):
        p = build_passage("p", ["x", "y"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, u, "H")
        p.add_edge(p.root, u, "A", remote=True)
        assert len(p.edges) == 2

    def test_remote_to_punctuation_rejected(self):
        p = build_passage("p", [",", "y"])
        with pytest.raises(GraphError):
            p.add_edge(p.root, p.terminal_id(1), "U", remote=True)


class TestFreeze:
    def test_complete_sample(self, remote_passage):
        assert remote_passage.sealed
        assert len(remote_passage.non_terminals) == 4
        assert len(remote_passage.edges) == 11
        assert sum(e.remote for e in remote_passage.edges) == 1

    def test_unattached_terminal(self):
        p = build_passage("p", ["x", "y"])
        p.add_edge(p.root, p.terminal_id(1), "A")
        with pytest.raises(StructuralViolation) as exc:
            p.freeze()
        assert exc.value.rule == "terminal-coverage"

    def test_unattached_unit(self):
        p = build_passage("p", ["x"])
        p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, p.terminal_id(1), "A")
        with pytest.raises(StructuralViolation) as exc:
            p.freeze()
        assert exc.value.rule == "reachability"

    def test_acyclicity_backstop(self):
        # add_edge already refuses cycles; corrupt the edge lists directly
        # to exercise the freeze-time check.
        p = build_passage("p", ["x"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        v = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, u, "H")
        p.add_edge(u, v, "A")
        p.add_edge(u, p.terminal_id(1), "A")
        rogue = Edge(v, u, p.edges[0].category, True)
        p._edges.append(rogue)
        p._out[v].append(rogue)
        p._in[u].append(rogue)
        with pytest.raises(StructuralViolation) as exc:
            p.freeze()
        assert exc.value.rule == "acyclicity"

    def test_sealed_is_immutable(self, remote_passage):
        with pytest.raises(SealedPassage):
            remote_passage.add_node(NodeKind.NON_TERMINAL)
        with pytest.raises(SealedPassage):
            remote_passage.add_edge(
                remote_passage.root, remote_passage.terminal_id(1), "A"
            )


class TestYield:
    def test_to_paris_unit(self, remote_passage):
        assert remote_passage.yield_of(NodeId(1, 4)) == (6, 7)

    def test_remote_child_excluded(self, remote_passage):
        # the first Scene reaches "John" only remotely: not in its yield
        assert remote_passage.yield_of(NodeId(1, 2)) == (2,)

    def test_terminal_yields_itself(self, remote_passage):
        for k in range(1, 8):
            assert remote_passage.yield_of(remote_passage.terminal_id(k)) == (k,)

    def test_implicit_yields_nothing(self, implicit_passage):
        implicit = next(
            n for n in implicit_passage.nodes if n.kind is NodeKind.IMPLICIT
        )
        assert implicit_passage.yield_of(implicit.id) == ()

    def test_unknown_node(self, remote_passage):
        with pytest.raises(UnknownNode):
            remote_passage.yield_of(NodeId(1, 99))

    @given(passages)
    def test_root_yield_is_full_range(self, p):
        assert p.yield_of(p.root) == tuple(range(1, len(p.terminals) + 1))

    @given(passages)
    def test_descendant_yields_nest(self, p):
        for edge in p.edges:
            if not edge.remote:
                child = set(p.yield_of(edge.child))
                assert child <= set(p.yield_of(edge.parent))

    @given(passages)
    def test_sibling_yields_partition(self, p):
        covered: list[int] = []
        for edge in p.outgoing(p.root):
            if not edge.remote:
                covered.extend(p.yield_of(edge.child))
        assert sorted(covered) == list(range(1, len(p.terminals) + 1))

    @given(passages)
    def test_primary_edges_form_tree(self, p):
        reachable = {p.root}
        frontier = [p.root]
        primary = 0
        while frontier:
            nid = frontier.pop()
            for edge in p.outgoing(nid):
                if not edge.remote:
                    primary += 1
                    reachable.add(edge.child)
                    frontier.append(edge.child)
        assert primary == len(reachable) - 1
        assert reachable == {n.id for n in p.nodes}


class TestDiscontinuity:
    def test_gap_in_yield(self):
        p = build_passage("p", ["a", "b", "c"])
        u = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(p.root, u, "H")
        p.add_edge(u, p.terminal_id(1), "A")
        p.add_edge(u, p.terminal_id(3), "A")
        p.add_edge(p.root, p.terminal_id(2), "L")
        p.freeze()
        assert p.yield_of(u) == (1, 3)
        assert p.is_discontinuous(u)
        assert not p.is_discontinuous(p.root)

    def test_contiguous_scene(self, remote_passage):
        assert not remote_passage.is_discontinuous(NodeId(1, 3))

    def test_implicit_is_continuous(self, implicit_passage):
        implicit = next(
            n for n in implicit_passage.nodes if n.kind is NodeKind.IMPLICIT
        )
        assert not implicit_passage.is_discontinuous(implicit.id)


class TestReentrancy:
    def test_shared_participant(self, remote_passage):
        assert remote_passage.is_reentrant(remote_passage.terminal_id(4))

    def test_plain_terminal(self, remote_passage):
        assert not remote_passage.is_reentrant(remote_passage.terminal_id(7))

    def test_root_never_reentrant(self, remote_passage):
        assert not remote_passage.is_reentrant(remote_passage.root)

    @given(passages)
    def test_matches_indegree(self, p):
        for node in p.nodes:
            assert p.is_reentrant(node.id) == (len(p.incoming(node.id)) >= 2)


@settings(max_examples=200)
@given(passages)
def test_construction_safety(p):
    """Random edge insertion plus freeze never yields a broken passage."""
    assert p.sealed
    for node in p.nodes:
        primaries = [e for e in p.incoming(node.id) if not e.remote]
        assert len(primaries) == (0 if node.id == p.root else 1)
