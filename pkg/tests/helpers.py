"""Shared test machinery: random passage generation, passage surgery and
an independent brute-force reference scorer.

The reference scorer deliberately avoids the library's yield cache and
multiset matcher: it recomputes yields by plain recursion and finds the
match count by maximum bipartite matching over individual edge pairs.
"""
from __future__ import annotations

import random
from dataclasses import replace

from uccakit.categories import FOUNDATIONAL
from uccakit.graph import GraphError, NodeKind, Passage, build_passage, is_punctuation

WORDS = ["the", "cat", "sat", "on", "a", "mat", "today", "quietly"]
PUNCT = [",", ".", ";", "!"]
CODES = sorted(FOUNDATIONAL)


def random_passage(
    rng: random.Random,
    passage_id: str = "rand",
    tokens: list[str] | None = None,
    max_tokens: int = 8,
    max_units: int = 6,
    max_remotes: int = 2,
    legacy_labels: bool = False,
) -> Passage:
    """A random sealed passage; structure is a random tree plus remotes."""
    codes = CODES + (["T", "Q"] * 3 if legacy_labels else [])
    if tokens is None:
        tokens = [
            rng.choice(PUNCT) if rng.random() < 0.15 else rng.choice(WORDS)
            for _ in range(rng.randint(1, max_tokens))
        ]
    p = build_passage(passage_id, tokens)
    units = [p.root]
    for _ in range(rng.randint(0, max_units - 1)):
        parent = rng.choice(units)
        unit = p.add_node(NodeKind.NON_TERMINAL)
        p.add_edge(parent, unit, rng.choice(codes))
        units.append(unit)
    if rng.random() < 0.3:
        p.add_edge(rng.choice(units), p.add_node(NodeKind.IMPLICIT), rng.choice(codes))
    for position, text in enumerate(tokens, start=1):
        code = "U" if is_punctuation(text) else rng.choice(codes)
        p.add_edge(rng.choice(units), p.terminal_id(position), code)
    candidates = [n.id for n in p.nodes if n.id != p.root]
    for _ in range(rng.randint(0, max_remotes)):
        try:
            p.add_edge(rng.choice(units), rng.choice(candidates), rng.choice(codes), remote=True)
        except GraphError:
            pass  # cycle, duplicate, or punctuation target: just skip
    return p.freeze()


def random_pair(rng: random.Random) -> tuple[Passage, Passage]:
    """Two independently structured passages over the same token sequence."""
    first = random_passage(rng, "pair")
    second = random_passage(rng, "pair", tokens=list(first.tokens))
    return first, second


def rebuild(passage: Passage, edit=None) -> Passage:
    """Copy a sealed passage, passing each edge through `edit`.

    `edit` maps an Edge to a replacement Edge or None to drop it.
    """
    fresh = Passage(passage.passage_id, passage.tokens, root_id=passage.root)
    for node in passage.nodes:
        if node.kind is not NodeKind.TERMINAL and node.id != passage.root:
            fresh.add_node(node.kind, node_id=node.id)
    for edge in passage.edges:
        edited = edit(edge) if edit else edge
        if edited is not None:
            fresh.add_edge(edited.parent, edited.child, edited.category, remote=edited.remote)
    return fresh.freeze()


def relabel(edge, code):
    from uccakit.categories import Category

    return replace(edge, category=Category.from_code(code))


# -- brute-force reference scorer -----------------------------------------


def plain_yield(passage: Passage, node_id) -> frozenset[int]:
    node = passage.node(node_id)
    if node.is_terminal:
        return frozenset([node.position])
    out: frozenset[int] = frozenset()
    for edge in passage.outgoing(node_id):
        if not edge.remote:
            out |= plain_yield(passage, edge.child)
    return out


def _edge_pool(passage, remote, labeled, category=None, include_punct=True):
    pool = []
    for edge in passage.edges:
        if edge.remote != remote:
            continue
        if not include_punct and edge.category.code == "U":
            continue
        if category is not None and edge.category.code != category:
            continue
        span = plain_yield(passage, edge.child)
        if span:
            pool.append((span, edge.category.code if labeled else None))
    return pool


def _max_matching(out_pool, gold_pool) -> int:
    """Kuhn's augmenting-path maximum bipartite matching."""
    matched_gold = [-1] * len(gold_pool)

    def augment(i, visited):
        for j, gold in enumerate(gold_pool):
            if j in visited or out_pool[i] != gold:
                continue
            visited.add(j)
            if matched_gold[j] == -1 or augment(matched_gold[j], visited):
                matched_gold[j] = i
                return True
        return False

    return sum(augment(i, set()) for i in range(len(out_pool)))


def oracle_scores(output: Passage, gold: Passage, include_punct=True) -> dict:
    """Counts per stratum, same shape as EvalScores.to_dict() count fields."""
    result: dict = {"labeled": {}, "unlabeled": {}, "by_category": {}}
    for labeled in (True, False):
        key = "labeled" if labeled else "unlabeled"
        total = [0, 0, 0]
        for remote in (False, True):
            o = _edge_pool(output, remote, labeled, include_punct=include_punct)
            g = _edge_pool(gold, remote, labeled, include_punct=include_punct)
            m = _max_matching(o, g)
            result[key]["remote" if remote else "primary"] = (m, len(o), len(g))
            total = [total[0] + m, total[1] + len(o), total[2] + len(g)]
        result[key]["all"] = tuple(total)
    codes = {e.category.code for e in output.edges} | {e.category.code for e in gold.edges}
    for code in codes:
        if not include_punct and code == "U":
            continue
        triple = [0, 0, 0]
        for remote in (False, True):
            o = _edge_pool(output, remote, True, category=code, include_punct=include_punct)
            g = _edge_pool(gold, remote, True, category=code, include_punct=include_punct)
            triple = [triple[0] + _max_matching(o, g), triple[1] + len(o), triple[2] + len(g)]
        if triple[1] or triple[2]:
            result["by_category"][code] = tuple(triple)
    return result


def counts_triple(counts) -> tuple[int, int, int]:
    return (counts.matched, counts.predicted, counts.gold)
