"""The official yield-based edge F1 metric.

An output graph is scored against a gold graph over the same token
sequence.  Two edges match when their children cover the same terminal
yield and, in labeled mode, carry the same category.  Matching is a
one-to-one multiset intersection, performed independently for primary and
remote edges; the "all" stratum sums the two count triples before
computing precision, recall and F1.  Edges whose child yield is empty
(implicit children) never enter a matching pool.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .categories import ALL_CODES, PUNCT_CODE, REPORT_ORDER
from .errors import TokenMismatch
from .graph import Passage

STRATA = ("all", "primary", "remote")


@dataclass(frozen=True)
class EdgeSignature:
    """What an edge contributes to matching: child yield, label, class."""

    span: tuple[int, ...]
    category: Optional[str]  # None in unlabeled mode
    remote: bool


def edge_signatures(
    passage: Passage, labeled: bool = True, include_punct: bool = True
) -> list[EdgeSignature]:
    """One signature per edge with a non-empty child yield."""
    signatures = []
    for edge in passage.edges:
        span = passage.yield_of(edge.child)
        if not span:
            continue
        if not include_punct and edge.category.code == PUNCT_CODE:
            continue
        category = edge.category.code if labeled else None
        signatures.append(EdgeSignature(span, category, edge.remote))
    return signatures


def match_count(out_sigs: Iterable[EdgeSignature], gold_sigs: Iterable[EdgeSignature]) -> int:
    """Size of the multiset intersection: each gold signature is consumed
    at most once."""
    common = Counter(out_sigs) & Counter(gold_sigs)
    return sum(common.values())


@dataclass
class Counts:
    matched: int = 0
    predicted: int = 0
    gold: int = 0

    @property
    def precision(self) -> float:
        return self._ratio(self.predicted)

    @property
    def recall(self) -> float:
        return self._ratio(self.gold)

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def _ratio(self, denominator: int) -> float:
        # Empty on both sides counts as a perfect score; an empty side
        # against a non-empty one scores 0.
        if denominator == 0:
            return 1.0 if self.predicted == self.gold == 0 else 0.0
        return self.matched / denominator

    def __add__(self, other: "Counts") -> "Counts":
        return Counts(
            self.matched + other.matched,
            self.predicted + other.predicted,
            self.gold + other.gold,
        )

    def to_dict(self) -> dict:
        return {
            "matched": self.matched,
            "predicted": self.predicted,
            "gold": self.gold,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


@dataclass
class EvalScores:
    """Count triples per stratum: labeledness x edge class, plus per-category."""

    labeled: dict[str, Counts] = field(default_factory=lambda: {s: Counts() for s in STRATA})
    unlabeled: dict[str, Counts] = field(default_factory=lambda: {s: Counts() for s in STRATA})
    by_category: dict[str, Counts] = field(default_factory=dict)

    def merge(self, other: "EvalScores") -> "EvalScores":
        merged = EvalScores()
        for stratum in STRATA:
            merged.labeled[stratum] = self.labeled[stratum] + other.labeled[stratum]
            merged.unlabeled[stratum] = self.unlabeled[stratum] + other.unlabeled[stratum]
        for code in set(self.by_category) | set(other.by_category):
            merged.by_category[code] = self.by_category.get(code, Counts()) + other.by_category.get(
                code, Counts()
            )
        return merged

    def to_dict(self) -> dict:
        return {
            "labeled": {s: c.to_dict() for s, c in self.labeled.items()},
            "unlabeled": {s: c.to_dict() for s, c in self.unlabeled.items()},
            "by_category": {c: n.to_dict() for c, n in sorted(self.by_category.items())},
        }


def score_passage(output: Passage, gold: Passage, include_punct: bool = True) -> EvalScores:
    """Score one output passage against its gold annotation."""
    if output.tokens != gold.tokens:
        raise TokenMismatch(
            f"passage {gold.passage_id}: output has {len(output.tokens)} tokens "
            f"vs {len(gold.tokens)} gold, or the texts differ"
        )
    scores = EvalScores()
    for labeled in (True, False):
        out_sigs = edge_signatures(output, labeled, include_punct)
        gold_sigs = edge_signatures(gold, labeled, include_punct)
        target = scores.labeled if labeled else scores.unlabeled
        for remote in (False, True):
            out_pool = [s for s in out_sigs if s.remote == remote]
            gold_pool = [s for s in gold_sigs if s.remote == remote]
            counts = Counts(match_count(out_pool, gold_pool), len(out_pool), len(gold_pool))
            target["remote" if remote else "primary"] += counts
            target["all"] += counts
        if labeled:
            for code in sorted({s.category for s in out_sigs} | {s.category for s in gold_sigs}):
                out_pool = [s for s in out_sigs if s.category == code]
                gold_pool = [s for s in gold_sigs if s.category == code]
                scores.by_category[code] = scores.by_category.get(code, Counts()) + Counts(
                    match_count(out_pool, gold_pool), len(out_pool), len(gold_pool)
                )
    return scores


def score_corpus(
    pairs: Iterable[tuple[Passage, Passage]], include_punct: bool = True
) -> EvalScores:
    """Micro-average over a stream of (output, gold) pairs: count triples
    are summed per stratum, ratios computed once at the end."""
    total = EvalScores()
    for output, gold in pairs:
        total = total.merge(score_passage(output, gold, include_punct))
    return total


def render_scores(
    scores: EvalScores, fine_grained: bool = False, unlabeled_only: bool = False
) -> str:
    """Aligned score table; one row per stratum, optionally per category."""
    header = f"{'stratum':<22}{'P':>8}{'R':>8}{'F1':>8}   matched/predicted/gold"
    lines = [header]

    def row(name: str, counts: Counts) -> str:
        return (
            f"{name:<22}{counts.precision:>8.3f}{counts.recall:>8.3f}{counts.f1:>8.3f}"
            f"   {counts.matched}/{counts.predicted}/{counts.gold}"
        )

    if not unlabeled_only:
        for stratum in STRATA:
            lines.append(row(f"labeled/{stratum}", scores.labeled[stratum]))
    for stratum in STRATA:
        lines.append(row(f"unlabeled/{stratum}", scores.unlabeled[stratum]))
    if fine_grained and not unlabeled_only:
        lines.append("")
        lines.append(f"{'category':<22}{'P':>8}{'R':>8}{'F1':>8}   matched/predicted/gold")
        order = [c for c in REPORT_ORDER if c in scores.by_category]
        order += sorted(set(scores.by_category) - set(order))
        for code in order:
            lines.append(row(ALL_CODES.get(code, code), scores.by_category[code]))
    return "\n".join(lines)
