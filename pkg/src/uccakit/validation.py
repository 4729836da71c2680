"""Label normalization and well-formedness checks.

Normalization rewrites the legacy Time/Quantifier labels to Adverbial and
Elaborator.  Validation checks annotation-guideline rules that go beyond
the raw graph invariants enforced at freeze time; violations are data, not
errors, so third-party outputs remain scorable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .categories import ALL_CODES, LEGACY, LEGACY_REPLACEMENT, PUNCT_CODE
from .graph import NodeKind, Passage, is_punctuation

RULES = {
    "V0": "no legacy T/Q labels remain",
    "V1": "a Scene has exactly one main relation (P or S child)",
    "V2": "a Scene has at least one Participant (A child, remote or implicit counted)",
    "V3": "punctuation terminals attach via U, and U attaches only punctuation",
    "V4": "all categories belong to the inventory",
}


@dataclass(frozen=True)
class RuleSet:
    """The set of enabled validation rules; unknown ids are rejected."""

    enabled: frozenset[str] = frozenset(RULES)

    def __post_init__(self):
        unknown = set(self.enabled) - set(RULES)
        if unknown:
            raise ValueError(f"unknown rule ids: {sorted(unknown)}")

    def __contains__(self, rule_id: str) -> bool:
        return rule_id in self.enabled


@dataclass(frozen=True)
class Violation:
    rule: str
    ref: str  # offending node id or "parent->child" edge reference
    message: str


@dataclass
class ValidationReport:
    passage_id: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_lines(self) -> str:
        """One JSON object per violation: {passage, rule, ref, message}."""
        return "\n".join(
            json.dumps(
                {"passage": self.passage_id, "rule": v.rule, "ref": v.ref, "message": v.message}
            )
            for v in self.violations
        )


def normalize(passage: Passage) -> Passage:
    """Relabel every T edge to D and every Q edge to E.

    Returns a new sealed passage; everything except the legacy category
    codes is preserved.  Idempotent, and a no-op passage is returned as is.
    """
    if not any(e.category.is_legacy() for e in passage.edges):
        return passage.freeze() if not passage.sealed else passage
    fresh = Passage(
        passage.passage_id,
        passage.tokens,
        root_id=passage.root,
        num_sentences=passage.num_sentences,
    )
    for node in passage.nodes:
        if node.kind is not NodeKind.TERMINAL and node.id != passage.root:
            fresh.add_node(node.kind, node_id=node.id)
    seen = set()
    for edge in passage.edges:
        code = LEGACY_REPLACEMENT.get(edge.category.code, edge.category.code)
        key = (edge.parent, edge.child, code, edge.remote)
        if key in seen:
            continue  # relabeling collapsed this edge onto an existing one
        seen.add(key)
        fresh.add_edge(edge.parent, edge.child, code, remote=edge.remote)
    return fresh.freeze()


def validate(passage: Passage, rules: RuleSet | None = None) -> ValidationReport:
    """Check a sealed passage against the enabled rules."""
    rules = rules or RuleSet()
    passage._require_sealed()
    report = ValidationReport(passage.passage_id)

    def flag(rule: str, ref, message: str) -> None:
        report.violations.append(Violation(rule, str(ref), message))

    for edge in passage.edges:
        ref = f"{edge.parent}->{edge.child}"
        if "V0" in rules and edge.category.code in LEGACY:
            flag("V0", ref, f"legacy label {edge.category.code}; run normalize first")
        if "V4" in rules and edge.category.code not in ALL_CODES:
            flag("V4", ref, f"category {edge.category.code} outside the inventory")

    if "V1" in rules or "V2" in rules:
        for unit in passage.non_terminals:
            out = passage.outgoing(unit.id)
            main = [e for e in out if e.category.code in ("P", "S")]
            if not main:
                continue
            if "V1" in rules and len(main) > 1:
                codes = "".join(e.category.code for e in main)
                flag("V1", unit.id, f"multiple main relations ({codes}) in one Scene")
            if "V2" in rules and not any(e.category.code == "A" for e in out):
                flag("V2", unit.id, "Scene without a Participant")

    if "V3" in rules:
        for edge in passage.edges:
            if edge.remote:
                continue
            child = passage.node(edge.child)
            punct = child.is_terminal and is_punctuation(child.text)
            if punct and edge.category.code != PUNCT_CODE:
                flag("V3", f"{edge.parent}->{edge.child}",
                     f"punctuation token attached as {edge.category.code}, expected U")
            if not punct and edge.category.code == PUNCT_CODE:
                flag("V3", f"{edge.parent}->{edge.child}",
                     "U edge points at a non-punctuation node")

    return report
