"""uccakit: build, validate, serialize, score and measure UCCA graphs."""

from .categories import Category
from .errors import (
    StructuralViolation,
    TokenMismatch,
    UccaError,
    UnknownCategory,
)
from .evaluation import (
    EvalScores,
    edge_signatures,
    match_count,
    score_corpus,
    score_passage,
)
from .formats import (
    BilexicalRow,
    export_bilexical,
    export_text,
    parse_xml,
    serialize_xml,
)
from .graph import Edge, Node, NodeId, NodeKind, Passage, build_passage
from .stats import StatsReport, corpus_stats
from .validation import RuleSet, ValidationReport, normalize, validate

__all__ = [
    "BilexicalRow",
    "Category",
    "Edge",
    "EvalScores",
    "Node",
    "NodeId",
    "NodeKind",
    "Passage",
    "RuleSet",
    "StatsReport",
    "StructuralViolation",
    "TokenMismatch",
    "UccaError",
    "UnknownCategory",
    "ValidationReport",
    "build_passage",
    "corpus_stats",
    "edge_signatures",
    "export_bilexical",
    "export_text",
    "match_count",
    "normalize",
    "parse_xml",
    "score_corpus",
    "score_passage",
    "serialize_xml",
    "validate",
]
