"""Edge category inventory of the foundational layer."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownCategory

#: The twelve foundational categories.
FOUNDATIONAL = {
    "P": "Process",
    "S": "State",
    "A": "Participant",
    "D": "Adverbial",
    "C": "Center",
    "E": "Elaborator",
    "N": "Connector",
    "R": "Relator",
    "H": "Parallel Scene",
    "L": "Linker",
    "G": "Ground",
    "F": "Function",
}

#: Punctuation attachment label.
PUNCT_CODE = "U"

#: Legacy labels accepted on input only; normalization rewrites them.
LEGACY = {"T": "Time", "Q": "Quantifier"}

#: Legacy code -> replacement applied by normalization.
LEGACY_REPLACEMENT = {"T": "D", "Q": "E"}

ALL_CODES: dict[str, str] = {**FOUNDATIONAL, PUNCT_CODE: "Punctuation", **LEGACY}

#: Fixed ordering used by fine-grained score and statistics reports.
REPORT_ORDER = ["P", "S", "A", "D", "C", "E", "N", "R", "H", "L", "G", "F", "U"]


@dataclass(frozen=True)
class Category:
    """An edge label: single-letter code plus its human-readable name."""

    code: str
    longname: str

    @classmethod
    def from_code(cls, code: str) -> "Category":
        try:
            return _REGISTRY[code]
        except KeyError:
            raise UnknownCategory(f"unknown category code: {code!r}") from None

    def is_legacy(self) -> bool:
        return self.code in LEGACY

    def __str__(self) -> str:
        return self.code


_REGISTRY = {code: Category(code, longname) for code, longname in ALL_CODES.items()}


def as_category(value: "Category | str") -> Category:
    """Coerce a code string or Category instance to a Category."""
    if isinstance(value, Category):
        if value.code not in _REGISTRY:
            raise UnknownCategory(f"unknown category code: {value.code!r}")
        return _REGISTRY[value.code]
    return Category.from_code(value)
