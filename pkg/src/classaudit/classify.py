"""Group assignment from the class name and static-member flag.

Precedence: a *Utils-style suffix wins; otherwise a lowercase "er"/"or"
tail (preceded by at least one character) puts the class in the agent-noun
group unless the name ends with one of the excluded everyday words
(Logger, Color, Calculator, ...); everything else lands in Rest, except
that Rest classes carrying static members are dropped from the study.
Excluded names fall through to the Rest rules by default; the drop policy
is a knob because the routing is genuinely ambiguous.
"""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

DEFAULT_UTILS_SUFFIXES: Tuple[str, ...] = ("Utils", "Util", "Utilities", "Utility")

DEFAULT_EROR_SUFFIXES: Tuple[str, ...] = ("er", "or")

DEFAULT_EXCLUSION_SUFFIXES: Tuple[str, ...] = (
    "Inner", "Actor", "Logger", "Member", "Order", "Parameter",
    "Error", "Calculator", "Vector", "Computer", "Customer",
    "Trigger", "Cluster", "Cipher", "Cursor", "Number", "Owner",
    "Meter", "Letter", "Answer", "Author", "Folder", "Other",
    "Cashier", "Broker", "Motor", "Mirror", "Spider", "Color",
    "Center", "Layer", "Never", "Browser", "Either", "Tensor",
    "Cylinder", "Meteor", "Flower", "Banner", "Chapter", "Developer",
)

EXCLUDED_TO_REST = "rest"
EXCLUDED_TO_DROP = "drop"


class GroupKind(Enum):
    UTILS = "Utils"
    EROR = "ErOr"
    REST = "Rest"
    DROPPED = "Dropped"


@dataclass(frozen=True)
class GroupLabel:
    kind: GroupKind
    drop_reason: Optional[str] = None


@dataclass(frozen=True)
class SuffixRules:
    utils_suffixes: Tuple[str, ...] = DEFAULT_UTILS_SUFFIXES
    eror_suffixes: Tuple[str, ...] = DEFAULT_EROR_SUFFIXES
    exclusion_suffixes: Tuple[str, ...] = DEFAULT_EXCLUSION_SUFFIXES

    def __post_init__(self):
        if not self.utils_suffixes or not self.eror_suffixes:
            raise ValueError("suffix lists must be non-empty")
        if len(set(self.exclusion_suffixes)) != len(self.exclusion_suffixes):
            raise ValueError("exclusion suffixes must be unique")


def has_utils_suffix(name: str, rules: SuffixRules) -> bool:
    return any(name.endswith(s) for s in rules.utils_suffixes)


def has_eror_tail(name: str, rules: SuffixRules) -> bool:
    """Case-sensitive lowercase tail with at least one preceding character."""
    return any(name.endswith(s) and len(name) > len(s) for s in rules.eror_suffixes)


def has_exclusion_suffix(name: str, rules: SuffixRules) -> bool:
    return any(name.endswith(s) for s in rules.exclusion_suffixes)


def classify(
    name: str,
    has_static_member: bool,
    rules: SuffixRules = SuffixRules(),
    excluded_to: str = EXCLUDED_TO_REST,
) -> GroupLabel:
    """Total function: every name gets exactly one label."""
    if not name:
        raise ValueError("class name must be non-empty")
    if has_utils_suffix(name, rules):
        return GroupLabel(GroupKind.UTILS)
    if has_eror_tail(name, rules):
        if not has_exclusion_suffix(name, rules):
            return GroupLabel(GroupKind.EROR)
        if excluded_to == EXCLUDED_TO_DROP:
            return GroupLabel(GroupKind.DROPPED, "excluded-name")
    if has_static_member:
        return GroupLabel(GroupKind.DROPPED, "static-member")
    return GroupLabel(GroupKind.REST)


def load_rules(path: Path) -> SuffixRules:
    """Rules file: one suffix per line under `[utils]` / `[exclude]` headers.

    Blank lines and `#` comments are ignored. A missing section keeps the
    default list for that section.
    """
    utils: List[str] = []
    exclude: List[str] = []
    current: Optional[List[str]] = None
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower() == "[utils]":
            current = utils
            continue
        if line.lower() == "[exclude]":
            current = exclude
            continue
        if current is not None:
            current.append(line)
    return SuffixRules(
        utils_suffixes=tuple(utils) if utils else DEFAULT_UTILS_SUFFIXES,
        exclusion_suffixes=tuple(exclude) if exclude else DEFAULT_EXCLUSION_SUFFIXES,
    )
