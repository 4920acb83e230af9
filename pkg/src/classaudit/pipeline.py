"""Corpus pipeline: ingest classes, filter, aggregate per group.

Filtering order matters and is frozen per run: records with any undefined
metric go first; the 0.01/0.99 nearest-rank thresholds of ncloc are then
computed over everything that remains (including still-Dropped-labeled
records) and strict outliers go; Dropped-labeled records go last. The four
tallies always satisfy input = output + metric + quantile + label drops.
"""

import csv
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple, Union

from .classify import EXCLUDED_TO_REST, GroupKind, GroupLabel, SuffixRules, classify
from .errors import EmptyInput, MissingColumn, ParseError, RowParseError
from .javamodel.parser import parse_compilation_unit
from .metrics import ClassMetrics, class_metrics


@dataclass
class ClassRecord:
    qualified_name: str
    origin: str
    metrics: ClassMetrics
    loc: int
    blank_lines: int
    label: GroupLabel
    # False when an ingested row lacked an always-int metric cell (CC/CoCo
    # totals have no None slot in ClassMetrics, so absence is flagged here).
    metrics_complete: bool = True

    @property
    def ncloc(self) -> int:
        return self.loc - self.blank_lines


@dataclass
class GroupSummary:
    label: GroupKind
    class_count: int
    loc_total: int
    loc_per_class: Optional[float]
    lcom5_mean: Optional[float]
    nhd_mean: Optional[float]
    cc_mean: Optional[float]
    coco_mean: Optional[float]
    acoco_mean: Optional[float]
    mxcoco_mean: Optional[float]
    mncoco_mean: Optional[float]


@dataclass
class Diagnostics:
    """Skip tally plus one `SKIP path:line reason` line per skipped unit."""

    files_seen: int = 0
    rows_seen: int = 0
    skipped: int = 0
    lines: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def skip(self, path: str, line: int, reason: str):
        self.skipped += 1
        self.lines.append(f"SKIP {path}:{line} {reason}")

    def units_seen(self) -> int:
        return self.files_seen + self.rows_seen

    def skip_rate(self) -> float:
        seen = self.units_seen()
        return self.skipped / seen if seen else 0.0

    def write(self, stream: TextIO):
        for line in self.lines:
            stream.write(line + "\n")
        for warning in self.warnings:
            stream.write(f"WARN {warning}\n")


def ingest_sources(
    roots: Sequence[Union[str, os.PathLike]],
    rules: SuffixRules = SuffixRules(),
    excluded_to: str = EXCLUDED_TO_REST,
    diagnostics: Optional[Diagnostics] = None,
) -> Iterator[ClassRecord]:
    """Parse every .java file under the roots into ClassRecords.

    Unreadable roots raise OSError (fatal); per-file parse failures are
    tallied in diagnostics and skipped. Traversal order is sorted, so the
    record stream is deterministic.
    """
    diag = diagnostics if diagnostics is not None else Diagnostics()
    for root in roots:
        root = os.fspath(root)
        if not os.path.isdir(root):
            raise FileNotFoundError(f"input root is not a directory: {root}")
        for dirpath, dirnames, filenames in os.walk(root):
            dirnames.sort()
            for fname in sorted(filenames):
                if not fname.endswith(".java"):
                    continue
                path = os.path.join(dirpath, fname)
                diag.files_seen += 1
                try:
                    text = _read_text(path)
                    classes = parse_compilation_unit(text, path)
                except ParseError as exc:
                    diag.skip(path, exc.line, exc.message)
                    continue
                except (OSError, UnicodeDecodeError) as exc:
                    diag.skip(path, 0, str(exc))
                    continue
                for cls in _flatten(classes):
                    label = classify(cls.name, cls.has_static_member, rules, excluded_to)
                    yield ClassRecord(
                        qualified_name=cls.qualified_name,
                        origin=path,
                        metrics=class_metrics(cls),
                        loc=cls.loc,
                        blank_lines=cls.blank_lines,
                        label=label,
                    )


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8-sig") as fh:
        return fh.read()


def _flatten(classes):
    for cls in classes:
        yield cls
        yield from _flatten(cls.nested)


# Logical keys the CAM-style CSV column map must bind.
CAM_REQUIRED_KEYS = (
    "name", "lcom5", "nhd", "cc", "coco", "acoco", "mxcoco", "mncoco",
    "loc", "blank",
)
CAM_OPTIONAL_KEYS = ("static",)

DEFAULT_CAM_COLUMN_MAP: Dict[str, str] = {
    "name": "class_name",
    "lcom5": "lcom5",
    "nhd": "nhd",
    "cc": "cc",
    "coco": "coco",
    "acoco": "acoco",
    "mxcoco": "mxcoco",
    "mncoco": "mncoco",
    "loc": "loc",
    "blank": "blanks",
}


def ingest_cam_csv(
    path: Union[str, os.PathLike],
    column_map: Dict[str, str],
    rules: SuffixRules = SuffixRules(),
    excluded_to: str = EXCLUDED_TO_REST,
    diagnostics: Optional[Diagnostics] = None,
) -> Iterator[ClassRecord]:
    """One record per CSV row; empty metric cells become undefined metrics.

    Rows with a missing/garbled name or size cells are tallied and skipped;
    a metric column absent from the header is fatal (MissingColumn).
    """
    diag = diagnostics if diagnostics is not None else Diagnostics()
    for key in CAM_REQUIRED_KEYS:
        if key not in column_map:
            raise MissingColumn(f"column map does not bind '{key}'")
    path = os.fspath(path)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for key in CAM_REQUIRED_KEYS:
            if column_map[key] not in header:
                raise MissingColumn(
                    f"CSV is missing column '{column_map[key]}' (bound to '{key}')"
                )
        static_col = column_map.get("static")
        if static_col is not None and static_col not in header:
            raise MissingColumn(f"CSV is missing column '{static_col}' (bound to 'static')")
        if static_col is None:
            diag.warnings.append(
                "no static-member column mapped; treating every class as static-free"
            )
        for lineno, row in enumerate(reader, start=2):
            diag.rows_seen += 1
            try:
                record = _row_to_record(row, column_map, static_col, path, lineno,
                                         rules, excluded_to)
            except RowParseError as exc:
                diag.skip(path, lineno, str(exc))
                continue
            yield record


def _row_to_record(row, column_map, static_col, path, lineno, rules, excluded_to) -> ClassRecord:
    name = (row.get(column_map["name"]) or "").strip()
    if not name:
        raise RowParseError("empty class name")
    simple = name.rsplit(".", 1)[-1].rsplit("$", 1)[-1]
    loc = _cell_int(row, column_map["loc"], required=True)
    blank = _cell_int(row, column_map["blank"], required=True)
    lcom5_v = _cell_float(row, column_map["lcom5"])
    nhd_v = _cell_float(row, column_map["nhd"])
    cc_v = _cell_float(row, column_map["cc"])
    coco_v = _cell_float(row, column_map["coco"])
    acoco_v = _cell_float(row, column_map["acoco"])
    mxcoco_v = _cell_float(row, column_map["mxcoco"])
    mncoco_v = _cell_float(row, column_map["mncoco"])
    has_static = False
    if static_col is not None:
        has_static = _truthy(row.get(static_col, ""))
    metrics = ClassMetrics(
        lcom5=lcom5_v,
        nhd=nhd_v,
        cc_total=_as_count(cc_v),
        coco_total=_as_count(coco_v),
        coco_avg=acoco_v,
        coco_min=_as_count(mncoco_v) if mncoco_v is not None else None,
        coco_max=_as_count(mxcoco_v) if mxcoco_v is not None else None,
        k=0,
        l_attr=0,
        l_types=0,
    )
    label = classify(simple, has_static, rules, excluded_to)
    return ClassRecord(
        qualified_name=name,
        origin=f"{path}:{lineno}",
        metrics=metrics,
        loc=loc,
        blank_lines=blank,
        label=label,
        metrics_complete=(cc_v is not None and coco_v is not None),
    )


def _cell_float(row, col) -> Optional[float]:
    raw = (row.get(col) or "").strip()
    if raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise RowParseError(f"bad numeric value {raw!r} in column {col!r}")


def _cell_int(row, col, required=False) -> int:
    raw = (row.get(col) or "").strip()
    if raw == "":
        if required:
            raise RowParseError(f"missing value in column {col!r}")
        return 0
    try:
        return int(float(raw))
    except ValueError:
        raise RowParseError(f"bad integer value {raw!r} in column {col!r}")


def _as_count(v: Optional[float]) -> int:
    if v is None:
        return 0
    return int(v) if float(v).is_integer() else v  # keep fractional CSV values


def _truthy(raw: str) -> bool:
    return raw.strip().lower() in ("1", "true", "yes", "y")


def quantile(values: Sequence[float], p: Union[float, Fraction]) -> float:
    """Nearest-rank quantile of an ascending-sorted sequence.

    Element at index ceil(p*n) - 1, clamped into range. The rank is computed
    with exact rational arithmetic so 0.01 * 1000 lands on 10, not 10.000...2.
    """
    n = len(values)
    if n == 0:
        raise EmptyInput("quantile of empty input")
    frac = p if isinstance(p, Fraction) else Fraction(str(p))
    rank = math.ceil(frac * n)
    return values[min(max(rank - 1, 0), n - 1)]


@dataclass
class FilterOutcome:
    kept: List[ClassRecord]
    input_count: int
    dropped_by_metric: int
    dropped_by_quantile: int
    dropped_by_label: int
    q_low_value: Optional[float]
    q_high_value: Optional[float]

    @property
    def output_count(self) -> int:
        return len(self.kept)


def _metrics_defined(record: ClassRecord) -> bool:
    return record.metrics_complete and not record.metrics.has_undefined()


def filter_records(
    records: Iterable[ClassRecord],
    q_low: Union[float, Fraction] = Fraction(1, 100),
    q_high: Union[float, Fraction] = Fraction(99, 100),
    frozen_bounds: Optional[Tuple[float, float]] = None,
) -> FilterOutcome:
    """Apply the three drops in order; thresholds are computed once.

    `frozen_bounds` reuses (q_low_value, q_high_value) from an earlier pass
    instead of recomputing them, which makes filtering idempotent.
    """
    materialized = list(records)
    with_metrics = [r for r in materialized if _metrics_defined(r)]
    dropped_by_metric = len(materialized) - len(with_metrics)
    if frozen_bounds is not None:
        lo, hi = frozen_bounds
        in_bounds = [r for r in with_metrics if lo <= r.ncloc <= hi]
    elif with_metrics:
        population = sorted(r.ncloc for r in with_metrics)
        lo = quantile(population, q_low)
        hi = quantile(population, q_high)
        in_bounds = [r for r in with_metrics if lo <= r.ncloc <= hi]
    else:
        lo = hi = None
        in_bounds = []
    dropped_by_quantile = len(with_metrics) - len(in_bounds)
    kept = [r for r in in_bounds if r.label.kind is not GroupKind.DROPPED]
    dropped_by_label = len(in_bounds) - len(kept)
    return FilterOutcome(
        kept=kept,
        input_count=len(materialized),
        dropped_by_metric=dropped_by_metric,
        dropped_by_quantile=dropped_by_quantile,
        dropped_by_label=dropped_by_label,
        q_low_value=lo,
        q_high_value=hi,
    )


GROUP_ORDER = (GroupKind.EROR, GroupKind.UTILS, GroupKind.REST)


def aggregate_groups(records: Iterable[ClassRecord]) -> List[GroupSummary]:
    """One summary per group in fixed ErOr, Utils, Rest order.

    Means are fsum-based, so the result is identical for any record order.
    """
    buckets: Dict[GroupKind, List[ClassRecord]] = {g: [] for g in GROUP_ORDER}
    for record in records:
        if record.label.kind in buckets:
            buckets[record.label.kind].append(record)
    summaries = []
    for kind in GROUP_ORDER:
        group = buckets[kind]
        count = len(group)
        loc_total = sum(r.loc for r in group)
        summaries.append(
            GroupSummary(
                label=kind,
                class_count=count,
                loc_total=loc_total,
                loc_per_class=(loc_total / count) if count else None,
                lcom5_mean=_mean([r.metrics.lcom5 for r in group]),
                nhd_mean=_mean([r.metrics.nhd for r in group]),
                cc_mean=_mean([r.metrics.cc_total for r in group]),
                coco_mean=_mean([r.metrics.coco_total for r in group]),
                acoco_mean=_mean([r.metrics.coco_avg for r in group]),
                mxcoco_mean=_mean([r.metrics.coco_max for r in group]),
                mncoco_mean=_mean([r.metrics.coco_min for r in group]),
            )
        )
    return summaries


def _mean(values) -> Optional[float]:
    defined = [v for v in values if v is not None]
    if not defined:
        return None
    return math.fsum(defined) / len(defined)
