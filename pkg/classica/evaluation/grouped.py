"""Accuracy grids over metadata axes (century columns, channel rows).

Aggregate cells ("Both" row, "All" column) pool the tokens of their
samples; they are never means of other cells.
"""
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Optional

from classica.annotate.annotated_token import Corpus
from classica.corpus.play import PlayMetadata
from classica.evaluation.accuracy import ClassScore, aligned_pairs
from classica.evaluation.token_classes import Task, parse_task, predicted_target, target
from classica.utils.errors import CorpusFormatError, UsageError

ALL_ROW = "Both"
ALL_COLUMN = "All"
GROUP_AXES = ("century", "channel", "genre", "verse_or_prose", "author_gender", "period")


@dataclass
class GroupedReport:
    task: Task
    column_axis: str
    row_axis: Optional[str]
    columns: list[str] = field(default_factory=list)
    rows: list[str] = field(default_factory=list)
    cells: dict[tuple[str, str], ClassScore] = field(default_factory=dict)

    def cell(self, row: str, column: str) -> ClassScore:
        return self.cells[(row, column)]

    def accuracy(self, row: str, column: str) -> Optional[Decimal]:
        return self.cells[(row, column)].accuracy

    def all_rows(self) -> list[str]:
        return self.rows + [ALL_ROW]

    def all_columns(self) -> list[str]:
        return self.columns + [ALL_COLUMN]


def parse_axes(value: str | list[str] | tuple[str, ...]) -> tuple[str, ...]:
    axes = tuple(axis.strip() for axis in value.split(",")) if isinstance(value, str) else tuple(value)
    if not 1 <= len(axes) <= 2:
        raise UsageError(f"Expected one or two group axes, got {len(axes)}")
    for axis in axes:
        if axis not in GROUP_AXES:
            raise UsageError(f"Unknown group axis {axis!r}, expected one of {', '.join(GROUP_AXES)}")
    return axes


def axis_value(metadata: PlayMetadata, axis: str, sample_id: str) -> str:
    value = getattr(metadata, axis)
    if value is None or value == "":
        raise CorpusFormatError(f"Sample {sample_id} has no {axis} in its metadata")
    if isinstance(value, Enum):
        return value.value
    return str(value)


def _sort_key(value: str):
    return (0, int(value), value) if value.isdigit() else (1, 0, value)


def grouped_report(
    samples: list[tuple[str, Corpus, Corpus]],
    metadata: dict[str, PlayMetadata],
    task: Task | str,
    axes: str | tuple[str, ...] = ("century", "channel"),
) -> GroupedReport:
    """samples holds (sample id, gold, prediction) triples."""
    task = parse_task(task) if isinstance(task, str) else task
    axes = parse_axes(axes)
    column_axis = axes[0]
    row_axis = axes[1] if len(axes) == 2 else None

    per_sample: list[tuple[str, Optional[str], ClassScore]] = []
    for sample_id, gold, pred in samples:
        if sample_id not in metadata:
            raise CorpusFormatError(f"Sample {sample_id} has no metadata row")
        sample_metadata = metadata[sample_id]
        column = axis_value(sample_metadata, column_axis, sample_id)
        row = axis_value(sample_metadata, row_axis, sample_id) if row_axis else None
        score = ClassScore()
        for gold_token, pred_token in aligned_pairs(gold, pred):
            score.add(target(gold_token, task) == predicted_target(pred_token, task))
        per_sample.append((column, row, score))

    report = GroupedReport(task, column_axis, row_axis)
    report.columns = sorted({column for column, _, _ in per_sample}, key=_sort_key)
    report.rows = sorted({row for _, row, _ in per_sample if row is not None}, key=_sort_key)
    for row in report.all_rows():
        for column in report.all_columns():
            report.cells[(row, column)] = ClassScore()
    for column, row, score in per_sample:
        targets = [(ALL_ROW, column), (ALL_ROW, ALL_COLUMN)]
        if row is not None:
            targets += [(row, column), (row, ALL_COLUMN)]
        for key in targets:
            report.cells[key].merge(score)
    return report
