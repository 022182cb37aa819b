"""Text and JSON-lines renderings of evaluation reports."""
import json
from decimal import Decimal
from typing import Iterable, Iterator, Optional, TextIO

from classica.evaluation.accuracy import CLASS_LABELS, CLASS_NAMES, ClassScore, EvalReport, format_percentage
from classica.evaluation.confusion import ConfusionEntry
from classica.evaluation.deltas import ClassDelta, DeltaReport, format_delta, format_support_delta
from classica.evaluation.grouped import ALL_COLUMN, ALL_ROW, GroupedReport

ROW_LABELS = {"theatre": "Theatre", "other": "Not theatre"}


def _ordinal(value: str) -> str:
    if not value.isdigit():
        return value
    number = int(value)
    suffix = "th" if 10 <= number % 100 <= 20 else {1: "st", 2: "nd", 3: "rd"}.get(number % 10, "th")
    return f"{number}{suffix}"


def column_label(axis: str, value: str) -> str:
    if value == ALL_COLUMN:
        return "All cent." if axis == "century" else "All"
    return _ordinal(value) if axis == "century" else value


def row_label(value: str) -> str:
    return ROW_LABELS.get(value, value)


def format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(header) for header in headers]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    lines = ["  ".join(header.rjust(width) if i else header.ljust(width) for i, (header, width) in enumerate(zip(headers, widths)))]
    for row in rows:
        lines.append("  ".join(cell.rjust(width) if i else cell.ljust(width) for i, (cell, width) in enumerate(zip(row, widths))))
    return "\n".join(line.rstrip() for line in lines)


def render_eval_report(report: EvalReport) -> str:
    headers = [""] + [CLASS_LABELS[name] for name in CLASS_NAMES]
    rows = [
        ["accuracy"] + [format_percentage(report.accuracy(name)) for name in CLASS_NAMES],
        ["support"] + [str(report.support(name)) for name in CLASS_NAMES],
    ]
    return f"task: {report.task.value}\n" + format_table(headers, rows) + "\n"


def render_grouped_report(report: GroupedReport) -> str:
    headers = [""] + [column_label(report.column_axis, column) for column in report.all_columns()]
    rows = [
        [row_label(row)] + [format_percentage(report.accuracy(row, column)) for column in report.all_columns()]
        for row in report.all_rows()
    ]
    axes = report.column_axis + (f",{report.row_axis}" if report.row_axis else "")
    return f"task: {report.task.value}\ngroup: {axes}\n" + format_table(headers, rows) + "\n"


def render_delta_report(report: DeltaReport, column_axis: str = "century") -> str:
    headers = [""] + [column_label(column_axis, column) for column in report.columns]
    rows = [[row_label(row)] + [report.formatted(row, column) for column in report.columns] for row in report.rows]
    return format_table(headers, rows) + "\n"


def render_class_deltas(deltas: list[ClassDelta]) -> str:
    headers = ["", "accuracy a", "accuracy b", "delta", "support a", "support b", "support delta"]
    rows = [
        [
            CLASS_LABELS[delta.class_name],
            format_percentage(delta.accuracy_a),
            format_percentage(delta.accuracy_b),
            format_delta(delta.accuracy_delta),
            str(delta.support_a),
            str(delta.support_b),
            format_support_delta(delta.support_delta),
        ]
        for delta in deltas
    ]
    return format_table(headers, rows) + "\n"


def render_confusions(entries: list[ConfusionEntry]) -> str:
    headers = ["Expected", "Tot. Err.", "Pred.", "Pred. times"]
    rows = []
    for entry in entries:
        for index, (predicted, count) in enumerate(entry.predictions):
            if index == 0:
                rows.append([entry.expected, str(entry.total_errors), predicted, str(count)])
            else:
                rows.append(["", "", predicted, str(count)])
    return format_table(headers, rows) + "\n"


def render_feature_scores(scores: dict[str, ClassScore]) -> str:
    headers = ["feature", "accuracy", "support"]
    rows = [[key, format_percentage(score.accuracy), str(score.support)] for key, score in scores.items()]
    return format_table(headers, rows) + "\n"


def _number(value: Optional[Decimal]) -> Optional[float]:
    return None if value is None else float(value)


def eval_records(report: EvalReport) -> Iterator[dict]:
    for name in CLASS_NAMES:
        yield {
            "task": report.task.value,
            "class": name,
            "accuracy": _number(report.accuracy(name)),
            "correct": report.scores[name].correct,
            "support": report.support(name),
        }


def grouped_records(report: GroupedReport) -> Iterator[dict]:
    for row in report.all_rows():
        for column in report.all_columns():
            score = report.cell(row, column)
            record = {
                "task": report.task.value,
                report.column_axis: column,
                "accuracy": _number(score.accuracy),
                "correct": score.correct,
                "support": score.support,
            }
            if report.row_axis:
                record[report.row_axis] = row
            yield record


def delta_records(report: DeltaReport, column_axis: str = "century", row_axis: str = "channel") -> Iterator[dict]:
    for row in report.rows:
        for column in report.columns:
            yield {column_axis: column, row_axis: row, "delta": report.formatted(row, column)}


def confusion_records(entries: list[ConfusionEntry]) -> Iterator[dict]:
    for entry in entries:
        yield {
            "expected": entry.expected,
            "total_errors": entry.total_errors,
            "predictions": [[predicted, count] for predicted, count in entry.predictions],
        }


def write_jsonl(records: Iterable[dict], out: TextIO) -> None:
    for record in records:
        out.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
