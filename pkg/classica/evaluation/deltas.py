from dataclasses import dataclass, field
from decimal import Decimal
from typing import Optional

from classica.evaluation.accuracy import CLASS_NAMES, EvalReport
from classica.evaluation.grouped import GroupedReport
from classica.utils.errors import AxisMismatchError


def format_delta(value: Optional[Decimal]) -> str:
    """Signed, 2 decimals: "+0.30", "-1.25", "+0.00"."""
    if value is None:
        return "NA"
    if value == 0:
        return "+0.00"
    return f"{value:+.2f}"


def format_support_delta(value: int) -> str:
    return f"{value:+d}"


@dataclass
class DeltaReport:
    rows: list[str] = field(default_factory=list)
    columns: list[str] = field(default_factory=list)
    cells: dict[tuple[str, str], Optional[Decimal]] = field(default_factory=dict)

    def delta(self, row: str, column: str) -> Optional[Decimal]:
        return self.cells[(row, column)]

    def formatted(self, row: str, column: str) -> str:
        return format_delta(self.cells[(row, column)])


def delta_report(report_a: GroupedReport, report_b: GroupedReport) -> DeltaReport:
    """Cellwise b - a on the printed (rounded) accuracies."""
    if (report_a.column_axis, report_a.row_axis) != (report_b.column_axis, report_b.row_axis):
        raise AxisMismatchError(
            f"Reports group on different axes: {report_a.column_axis}/{report_a.row_axis} "
            f"vs {report_b.column_axis}/{report_b.row_axis}"
        )
    if report_a.columns != report_b.columns:
        missing = sorted(set(report_a.columns) ^ set(report_b.columns))
        raise AxisMismatchError(f"Reports differ on {report_a.column_axis} values: {', '.join(missing)}")
    if report_a.rows != report_b.rows:
        missing = sorted(set(report_a.rows) ^ set(report_b.rows))
        raise AxisMismatchError(f"Reports differ on {report_a.row_axis} values: {', '.join(missing)}")

    delta = DeltaReport(report_a.all_rows(), report_a.all_columns())
    for key, score_a in report_a.cells.items():
        a, b = score_a.accuracy, report_b.cells[key].accuracy
        delta.cells[key] = None if a is None or b is None else b - a
    return delta


@dataclass(frozen=True)
class ClassDelta:
    class_name: str
    accuracy_a: Optional[Decimal]
    accuracy_b: Optional[Decimal]
    support_a: int
    support_b: int

    @property
    def accuracy_delta(self) -> Optional[Decimal]:
        if self.accuracy_a is None or self.accuracy_b is None:
            return None
        return self.accuracy_b - self.accuracy_a

    @property
    def support_delta(self) -> int:
        return self.support_b - self.support_a


def class_delta_report(report_a: EvalReport, report_b: EvalReport) -> list[ClassDelta]:
    if report_a.task != report_b.task:
        raise AxisMismatchError(f"Cannot compare a {report_a.task} report with a {report_b.task} report")
    return [
        ClassDelta(
            name,
            report_a.accuracy(name),
            report_b.accuracy(name),
            report_a.support(name),
            report_b.support(name),
        )
        for name in CLASS_NAMES
    ]
