from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional

from classica.annotate.annotated_token import AnnotatedToken, Corpus
from classica.evaluation.token_classes import Task, TokenClassIndex, iter_tokens, parse_task, predicted_target, target
from classica.utils.errors import AlignmentError

CLASS_NAMES = ("all", "unknown_tokens", "ambiguous_tokens", "unknown_targets")
CLASS_LABELS = {
    "all": "all",
    "unknown_tokens": "unknown tokens",
    "ambiguous_tokens": "ambiguous tokens",
    "unknown_targets": "unknown targets",
}
HUNDREDTH = Decimal("0.01")


def percentage(correct: int, support: int) -> Optional[Decimal]:
    """correct/support as a percentage rounded half-up to 2 decimals; None when support is 0."""
    if support == 0:
        return None
    return (Decimal(correct) * 100 / Decimal(support)).quantize(HUNDREDTH, rounding=ROUND_HALF_UP)


def format_percentage(value: Optional[Decimal]) -> str:
    return "NA" if value is None else f"{value:.2f}"


@dataclass
class ClassScore:
    correct: int = 0
    support: int = 0

    def add(self, is_correct: bool) -> None:
        self.support += 1
        if is_correct:
            self.correct += 1

    def merge(self, other: "ClassScore") -> None:
        self.correct += other.correct
        self.support += other.support

    @property
    def accuracy(self) -> Optional[Decimal]:
        return percentage(self.correct, self.support)


@dataclass
class EvalReport:
    task: Task
    scores: dict[str, ClassScore] = field(default_factory=lambda: {name: ClassScore() for name in CLASS_NAMES})

    def accuracy(self, class_name: str) -> Optional[Decimal]:
        return self.scores[class_name].accuracy

    def support(self, class_name: str) -> int:
        return self.scores[class_name].support

    @property
    def accuracy_all(self) -> Optional[Decimal]:
        return self.accuracy("all")

    @property
    def accuracy_unknown_tokens(self) -> Optional[Decimal]:
        return self.accuracy("unknown_tokens")

    @property
    def accuracy_ambiguous_tokens(self) -> Optional[Decimal]:
        return self.accuracy("ambiguous_tokens")

    @property
    def accuracy_unknown_targets(self) -> Optional[Decimal]:
        return self.accuracy("unknown_targets")


def aligned_pairs(gold: Corpus, pred: Corpus) -> list[tuple[AnnotatedToken, AnnotatedToken]]:
    gold_tokens = list(iter_tokens(gold))
    pred_tokens = list(iter_tokens(pred))
    for position in range(max(len(gold_tokens), len(pred_tokens))):
        gold_form = gold_tokens[position].form if position < len(gold_tokens) else None
        pred_form = pred_tokens[position].form if position < len(pred_tokens) else None
        if gold_form != pred_form:
            raise AlignmentError(position, gold_form, pred_form)
    return list(zip(gold_tokens, pred_tokens))


def accuracy_report(gold: Corpus, pred: Corpus, classes: TokenClassIndex, task: Task | str) -> EvalReport:
    task = parse_task(task) if isinstance(task, str) else task
    pairs = aligned_pairs(gold, pred)
    if len(classes) != len(pairs):
        raise AlignmentError(min(len(classes), len(pairs)), None, None)
    report = EvalReport(task)
    for (gold_token, pred_token), token_class in zip(pairs, classes.classes):
        expected = target(gold_token, task)
        predicted = predicted_target(pred_token, task)
        is_correct = expected == predicted
        report.scores["all"].add(is_correct)
        if token_class.unknown_form:
            report.scores["unknown_tokens"].add(is_correct)
        if token_class.ambiguous:
            report.scores["ambiguous_tokens"].add(is_correct)
        if token_class.unknown_target:
            report.scores["unknown_targets"].add(is_correct)
    return report

