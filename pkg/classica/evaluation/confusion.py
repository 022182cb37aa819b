from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

from classica.annotate.annotated_token import Corpus
from classica.evaluation.accuracy import aligned_pairs
from classica.evaluation.token_classes import Task, parse_task, predicted_target, target

MISSING_PREDICTION = "_"


@dataclass(frozen=True)
class ConfusionEntry:
    expected: str
    total_errors: int
    predictions: tuple[tuple[str, int], ...]


def confusion_matrix(gold: Corpus, pred: Corpus, task: Task | str, top_k: Optional[int] = None) -> list[ConfusionEntry]:
    """Errors grouped by expected value, most frequent first, ties alphabetical."""
    task = parse_task(task) if isinstance(task, str) else task
    errors: dict[str, Counter] = defaultdict(Counter)
    for gold_token, pred_token in aligned_pairs(gold, pred):
        expected = target(gold_token, task)
        predicted = predicted_target(pred_token, task)
        if predicted != expected:
            errors[expected][predicted if predicted is not None else MISSING_PREDICTION] += 1

    entries = [
        ConfusionEntry(
            expected,
            sum(counts.values()),
            tuple(sorted(counts.items(), key=lambda item: (-item[1], item[0]))),
        )
        for expected, counts in errors.items()
    ]
    entries.sort(key=lambda entry: (-entry.total_errors, entry.expected))
    if top_k is not None:
        entries = entries[:top_k]
    return entries
