"""Token classes of the evaluation tables.

A token is unknown when its form never occurs in training (case-sensitive),
ambiguous when its form occurs in training with two or more distinct
targets, and has an unknown target when its gold target never occurs in
training. Only the training corpus and the gold data are consulted.
"""
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from classica.annotate.annotated_token import AnnotatedToken, Corpus
from classica.tagset.morph_bundle import serialize_morph
from classica.utils.errors import TaskColumnError, UsageError


class Task(str, Enum):
    LEMMA = "lemma"
    POS = "pos"
    MORPH = "morph"

    def __str__(self) -> str:
        return self.value


def parse_task(name: str) -> Task:
    try:
        return Task(name.lower())
    except ValueError:
        raise UsageError(f"Unknown task {name!r}, expected lemma, pos or morph") from None


def target(token: AnnotatedToken, task: Task) -> str:
    if task == Task.LEMMA:
        value = token.lemma
    elif task == Task.POS:
        value = token.pos
    else:
        return serialize_morph(token.morph)
    if value is None:
        raise TaskColumnError(f"Token {token.form!r} has no {task.value} annotation")
    return value


def iter_tokens(corpus: Corpus):
    for sentence in corpus:
        yield from sentence


@dataclass(frozen=True)
class TokenClass:
    unknown_form: bool
    ambiguous: bool
    unknown_target: bool


@dataclass(frozen=True)
class TokenClassIndex:
    task: Task
    classes: tuple[TokenClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, position: int) -> TokenClass:
        return self.classes[position]


def _check_column(corpus: Corpus, task: Task, name: str) -> None:
    if task == Task.MORPH:
        return
    tokens = list(iter_tokens(corpus))
    if tokens and all((t.lemma if task == Task.LEMMA else t.pos) is None for t in tokens):
        raise TaskColumnError(f"The {name} corpus has no {task.value} column to evaluate")


def classify_tokens(train: Corpus, eval_gold: Corpus, task: Task | str) -> TokenClassIndex:
    task = parse_task(task) if isinstance(task, str) else task
    _check_column(train, task, "training")
    _check_column(eval_gold, task, "gold")

    targets_by_form: dict[str, set[str]] = defaultdict(set)
    train_targets: set[str] = set()
    for token in iter_tokens(train):
        value = target(token, task)
        targets_by_form[token.form].add(value)
        train_targets.add(value)

    classes = []
    for token in iter_tokens(eval_gold):
        seen = targets_by_form.get(token.form)
        classes.append(TokenClass(
            unknown_form=seen is None,
            ambiguous=seen is not None and len(seen) >= 2,
            unknown_target=target(token, task) not in train_targets,
        ))
    return TokenClassIndex(task, tuple(classes))


def predicted_target(token: AnnotatedToken, task: Task) -> str | None:
    """Like target, but an unannotated prediction yields None instead of raising."""
    if task == Task.LEMMA:
        return token.lemma
    if task == Task.POS:
        return token.pos
    return serialize_morph(token.morph)
