"""Averaged-perceptron POS tagger over a first-order tag chain.

The previous-tag context of the feature set is carried by the transition
matrix, which keeps Viterbi decoding exact. Second-order tag context
(the tag two positions back) is not used; the word window of the emission
features reaches two tokens back instead.
"""
from pathlib import Path
from typing import TYPE_CHECKING, Optional

import numpy as np

from classica.annotate.annotated_token import Corpus
from classica.models.early_stopping import EarlyStopping
from classica.models.features import FeatureIndex, sentence_features
from classica.models.model_io import (
    check_version,
    dense_from_sparse,
    load_model_file,
    prune_rows,
    save_model_file,
    sparse_rows,
)
from classica.models.perceptron import AveragedWeights
from classica.models.training_config import TrainingConfig
from classica.models.viterbi import viterbi
from classica.utils import classica_logger
from classica.utils.errors import ModelFormatError, TrainingError
from classica.utils.time_keeper import TimeKeeper
from classica.utils.training_logger import TrainingHistoryLogger

if TYPE_CHECKING:
    from classica.models.morph_classifiers import MorphClassifiers

TAGGER_VERSION = "classica-tagger/1"
# history fields that depend on wall-clock time stay out of model files
VOLATILE_HISTORY_FIELDS = ("elapsed_seconds",)


class TaggerModel:
    def __init__(
        self,
        tags: list[str],
        feature_names: list[str],
        weights: np.ndarray,
        transitions: np.ndarray,
        config: dict | None = None,
        history: list[dict] | None = None,
        aux: Optional["MorphClassifiers"] = None,
    ):
        if weights.shape != (len(feature_names), len(tags)):
            raise ModelFormatError(f"Weight matrix shape {weights.shape} does not match {len(feature_names)} features x {len(tags)} tags")
        if transitions.shape != (len(tags) + 1, len(tags)):
            raise ModelFormatError(f"Transition matrix shape {transitions.shape} does not match {len(tags)} tags")
        self.tags = list(tags)
        self.features = FeatureIndex(feature_names)
        self.weights = weights
        self.transitions = transitions
        self.config = dict(config or {})
        self.history = list(history or [])
        self.aux = aux
        self.weights.setflags(write=False)
        self.transitions.setflags(write=False)

    def emissions(self, forms: list[str]) -> np.ndarray:
        rows = [self.features.lookup(features) for features in sentence_features(forms)]
        return _emissions(self.weights, rows, len(self.tags))

    def tag(self, forms: list[str]) -> list[str]:
        if not forms:
            return []
        return [self.tags[index] for index in viterbi(self.emissions(forms), self.transitions)]

    def to_dict(self) -> dict:
        return {
            "version": TAGGER_VERSION,
            "tags": self.tags,
            "config": self.config,
            "history": [
                {key: value for key, value in row.items() if key not in VOLATILE_HISTORY_FIELDS}
                for row in self.history
            ],
            "transitions": [[float(value) for value in row] for row in self.transitions],
            "weights": sparse_rows(self.weights, self.features.names),
            "aux": self.aux.to_dict() if self.aux is not None else None,
        }

    @classmethod
    def from_dict(cls, payload: dict, source: str = "tagger model") -> "TaggerModel":
        check_version(payload, TAGGER_VERSION, source)
        from classica.models.morph_classifiers import MorphClassifiers

        try:
            tags = list(payload["tags"])
            transitions = np.array(payload["transitions"], dtype=np.float64).reshape(len(tags) + 1, len(tags))
            names, weights = dense_from_sparse(payload["weights"], len(tags), source)
        except (KeyError, ValueError) as e:
            raise ModelFormatError(f"{source}: malformed tagger model ({e})") from None
        aux = MorphClassifiers.from_dict(payload["aux"], source) if payload.get("aux") else None
        return cls(tags, names, weights, transitions, payload.get("config"), payload.get("history"), aux)

    def save(self, path: str | Path) -> None:
        save_model_file(self.to_dict(), path)
        classica_logger.info(f"TAGGER Saved model with {len(self.features)} features and {len(self.tags)} tags to {path}")

    @classmethod
    def load(cls, path: str | Path) -> "TaggerModel":
        return cls.from_dict(load_model_file(path, TAGGER_VERSION), str(path))

    def with_aux(self, aux: Optional["MorphClassifiers"]) -> "TaggerModel":
        return TaggerModel(self.tags, self.features.names, self.weights.copy(), self.transitions.copy(),
                           self.config, self.history, aux)


def _emissions(weights: np.ndarray, rows: list[np.ndarray], n_tags: int) -> np.ndarray:
    emissions = np.zeros((len(rows), n_tags), dtype=np.float64)
    for i, feature_rows in enumerate(rows):
        if feature_rows.size:
            emissions[i] = weights[feature_rows].sum(axis=0)
    return emissions


def viterbi_decode(model: TaggerModel, sentence: list[str]) -> list[str]:
    return model.tag(sentence)


class _Prepared:
    """A corpus turned into feature rows and gold tag indices."""

    def __init__(self, rows: list[list[np.ndarray]], gold: list[list[int]]):
        self.rows = rows
        self.gold = gold
        self.token_count = sum(len(sentence) for sentence in gold)


def _sentence_forms_tags(corpus: Corpus, name: str) -> list[tuple[list[str], list[str]]]:
    sentences = []
    for number, sentence in enumerate(corpus):
        if not sentence:
            continue
        if any(token.pos is None for token in sentence):
            raise TrainingError(f"{name} sentence {number} has unannotated POS tags")
        sentences.append(([token.form for token in sentence], [token.pos for token in sentence]))
    return sentences


def _accuracy(weights: np.ndarray, transitions: np.ndarray, data: _Prepared) -> float:
    if data.token_count == 0:
        return 0.0
    n_tags = transitions.shape[1]
    correct = 0
    for rows, gold in zip(data.rows, data.gold):
        predicted = viterbi(_emissions(weights, rows, n_tags), transitions)
        correct += sum(1 for p, g in zip(predicted, gold) if p == g)
    return correct / data.token_count


class _Snapshot:
    def __init__(self, weights, transitions, train_accuracy, dev_accuracy, restart, epoch):
        self.weights = weights
        self.transitions = transitions
        self.train_accuracy = train_accuracy
        self.dev_accuracy = dev_accuracy
        self.restart = restart
        self.epoch = epoch


def _train_run(
    train: _Prepared,
    dev: Optional[_Prepared],
    n_features: int,
    n_tags: int,
    config: TrainingConfig,
    restart: int,
    history: list[dict],
    history_logger: Optional[TrainingHistoryLogger],
) -> _Snapshot:
    seed = config.seed + restart
    rng = np.random.default_rng(seed)
    emission_params = AveragedWeights((n_features, n_tags))
    transition_params = AveragedWeights((n_tags + 1, n_tags))
    stopper = EarlyStopping(config.threshold, config.patience) if dev is not None else None
    time_keeper = TimeKeeper(f"tagger restart {restart}")
    best: Optional[_Snapshot] = None

    for epoch in range(1, config.epochs + 1):
        time_keeper.cycle_start()
        mistakes = 0
        for sentence_index in rng.permutation(len(train.gold)):
            rows, gold = train.rows[sentence_index], train.gold[sentence_index]
            predicted = viterbi(_emissions(emission_params.weights, rows, n_tags), transition_params.weights)
            if predicted != gold:
                mistakes += 1
                previous_gold = previous_pred = n_tags
                for i, (g, p) in enumerate(zip(gold, predicted)):
                    if g != p:
                        emission_params.add((rows[i], g), 1.0)
                        emission_params.add((rows[i], p), -1.0)
                    if g != p or previous_gold != previous_pred:
                        transition_params.add((previous_gold, g), 1.0)
                        transition_params.add((previous_pred, p), -1.0)
                    previous_gold, previous_pred = g, p
            emission_params.tick()
            transition_params.tick()

        weights = emission_params.averaged()
        transitions = transition_params.averaged()
        train_accuracy = _accuracy(weights, transitions, train)
        dev_accuracy = _accuracy(weights, transitions, dev) if dev is not None else None
        stop = stopper.update(dev_accuracy) if stopper is not None else False
        row = {
            "restart": restart,
            "seed": seed,
            "epoch": epoch,
            "train_accuracy": round(train_accuracy, 6),
            "dev_accuracy": round(dev_accuracy, 6) if dev_accuracy is not None else None,
            "elapsed_seconds": round(time_keeper.cycle_end(), 3),
            "stopped": stop,
        }
        history.append(row)
        if history_logger is not None:
            history_logger.write_row(row)
        classica_logger.debug(f"TAGGER Update restart {restart} epoch {epoch}: {mistakes} sentences corrected")
        classica_logger.info(
            f"TAGGER Restart {restart} (seed {seed}) epoch {epoch}: train {train_accuracy:.4f}"
            + (f" dev {dev_accuracy:.4f}" if dev_accuracy is not None else "")
        )

        if stopper is None or stopper.improved_last():
            best = _Snapshot(weights, transitions, train_accuracy, dev_accuracy, restart, epoch)
        if stop:
            classica_logger.info(
                f"TAGGER Early stop after epoch {epoch}: {config.patience} evaluations below {config.threshold} improvement"
            )
            break

    assert best is not None
    return best


def train_tagger(
    train: Corpus,
    dev: Corpus | None = None,
    config: TrainingConfig | None = None,
    history_path: str | Path | None = None,
) -> TaggerModel:
    config = config or TrainingConfig.from_config()
    if config.epochs < 1 or config.restarts < 1:
        raise TrainingError("epochs and restarts must be at least 1")
    train_sentences = _sentence_forms_tags(train, "Training")
    if not train_sentences:
        raise TrainingError("Training corpus is empty")

    tags = sorted({tag for _, sentence_tags in train_sentences for tag in sentence_tags})
    tag_index = {tag: index for index, tag in enumerate(tags)}
    feature_index = FeatureIndex()
    train_data = _Prepared(
        [[feature_index.index_all(features) for features in sentence_features(forms)] for forms, _ in train_sentences],
        [[tag_index[tag] for tag in sentence_tags] for _, sentence_tags in train_sentences],
    )

    dev_data = None
    dev_sentences = _sentence_forms_tags(dev, "Dev") if dev else []
    if dev_sentences:
        unseen = sorted({tag for _, sentence_tags in dev_sentences for tag in sentence_tags} - set(tags))
        if unseen:
            classica_logger.warning(f"TAGGER Dev tags absent from training, always scored wrong: {', '.join(unseen)}")
        dev_data = _Prepared(
            [[feature_index.lookup(features) for features in sentence_features(forms)] for forms, _ in dev_sentences],
            [[tag_index.get(tag, -1) for tag in sentence_tags] for _, sentence_tags in dev_sentences],
        )

    classica_logger.info(
        f"TAGGER Training on {train_data.token_count} tokens, {len(tags)} tags, {len(feature_index)} features, "
        f"{config.restarts} restarts"
    )
    history: list[dict] = []
    history_logger = TrainingHistoryLogger("tagger", history_path, config.as_dict()) if history_path else None
    try:
        best: Optional[_Snapshot] = None
        for restart in range(config.restarts):
            snapshot = _train_run(train_data, dev_data, len(feature_index), len(tags), config, restart, history, history_logger)
            score = snapshot.dev_accuracy if dev_data is not None else snapshot.train_accuracy
            best_score = None if best is None else (best.dev_accuracy if dev_data is not None else best.train_accuracy)
            if best_score is None or score > best_score:
                best = snapshot
    finally:
        if history_logger is not None:
            history_logger.close()

    assert best is not None
    classica_logger.info(
        f"TAGGER Kept restart {best.restart} epoch {best.epoch}: train {best.train_accuracy:.4f}"
        + (f" dev {best.dev_accuracy:.4f}" if best.dev_accuracy is not None else "")
    )
    names, weights = prune_rows(best.weights, feature_index.names)
    model_config = config.as_dict()
    model_config.update({"selected_restart": best.restart, "selected_epoch": best.epoch})
    return TaggerModel(tags, names, weights, best.transitions.copy(), model_config, history)
