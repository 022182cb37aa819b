"""One linear classifier per morphological field.

The classifiers share the tagger's observation templates and add the POS
of the token and of its neighbours (gold POS at training time, predicted
POS at tagging time). A field with a single observed value becomes a
constant classifier; a field with no supervision at all is left out and
always predicts none.
"""
from typing import Optional

import numpy as np

from classica.annotate.annotated_token import Corpus
from classica.models.features import BOS, EOS, FeatureIndex, token_features
from classica.models.model_io import check_version, dense_from_sparse, prune_rows, sparse_rows
from classica.models.perceptron import MulticlassPerceptron
from classica.models.training_config import TrainingConfig
from classica.tagset.morph_bundle import FEATURE_FIELDS, MorphBundle
from classica.utils import classica_logger
from classica.utils.errors import ModelFormatError

AUX_VERSION = "classica-morph-aux/1"
NONE_LABEL = "none"


def aux_features(forms: list[str], tags: list[str], i: int) -> list[str]:
    previous = tags[i - 1] if i > 0 else BOS
    before_previous = tags[i - 2] if i > 1 else BOS
    following = tags[i + 1] if i + 1 < len(tags) else EOS
    features = token_features(forms, i)
    features.extend([
        "pos=" + tags[i],
        "pos[-1]=" + previous,
        "pos[-2,-1]=" + before_previous + "|" + previous,
        "pos[+1]=" + following,
        "pos+suf2=" + tags[i] + "|" + forms[i].lower()[-2:],
    ])
    return features


class FieldClassifier:
    def __init__(
        self,
        field_name: str,
        labels: list[str],
        feature_names: list[str] | None = None,
        weights: np.ndarray | None = None,
        constant: Optional[str] = None,
    ):
        self.field_name = field_name
        self.labels = list(labels)
        self.constant = constant
        self.features = FeatureIndex(feature_names or [])
        self.weights = weights if weights is not None else np.zeros((0, len(self.labels)), dtype=np.float64)
        if self.weights.shape != (len(self.features), len(self.labels)):
            raise ModelFormatError(f"{field_name} classifier weights have shape {self.weights.shape}")

    def predict(self, features: list[str]) -> str:
        if self.constant is not None:
            return self.constant
        rows = self.features.lookup(features)
        if rows.size == 0:
            return self.labels[0]
        return self.labels[int(np.argmax(self.weights[rows].sum(axis=0)))]

    def to_dict(self) -> dict:
        return {
            "labels": self.labels,
            "constant": self.constant,
            "weights": sparse_rows(self.weights, self.features.names),
        }

    @classmethod
    def from_dict(cls, field_name: str, payload: dict, source: str) -> "FieldClassifier":
        labels = list(payload["labels"])
        names, weights = dense_from_sparse(payload.get("weights", {}), len(labels), source)
        return cls(field_name, labels, names, weights, payload.get("constant"))


class MorphClassifiers:
    def __init__(self, classifiers: dict[str, FieldClassifier]):
        self.classifiers = dict(classifiers)

    def fields(self) -> list[str]:
        return [name for name in FEATURE_FIELDS if name in self.classifiers]

    def predict(self, forms: list[str], tags: list[str]) -> list[MorphBundle]:
        bundles = []
        for i in range(len(forms)):
            features = aux_features(forms, tags, i)
            values = {}
            for field_name, classifier in self.classifiers.items():
                label = classifier.predict(features)
                if label != NONE_LABEL:
                    values[field_name] = label
            bundles.append(MorphBundle(**values))
        return bundles

    def to_dict(self) -> dict:
        return {
            "version": AUX_VERSION,
            "fields": {name: classifier.to_dict() for name, classifier in self.classifiers.items()},
        }

    @classmethod
    def from_dict(cls, payload: dict, source: str = "morph classifiers") -> "MorphClassifiers":
        check_version(payload, AUX_VERSION, source)
        try:
            classifiers = {
                name: FieldClassifier.from_dict(name, field_payload, source)
                for name, field_payload in payload["fields"].items()
            }
        except (KeyError, TypeError) as e:
            raise ModelFormatError(f"{source}: malformed morph classifiers ({e})") from None
        unknown = sorted(set(classifiers) - set(FEATURE_FIELDS))
        if unknown:
            raise ModelFormatError(f"{source}: unknown morph fields {', '.join(unknown)}")
        return cls(classifiers)


def _field_label(bundle: MorphBundle, field_name: str) -> str:
    value = bundle.get(field_name)
    return NONE_LABEL if value is None else value


def train_morph_aux(train: Corpus, config: TrainingConfig | None = None) -> MorphClassifiers:
    config = config or TrainingConfig.from_config()
    feature_index = FeatureIndex()
    examples: list[tuple[np.ndarray, MorphBundle]] = []
    for sentence in train:
        if not sentence or any(token.pos is None for token in sentence):
            continue
        forms = [token.form for token in sentence]
        tags = [token.pos for token in sentence]
        for i, token in enumerate(sentence):
            # unknown markers and ERROR bundles carry no usable supervision
            if not isinstance(token.morph, MorphBundle) or token.morph.error:
                continue
            examples.append((feature_index.index_all(aux_features(forms, tags, i)), token.morph))

    classifiers: dict[str, FieldClassifier] = {}
    if not examples:
        classica_logger.warning("MORPHAUX No token carries a morph bundle, no classifier trained")
        return MorphClassifiers(classifiers)

    for field_name in FEATURE_FIELDS:
        gold_labels = [_field_label(bundle, field_name) for _, bundle in examples]
        labels = sorted(set(gold_labels))
        if labels == [NONE_LABEL]:
            classica_logger.debug(f"MORPHAUX Field {field_name} never observed, classifier omitted")
            continue
        if len(labels) == 1:
            classica_logger.warning(f"MORPHAUX Field {field_name} only shows {labels[0]!r}, using a constant classifier")
            classifiers[field_name] = FieldClassifier(field_name, labels, constant=labels[0])
            continue
        classifiers[field_name] = _train_field(field_name, examples, gold_labels, labels, len(feature_index), feature_index.names, config)
    classica_logger.info(f"MORPHAUX Trained classifiers for {', '.join(classifiers) or 'no field'} on {len(examples)} tokens")
    return MorphClassifiers(classifiers)


def _train_field(
    field_name: str,
    examples: list[tuple[np.ndarray, MorphBundle]],
    gold_labels: list[str],
    labels: list[str],
    n_features: int,
    feature_names: list[str],
    config: TrainingConfig,
) -> FieldClassifier:
    label_index = {label: index for index, label in enumerate(labels)}
    gold = [label_index[label] for label in gold_labels]
    perceptron = MulticlassPerceptron(n_features, labels)
    rng = np.random.default_rng(config.seed)
    # no exit on a clean epoch: the average keeps moving after the raw weights settle
    for epoch in range(1, config.epochs + 1):
        mistakes = 0
        for example_index in rng.permutation(len(examples)):
            rows = examples[example_index][0]
            guess = perceptron.predict(rows)
            if guess != gold[example_index]:
                mistakes += 1
            perceptron.update(rows, gold[example_index], guess)
        classica_logger.debug(f"MORPHAUX Field {field_name} epoch {epoch}: {mistakes} mistakes")
    names, weights = prune_rows(perceptron.params.averaged(), feature_names)
    return FieldClassifier(field_name, labels, names, weights)
