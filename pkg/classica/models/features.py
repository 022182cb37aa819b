"""Observation feature templates shared by the tagger and the morph classifiers."""
from typing import Iterable

import numpy as np

BOS = "<s>"
EOS = "</s>"


def token_features(forms: list[str], i: int) -> list[str]:
    form = forms[i]
    lower = form.lower()
    features = [
        "bias",
        "w=" + form,
        "w.lower=" + lower,
    ]
    for n in range(1, 5):
        if len(lower) >= n:
            features.append(f"suf{n}=" + lower[-n:])
    for n in range(1, 4):
        if len(lower) >= n:
            features.append(f"pre{n}=" + lower[:n])
    if any(ch.isdigit() for ch in form):
        features.append("has_digit")
    if "-" in form:
        features.append("has_hyphen")
    if form[:1].isupper():
        features.append("is_title")
    if form.isupper():
        features.append("is_upper")
    for offset in (-2, -1, 1, 2):
        j = i + offset
        if j < 0:
            neighbour = BOS
        elif j >= len(forms):
            neighbour = EOS
        else:
            neighbour = forms[j].lower()
        features.append(f"w[{offset:+d}]={neighbour}")
    return features


def sentence_features(forms: list[str]) -> list[list[str]]:
    return [token_features(forms, i) for i in range(len(forms))]


class FeatureIndex:
    """Feature string -> row number, frozen once training data is indexed."""

    def __init__(self, names: Iterable[str] = ()):
        self.names: list[str] = []
        self._index: dict[str, int] = {}
        for name in names:
            self.add(name)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def add(self, name: str) -> int:
        index = self._index.get(name)
        if index is None:
            index = len(self.names)
            self._index[name] = index
            self.names.append(name)
        return index

    def lookup(self, features: Iterable[str]) -> np.ndarray:
        """Row numbers of the known features; unseen ones are dropped."""
        return np.fromiter((self._index[f] for f in features if f in self._index), dtype=np.int64)

    def index_all(self, features: Iterable[str]) -> np.ndarray:
        return np.fromiter((self.add(f) for f in features), dtype=np.int64)
