"""Averaged perceptron weights.

Averaging uses the running-sum trick: every update of size d at step c
adds d to the weights and c*d to an accumulator, and the average over
all steps is weights - accumulator / c. Nothing is touched for features
that do not fire.
"""
import numpy as np


class AveragedWeights:
    def __init__(self, shape: tuple[int, ...]):
        self.weights = np.zeros(shape, dtype=np.float64)
        self._accumulated = np.zeros(shape, dtype=np.float64)
        self.step = 1

    def add(self, index, delta: float) -> None:
        np.add.at(self.weights, index, delta)
        np.add.at(self._accumulated, index, self.step * delta)

    def tick(self) -> None:
        self.step += 1

    def averaged(self) -> np.ndarray:
        return self.weights - self._accumulated / self.step


class MulticlassPerceptron:
    """One weight column per label over a fixed feature index."""

    def __init__(self, n_features: int, labels: list[str]):
        self.labels = list(labels)
        self.params = AveragedWeights((n_features, len(labels)))

    def scores(self, feature_rows: np.ndarray, weights: np.ndarray | None = None) -> np.ndarray:
        weights = self.params.weights if weights is None else weights
        if feature_rows.size == 0:
            return np.zeros(len(self.labels))
        return weights[feature_rows].sum(axis=0)

    def predict(self, feature_rows: np.ndarray, weights: np.ndarray | None = None) -> int:
        # argmax keeps the first maximum, i.e. the earliest label in order
        return int(np.argmax(self.scores(feature_rows, weights)))

    def update(self, feature_rows: np.ndarray, gold: int, guess: int) -> None:
        if gold != guess:
            self.params.add((feature_rows, gold), 1.0)
            self.params.add((feature_rows, guess), -1.0)
        self.params.tick()
