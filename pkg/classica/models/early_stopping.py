from typing import Optional


class EarlyStopping:
    """Stops once `patience` consecutive evaluations improve on the best by less than `threshold`.

    Scores are accuracies as fractions; the first evaluation always counts
    as an improvement.
    """

    def __init__(self, threshold: float = 0.001, patience: int = 6):
        self.threshold = threshold
        self.patience = patience
        self.best_score: Optional[float] = None
        self.best_index: Optional[int] = None
        self.bad_evaluations = 0
        self.evaluations = 0
        self.stopped = False

    def update(self, score: float) -> bool:
        """Record one evaluation; returns True when training should stop."""
        index = self.evaluations
        self.evaluations += 1
        if self.best_score is None or score - self.best_score >= self.threshold:
            self.best_score = score
            self.best_index = index
            self.bad_evaluations = 0
        else:
            self.bad_evaluations += 1
        self.stopped = self.bad_evaluations >= self.patience
        return self.stopped

    def improved_last(self) -> bool:
        return self.best_index == self.evaluations - 1
