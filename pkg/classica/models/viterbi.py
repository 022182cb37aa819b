"""First-order Viterbi decoding.

transitions has one row per previous tag plus a final START row. Among
equal-scoring paths the decoder returns the one whose last tag has the
lowest index, then the lowest previous tag, and so on backwards.
"""
import numpy as np


def viterbi(emissions: np.ndarray, transitions: np.ndarray) -> list[int]:
    n, n_tags = emissions.shape if emissions.ndim == 2 else (0, 0)
    if n == 0:
        return []
    start = transitions[n_tags]
    between = transitions[:n_tags]

    delta = start + emissions[0]
    backpointers = np.zeros((n, n_tags), dtype=np.int64)
    for i in range(1, n):
        candidates = delta[:, None] + between
        backpointers[i] = np.argmax(candidates, axis=0)
        delta = candidates[backpointers[i], np.arange(n_tags)] + emissions[i]

    path = [int(np.argmax(delta))]
    for i in range(n - 1, 0, -1):
        path.append(int(backpointers[i, path[-1]]))
    path.reverse()
    return path


def sequence_score(emissions: np.ndarray, transitions: np.ndarray, path: list[int]) -> float:
    n_tags = transitions.shape[1]
    score = 0.0
    previous = n_tags
    for i, tag in enumerate(path):
        score += transitions[previous, tag] + emissions[i, tag]
        previous = tag
    return score
