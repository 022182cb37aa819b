"""Deterministic JSON model files.

Keys are sorted and floats are written with repr precision, so a model
saved twice, or saved after a load, is byte-identical.
"""
import json
from pathlib import Path

import numpy as np

from classica.utils.errors import ModelFormatError
from classica.utils.text_files import open_utf8


def dumps_model(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def save_model_file(payload: dict, path: str | Path) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        file.write(dumps_model(payload))


def load_model_file(path: str | Path, expected_version: str) -> dict:
    try:
        with open_utf8(path) as file:
            payload = json.load(file)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"Model file {path} is not valid JSON: {e}") from None
    check_version(payload, expected_version, str(path))
    return payload


def check_version(payload: dict, expected_version: str, source: str = "model") -> None:
    if not isinstance(payload, dict):
        raise ModelFormatError(f"{source}: model payload must be a JSON object")
    version = payload.get("version")
    if version != expected_version:
        raise ModelFormatError(f"{source}: expected model version {expected_version!r}, found {version!r}")


def sparse_rows(weights: np.ndarray, names: list[str]) -> dict[str, list[list]]:
    """Non-zero cells as {feature: [[column, value], ...]}."""
    rows = {}
    for row_index, name in enumerate(names):
        row = weights[row_index]
        columns = np.flatnonzero(row)
        if columns.size:
            rows[name] = [[int(column), float(row[column])] for column in columns]
    return rows


def dense_from_sparse(rows: dict[str, list[list]], n_columns: int, source: str = "model") -> tuple[list[str], np.ndarray]:
    names = sorted(rows)
    weights = np.zeros((len(names), n_columns), dtype=np.float64)
    try:
        for row_index, name in enumerate(names):
            for column, value in rows[name]:
                weights[row_index, int(column)] = float(value)
    except (TypeError, ValueError, IndexError) as e:
        raise ModelFormatError(f"{source}: malformed weight rows ({e})") from None
    return names, weights


def prune_rows(weights: np.ndarray, names: list[str]) -> tuple[list[str], np.ndarray]:
    """Drop all-zero rows and order the rest by feature name."""
    keep = sorted((name, index) for index, name in enumerate(names) if np.any(weights[index]))
    if not keep:
        return [], np.zeros((0, weights.shape[1]), dtype=np.float64)
    return [name for name, _ in keep], weights[[index for _, index in keep]]
