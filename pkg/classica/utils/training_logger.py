import csv
import os
from datetime import datetime
from pathlib import Path

from classica.utils import classica_logger

HISTORY_HEADERS = ["restart", "seed", "epoch", "train_accuracy", "dev_accuracy", "elapsed_seconds", "stopped"]


class TrainingHistoryLogger:
    """CSV log of the per-epoch accuracy series of one training run."""

    def __init__(self, name: str, csv_path: str | Path, params: dict | None = None):
        self.name = name
        self.csv_path = Path(csv_path)
        os.makedirs(self.csv_path.parent or ".", exist_ok=True)

        self.current_csv = open(self.csv_path, 'w', newline='', encoding='utf-8')
        self.csv_writer = csv.writer(self.current_csv, lineterminator='\n')

        comment = f"#Training {self.name} started at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} "
        for key, value in sorted((params or {}).items()):
            comment += f"{key}:{value} "
        self.current_csv.write(comment.rstrip() + "\n")
        self.csv_writer.writerow(HISTORY_HEADERS)

    def write_row(self, row: dict) -> None:
        if self.current_csv is None:
            return
        self.csv_writer.writerow([row.get(header, "") for header in HISTORY_HEADERS])
        self.current_csv.flush()

    def close(self):
        if self.current_csv:
            self.current_csv.close()
            classica_logger.info(f"TRAINING History written to {self.csv_path}")
        self.current_csv = None
        self.csv_writer = None
