"""Positional three-tier sampling: first tokens for train, median window for dev, last tokens for test."""
from dataclasses import dataclass

from classica.corpus.play import Token
from classica.utils.errors import SplitError

TIERS = ("train", "dev", "test")


@dataclass(frozen=True)
class Split:
    train: range
    dev: range
    test: range
    play_id: str = ""

    def tiers(self) -> dict[str, range]:
        return {"train": self.train, "dev": self.dev, "test": self.test}


def _describe(name: str, tier: range) -> str:
    return f"{name} [{tier.start},{tier.stop})"


def three_tier_split(
    token_count: int,
    train_n: int = 2000,
    dev_n: int = 100,
    test_n: int = 100,
    play_id: str = "",
) -> Split:
    if min(train_n, dev_n, test_n) < 0:
        raise SplitError("Tier sizes must be non-negative")
    dev_start = (token_count - dev_n) // 2
    train = range(0, train_n)
    dev = range(dev_start, dev_start + dev_n)
    test = range(token_count - test_n, token_count)

    label = f"Play {play_id} " if play_id else ""
    if train.stop > token_count or test.start < 0 or dev.start < 0:
        raise SplitError(f"{label}has {token_count} tokens, fewer than the tiers need", (train, test))
    if train.stop > dev.start:
        raise SplitError(
            f"{label}too short for the three tiers: {_describe('dev', dev)} overlaps {_describe('train', train)}",
            (train, dev),
        )
    if dev.stop > test.start:
        raise SplitError(
            f"{label}too short for the three tiers: {_describe('dev', dev)} overlaps {_describe('test', test)}",
            (dev, test),
        )
    return Split(train, dev, test, play_id)


def sample_play(segments: list[list[Token]], split: Split) -> dict[str, list[list[Token]]]:
    """Cut a segmented token stream into the three tiers, keeping speech boundaries inside each tier."""
    samples: dict[str, list[list[Token]]] = {}
    for name, tier in split.tiers().items():
        tier_segments = []
        for segment in segments:
            kept = [token for token in segment if token.position in tier]
            if kept:
                tier_segments.append(kept)
        samples[name] = tier_segments
    return samples
