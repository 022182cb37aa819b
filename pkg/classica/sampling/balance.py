"""Out-of-domain corpus balance checks.

Per century: 20 samples split 10 theatre / 10 other, male and female
token totals within a relative tolerance, every sample roughly 100 tokens,
optionally a comparable genre distribution, and no overlap with the
training domain (17th-century verse comedy and its authors).
"""
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from classica.corpus.play import AuthorGender, Channel, PlayMetadata, VerseOrProse
from classica.utils import classica_logger, config_reader
from classica.utils.errors import BalanceValidationError

COMEDY_MARKERS = ("comédie", "comedie", "comedy")


@dataclass(frozen=True)
class BalanceConfig:
    samples_per_century: int = 20
    samples_per_channel: int = 10
    target_sample_size: int = 100
    tau_gender: float = 0.25
    tau_size: float = 0.25
    tau_genre: Optional[float] = None
    in_domain_century: Optional[int] = 17
    excluded_authors: frozenset[str] = frozenset()

    @classmethod
    def from_config(cls, **overrides) -> "BalanceConfig":
        section = dict(config_reader.get_section("balance"))
        section.update({key: value for key, value in overrides.items() if value is not None})
        section["excluded_authors"] = frozenset(section.get("excluded_authors", []))
        known = {name for name in cls.__dataclass_fields__}
        return cls(**{key: value for key, value in section.items() if key in known})


@dataclass(frozen=True)
class Violation:
    rule: str
    century: int
    observed: str
    expected: str
    tolerance: Optional[float] = None
    sample_id: Optional[str] = None

    def describe(self) -> str:
        where = f" sample {self.sample_id}" if self.sample_id else ""
        tolerance = f" (tolerance {self.tolerance})" if self.tolerance is not None else ""
        return f"{self.rule} century {self.century}{where}: observed {self.observed}, expected {self.expected}{tolerance}"


@dataclass
class BalanceReport:
    channel_counts: dict[int, dict[str, int]] = field(default_factory=dict)
    gender_tokens: dict[int, dict[str, int]] = field(default_factory=dict)
    genre_tokens: dict[int, dict[str, int]] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_sample(index: int, metadata: PlayMetadata, token_count) -> str:
    sample_id = metadata.id or f"#{index}"
    if metadata.century is None:
        raise BalanceValidationError(f"Sample {sample_id} has no century", sample_id)
    if metadata.channel is None:
        raise BalanceValidationError(f"Sample {sample_id} has no channel", sample_id)
    if metadata.author_gender is None:
        raise BalanceValidationError(f"Sample {sample_id} has no author_gender", sample_id)
    if not isinstance(token_count, int) or token_count < 0:
        raise BalanceValidationError(f"Sample {sample_id} has an invalid token count {token_count!r}", sample_id)
    return sample_id


def _is_verse_comedy(metadata: PlayMetadata) -> bool:
    genre = metadata.genre.lower()
    return metadata.verse_or_prose == VerseOrProse.VERSE and any(marker in genre for marker in COMEDY_MARKERS)


def validate_balance(samples: list[tuple[PlayMetadata, int]], config: BalanceConfig | None = None) -> BalanceReport:
    config = config or BalanceConfig.from_config()
    report = BalanceReport()
    by_century: dict[int, list[tuple[str, PlayMetadata, int]]] = defaultdict(list)
    for index, (metadata, token_count) in enumerate(samples):
        sample_id = _check_sample(index, metadata, token_count)
        by_century[metadata.century].append((sample_id, metadata, token_count))

    low = config.target_sample_size * (1 - config.tau_size)
    high = config.target_sample_size * (1 + config.tau_size)
    pooled_genres: dict[str, int] = defaultdict(int)

    for century in sorted(by_century):
        members = by_century[century]
        channels = {channel.value: 0 for channel in Channel}
        genders = {gender.value: 0 for gender in AuthorGender}
        genres: dict[str, int] = defaultdict(int)
        for sample_id, metadata, token_count in members:
            channels[metadata.channel.value] += 1
            genders[metadata.author_gender.value] += token_count
            genres[metadata.genre or "unknown"] += token_count
            pooled_genres[metadata.genre or "unknown"] += token_count

            if not low <= token_count <= high:
                report.violations.append(Violation(
                    "sample_size", century, str(token_count),
                    f"{config.target_sample_size} tokens", config.tau_size, sample_id,
                ))
            if century == config.in_domain_century and metadata.channel == Channel.THEATRE:
                if _is_verse_comedy(metadata) or metadata.author in config.excluded_authors:
                    report.violations.append(Violation(
                        "in_domain_overlap", century, f"{metadata.genre} by {metadata.author}",
                        "no verse comedy nor training-corpus author", None, sample_id,
                    ))
        report.channel_counts[century] = channels
        report.gender_tokens[century] = genders
        report.genre_tokens[century] = dict(genres)

        theatre, other = channels[Channel.THEATRE.value], channels[Channel.OTHER.value]
        if (len(members) != config.samples_per_century
                or theatre != config.samples_per_channel or other != config.samples_per_channel):
            report.violations.append(Violation(
                "channel_split", century,
                f"{len(members)} samples ({theatre} theatre, {other} other)",
                f"{config.samples_per_century} samples ({config.samples_per_channel} theatre, "
                f"{config.samples_per_channel} other)",
            ))

        male, female = genders[AuthorGender.MALE.value], genders[AuthorGender.FEMALE.value]
        if male + female > 0:
            imbalance = abs(male - female) / (male + female)
            if imbalance > config.tau_gender:
                report.violations.append(Violation(
                    "gender_tokens", century, f"male {male} / female {female} (imbalance {imbalance:.2f})",
                    "equal male and female token totals", config.tau_gender,
                ))

    if config.tau_genre is not None:
        _check_genres(report, pooled_genres, config.tau_genre)

    for violation in report.violations:
        classica_logger.warning(f"SAMPLING Balance violation {violation.describe()}")
    return report


def _check_genres(report: BalanceReport, pooled: dict[str, int], tau_genre: float) -> None:
    pooled_total = sum(pooled.values())
    if pooled_total == 0:
        return
    for century, genres in report.genre_tokens.items():
        total = sum(genres.values())
        if total == 0:
            continue
        for genre in sorted(pooled):
            share = genres.get(genre, 0) / total
            expected = pooled[genre] / pooled_total
            if abs(share - expected) > tau_genre:
                report.violations.append(Violation(
                    "genre_distribution", century, f"{genre} share {share:.2f}",
                    f"pooled share {expected:.2f}", tau_genre,
                ))
