import pytest

from classica.corpus.play import AuthorGender, Channel, PlayMetadata, VerseOrProse
from classica.sampling.balance import BalanceConfig, validate_balance
from classica.utils.errors import BalanceValidationError

CONFIG = BalanceConfig()


def century_samples(century, size=100, female_share=10, genre="roman", date=None):
    """20 samples: 10 theatre then 10 other, the first female_share of them by women."""
    samples = []
    for i in range(20):
        channel = Channel.THEATRE if i < 10 else Channel.OTHER
        gender = AuthorGender.FEMALE if i % 2 == 0 and i // 2 < female_share else AuthorGender.MALE
        metadata = PlayMetadata(
            id=f"c{century}-{i}",
            author=f"auteur{i}",
            genre="tragédie" if channel is Channel.THEATRE else genre,
            verse_or_prose=VerseOrProse.PROSE,
            century=century,
            date=date,
            channel=channel,
            author_gender=gender,
        )
        samples.append((metadata, size))
    return samples


def rules(report):
    return sorted({violation.rule for violation in report.violations})


def test_compliant_corpus():
    report = validate_balance(century_samples(16) + century_samples(18), CONFIG)
    assert report.ok
    assert report.channel_counts[18] == {"theatre": 10, "other": 10}
    assert report.gender_tokens[16]["male"] == report.gender_tokens[16]["female"] == 1000


def test_missing_sample_breaks_channel_split():
    report = validate_balance(century_samples(18)[:-1], CONFIG)
    assert rules(report) == ["channel_split"]
    assert report.violations[0].century == 18


def test_sample_size_tolerance():
    samples = century_samples(18)
    samples[3] = (samples[3][0], 60)
    samples[4] = (samples[4][0], 125)
    report = validate_balance(samples, CONFIG)
    assert rules(report) == ["sample_size"]
    assert [violation.sample_id for violation in report.violations] == ["c18-3"]


def test_gender_imbalance():
    report = validate_balance(century_samples(18, female_share=3), CONFIG)
    assert rules(report) == ["gender_tokens"]
    assert report.violations[0].tolerance == CONFIG.tau_gender


def test_in_domain_overlap():
    samples = century_samples(17)
    comedy = samples[0][0]
    samples[0] = (PlayMetadata(
        id=comedy.id, author="Molière", genre="comédie", verse_or_prose=VerseOrProse.VERSE,
        century=17, channel=Channel.THEATRE, author_gender=comedy.author_gender,
    ), 100)
    report = validate_balance(samples, CONFIG)
    assert rules(report) == ["in_domain_overlap"]

    excluded = BalanceConfig(excluded_authors=frozenset({"auteur2"}))
    report = validate_balance(century_samples(17), excluded)
    assert [violation.sample_id for violation in report.violations] == ["c17-2"]


def test_genre_distribution_is_optional():
    samples = century_samples(16, genre="roman") + century_samples(18, genre="lettres")
    assert validate_balance(samples, CONFIG).ok
    report = validate_balance(samples, BalanceConfig(tau_genre=0.2))
    assert rules(report) == ["genre_distribution"]


def test_sample_without_century_is_an_error():
    metadata = PlayMetadata(id="x", channel=Channel.OTHER, author_gender=AuthorGender.MALE)
    with pytest.raises(BalanceValidationError) as error:
        validate_balance([(metadata, 100)], CONFIG)
    assert error.value.sample_id == "x"


def test_century_derived_from_date():
    samples = century_samples(None, date=1750)
    report = validate_balance(samples, CONFIG)
    assert report.ok
    assert list(report.channel_counts) == [18]


def test_sample_without_author_gender_is_an_error():
    samples = century_samples(18)
    metadata = samples[5][0]
    samples[5] = (PlayMetadata(id=metadata.id, century=18, channel=metadata.channel), 100)
    with pytest.raises(BalanceValidationError) as error:
        validate_balance(samples, CONFIG)
    assert error.value.sample_id == "c18-5"


def test_unknown_author_gender_is_accepted():
    samples = century_samples(18)
    samples = [(PlayMetadata(id=metadata.id, century=18, channel=metadata.channel, author_gender=AuthorGender.UNKNOWN),
                size) for metadata, size in samples]
    report = validate_balance(samples, CONFIG)
    assert report.ok
    assert report.gender_tokens[18] == {"male": 0, "female": 0, "unknown": 2000}
