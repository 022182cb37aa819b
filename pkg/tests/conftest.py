import random
from pathlib import Path

import pytest

from classica.annotate.annotated_token import AnnotatedToken, Corpus
from classica.lexicon.lexicon import load_lexicon
from classica.models.lemmatizer import train_lemmatizer
from classica.models.tagger import train_tagger
from classica.models.training_config import TrainingConfig
from classica.tagset.morph_bundle import MorphBundle

FIXTURES = Path(__file__).parent / "fixtures"

SYLLABLES = ["ba", "ca", "da", "fa", "ga", "la", "ma", "na", "pa", "ra",
             "sa", "ta", "vi", "ro", "lu", "mi", "so", "te", "po", "de"]

SUBJECTS = [("il", "il", MorphBundle(person="3", number="s", gender="m")),
            ("elle", "il", MorphBundle(person="3", number="s", gender="f")),
            ("je", "je", MorphBundle(person="1", number="s")),
            ("on", "on", MorphBundle(person="3", number="s"))]
OBJECTS = [("le", MorphBundle(person="3", number="s", gender="m")),
           ("la", MorphBundle(person="3", number="s", gender="f")),
           ("les", MorphBundle(person="3", number="p"))]
NAMES = ["Éraste", "Orphise", "Alcippe", "Damis", "Lisandre"]
PREPOSITIONS = ["à", "de", "dans", "pour", "sur"]
ADVERBS = ["bien", "mal", "toujours", "jamais", "ici"]
CONJUNCTIONS = ["et", "mais", "ou"]
STRONG_PUNCTUATION = [".", "!", "?"]
WEAK_PUNCTUATION = [",", ";"]
# forms shared by several parts of speech
AMBIGUOUS_NOUNS = [("porte", "porte", "f"), ("ferme", "ferme", "f"), ("garde", "garde", "f")]
AMBIGUOUS_VERBS = [("porte", "porter"), ("ferme", "fermer"), ("garde", "garder")]


class SyntheticGrammar:
    """Template grammar over twelve CATTEX tags with a seeded open vocabulary."""

    def __init__(self, vocabulary_seed: int = 7):
        rng = random.Random(vocabulary_seed)
        stems = set()
        while len(stems) < 400:
            stems.add("".join(rng.choice(SYLLABLES) for _ in range(rng.choice((2, 3)))))
        stems = sorted(stems)
        rng.shuffle(stems)
        self.noun_stems = stems[:160]
        self.verb_stems = stems[160:340]
        self.adjective_stems = stems[340:]

    def noun_phrase(self, rng: random.Random) -> list[AnnotatedToken]:
        plural = rng.random() < 0.3
        if rng.random() < 0.15:
            form, lemma, gender = rng.choice(AMBIGUOUS_NOUNS)
        else:
            stem = rng.choice(self.noun_stems)
            gender = "f" if len(stem) % 2 == 0 else "m"
            form = lemma = stem + ("ette" if gender == "f" else "age")
        number = "p" if plural else "s"
        if plural:
            determiner = AnnotatedToken("les", "le", "DETdef", MorphBundle(number="p"))
            form += "s"
        else:
            article = "la" if gender == "f" else "le"
            determiner = AnnotatedToken(article, "le", "DETdef", MorphBundle(number="s", gender=gender))
        tokens = [determiner, AnnotatedToken(form, lemma, "NOMcom", MorphBundle(number=number, gender=gender))]
        if rng.random() < 0.3:
            stem = rng.choice(self.adjective_stems)
            suffix = ("euse" if gender == "f" else "eux") + ("s" if plural and gender == "f" else "")
            tokens.append(AnnotatedToken(stem + suffix, stem + "eux", "ADJqua", MorphBundle(number=number, gender=gender)))
        return tokens

    def finite_verb(self, rng: random.Random, plural: bool = False, person: str = "3") -> AnnotatedToken:
        number = "p" if plural else "s"
        if not plural and rng.random() < 0.15:
            form, lemma = rng.choice(AMBIGUOUS_VERBS)
            return AnnotatedToken(form, lemma, "VERcjg", MorphBundle(mode="ind", tense="pst", person=person, number=number))
        stem = rng.choice(self.verb_stems)
        form = stem + ("aient" if plural else "ait")
        return AnnotatedToken(form, stem + "er", "VERcjg", MorphBundle(mode="ind", tense="ipf", person=person, number=number))

    def infinitive(self, rng: random.Random) -> AnnotatedToken:
        stem = rng.choice(self.verb_stems)
        return AnnotatedToken(stem + "er", stem + "er", "VERinf", MorphBundle())

    def sentence(self, rng: random.Random) -> list[AnnotatedToken]:
        choice = rng.random()
        if choice < 0.4:
            subject = self.noun_phrase(rng)
            plural = subject[0].form == "les"
            tokens = subject + [self.finite_verb(rng, plural)]
            tail = rng.random()
            if tail < 0.4:
                tokens += self.noun_phrase(rng)
            elif tail < 0.7:
                tokens.append(AnnotatedToken(rng.choice(PREPOSITIONS), None, "PRE", MorphBundle.invariable_bundle()))
                tokens += self.noun_phrase(rng)
            else:
                tokens.append(AnnotatedToken(rng.choice(ADVERBS), None, "ADVgen", MorphBundle.invariable_bundle()))
        elif choice < 0.75:
            form, lemma, bundle = rng.choice(SUBJECTS)
            tokens = [AnnotatedToken(form, lemma, "PROper", bundle)]
            if rng.random() < 0.6:
                obj, obj_bundle = rng.choice(OBJECTS)
                tokens.append(AnnotatedToken(obj, "il", "PROper", obj_bundle))
            tokens.append(self.finite_verb(rng, person=bundle.person))
            if rng.random() < 0.5:
                tokens.append(AnnotatedToken(rng.choice(ADVERBS), None, "ADVgen", MorphBundle.invariable_bundle()))
        else:
            name = rng.choice(NAMES)
            tokens = [AnnotatedToken(name, name, "NOMpro", MorphBundle()), self.finite_verb(rng), self.infinitive(rng)]
            if rng.random() < 0.5:
                tokens += self.noun_phrase(rng)
            form, lemma, bundle = rng.choice(SUBJECTS)
            tokens += [
                AnnotatedToken(rng.choice(WEAK_PUNCTUATION), None, "PONfbl", MorphBundle()),
                AnnotatedToken(rng.choice(CONJUNCTIONS), None, "CONcoo", MorphBundle.invariable_bundle()),
                AnnotatedToken(form, lemma, "PROper", bundle),
                self.finite_verb(rng, person=bundle.person),
            ]
        tokens.append(AnnotatedToken(rng.choice(STRONG_PUNCTUATION), None, "PONfrt", MorphBundle()))
        return [token if token.lemma is not None else token.with_lemma(token.form) for token in tokens]

    def corpus(self, token_count: int, seed: int) -> Corpus:
        rng = random.Random(seed)
        corpus: Corpus = []
        total = 0
        while total < token_count:
            sentence = self.sentence(rng)
            corpus.append(sentence)
            total += len(sentence)
        return corpus


def most_frequent_tag_baseline(train: Corpus, test: Corpus) -> float:
    counts: dict[str, dict[str, int]] = {}
    overall: dict[str, int] = {}
    for sentence in train:
        for token in sentence:
            counts.setdefault(token.form, {}).setdefault(token.pos, 0)
            counts[token.form][token.pos] += 1
            overall[token.pos] = overall.get(token.pos, 0) + 1
    fallback = min(overall.items(), key=lambda item: (-item[1], item[0]))[0]
    correct = total = 0
    for sentence in test:
        for token in sentence:
            by_tag = counts.get(token.form)
            guess = min(by_tag.items(), key=lambda item: (-item[1], item[0]))[0] if by_tag else fallback
            correct += guess == token.pos
            total += 1
    return correct / total


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def grammar():
    return SyntheticGrammar()


@pytest.fixture(scope="session")
def synthetic_corpora(grammar):
    """(train, dev, test) drawn from the same grammar with different seeds."""
    return grammar.corpus(5000, seed=1), grammar.corpus(600, seed=2), grammar.corpus(1000, seed=3)


@pytest.fixture(scope="session")
def quick_config():
    return TrainingConfig(seed=42, epochs=8, patience=6, threshold=0.001, restarts=1, suffix_max=6)


@pytest.fixture(scope="session")
def trained_tagger(synthetic_corpora, quick_config):
    train, dev, _ = synthetic_corpora
    return train_tagger(train, dev, quick_config)


@pytest.fixture(scope="session")
def toy_lexicon():
    return load_lexicon(FIXTURES / "toy_lexicon.tsv", names_path=FIXTURES / "names.txt")


@pytest.fixture(scope="session")
def trained_lemmatizer(synthetic_corpora):
    train, _, _ = synthetic_corpora
    return train_lemmatizer(train)


@pytest.fixture(scope="session")
def model_dir(tmp_path_factory, trained_tagger, trained_lemmatizer):
    """A models directory laid out the way CLASSICA_MODELS expects it."""
    directory = tmp_path_factory.mktemp("models")
    trained_tagger.save(directory / "tagger.json")
    trained_lemmatizer.save(directory / "lemmatizer.json")
    (directory / "lexicon.tsv").write_bytes((FIXTURES / "toy_lexicon.tsv").read_bytes())
    (directory / "names.txt").write_bytes((FIXTURES / "names.txt").read_bytes())
    return directory
