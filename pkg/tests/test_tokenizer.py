import random

import pytest

from classica.corpus.normalizer import NormalizationPolicy, default_policy, normalize_chars
from classica.corpus.play import Play
from classica.corpus.tokenizer import Tokenizer, tokenize, tokenize_play

from conftest import FIXTURES


def read_oracle():
    cases = []
    with open(FIXTURES / "tokenizer_oracle.tsv", encoding="utf-8") as fin:
        for line in fin:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            text, expected = line.split("\t")
            cases.append((text, expected.split(" ")))
    return cases


ORACLE = read_oracle()


@pytest.mark.parametrize("text, expected", ORACLE)
def test_tokenizer_oracle(text, expected):
    assert tokenize(text) == expected


@pytest.mark.parametrize("text, expected", ORACLE)
def test_tokens_rebuild_the_text(text, expected):
    tokens = tokenize(text)
    assert "".join(tokens) == "".join(text.split())
    assert all(token and not any(ch.isspace() for ch in token) for token in tokens)


def test_empty_and_blank_text():
    assert tokenize("") == []
    assert tokenize("  \t \n ") == []


def test_bare_tokenizer_keeps_hyphenated_words():
    tokenizer = Tokenizer(hyphen_clitics=())
    assert tokenizer.tokenize("Donnez-le-moi !") == ["Donnez-le-moi", "!"]
    assert tokenizer.tokenize("aujourd'hui") == ["aujourd'", "hui"]


def test_clitic_never_consumes_whole_word():
    tokenizer = Tokenizer(hyphen_clitics=("il",))
    assert tokenizer.tokenize("-il") == ["-il"]


@pytest.mark.parametrize("text, expected", [
    ("coeur", "cœur"),
    ("Coeur", "Cœur"),
    ("COEUR", "CŒUR"),
    ("mon coeur, ma soeur", "mon cœur, ma sœur"),
    ("l’amour", "l'amour"),
    ("été", "été"),
    ("coeurette", "coeurette"),
    ("Noël", "Noël"),
])
def test_normalize_chars(text, expected):
    assert normalize_chars(text) == expected


def test_normalize_is_idempotent():
    text = "Ah ! que de coeurs l’ont su, ma soeur."
    once = normalize_chars(text)
    assert normalize_chars(once) == once


def test_normalization_policy_switches():
    policy = NormalizationPolicy(compose_ligatures=False, unify_apostrophes=False)
    assert normalize_chars("l’oeil", policy) == "l’oeil"
    assert "œil" in default_policy().ligature_words


def test_tokenize_play_positions_are_contiguous():
    play = Play("p", ("Ah ! mon coeur", "", "Qu’est-ce ?"))
    segments = tokenize_play(play)
    assert [[token.text for token in segment] for segment in segments] == [
        ["Ah", "!", "mon", "cœur"],
        ["Qu'", "est", "-ce", "?"],
    ]
    positions = [token.position for segment in segments for token in segment]
    assert positions == list(range(8))
    assert all(token.play_id == "p" for segment in segments for token in segment)


FRAGMENTS = ["coeur", "Soeur", "l'", "l’", "qu'", "-il", "-t-il", "-moi", "aujourd'hui", "Donnez", "est", "ŒIL", "é", "e\u0301"]
CHARACTERS = "aeiouclmnrstOEQLé'’-.,;:!?«»\"()—…  \t\n"


def random_texts(count=400, seed=17):
    rng = random.Random(seed)
    for _ in range(count):
        pieces = []
        for _ in range(rng.randint(0, 12)):
            pieces.append(rng.choice(FRAGMENTS) if rng.random() < 0.4 else rng.choice(CHARACTERS))
        yield "".join(pieces)


def test_random_texts_rebuild_from_tokens():
    for text in random_texts():
        normalized = normalize_chars(text)
        tokens = tokenize(normalized)
        assert "".join(tokens) == "".join(normalized.split()), text
        assert all(token and not any(ch.isspace() for ch in token) for token in tokens), text
        assert all(token in normalized for token in tokens), text


def test_random_texts_normalize_idempotently():
    for text in random_texts():
        once = normalize_chars(text)
        assert normalize_chars(once) == once, text
