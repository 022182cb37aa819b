import itertools

import pytest

from classica.annotate.annotated_token import AnnotatedToken
from classica.annotate.projector import MorphProjector, project_morphology
from classica.lexicon.lexicon import Lexicon
from classica.tagset.morph_bundle import UNKNOWN_MORPH, MorphBundle, serialize_morph

from conftest import FIXTURES


def read_oracle():
    rows = []
    with open(FIXTURES / "projection_oracle.tsv", encoding="utf-8") as fin:
        for line in fin:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            form, lemma, pos, expected = line.split("\t")
            rows.append((form, None if lemma == "_" else lemma, None if pos == "_" else pos, expected))
    return rows


ORACLE = read_oracle()


@pytest.mark.parametrize("form, lemma, pos, expected", ORACLE)
def test_projection_oracle(toy_lexicon, form, lemma, pos, expected):
    projector = MorphProjector(toy_lexicon)
    assert serialize_morph(projector.project_morph(AnnotatedToken(form, lemma, pos))) == expected


def test_projection_over_a_corpus(toy_lexicon):
    rows = list(itertools.islice(itertools.cycle(ORACLE), 220))
    tokens = [AnnotatedToken(form, lemma, pos) for form, lemma, pos, _ in rows]
    projected = project_morphology(tokens, toy_lexicon)
    assert [serialize_morph(token.morph) for token in projected] == [expected for *_, expected in rows]
    # forms, lemmas and tags pass through untouched
    assert [(t.form, t.lemma, t.pos) for t in projected] == [(t.form, t.lemma, t.pos) for t in tokens]


def test_counters(toy_lexicon):
    projector = MorphProjector(toy_lexicon)
    projector.project([
        AnnotatedToken("chante", "chanter", "VERcjg"),
        AnnotatedToken("porte", "porte", "NOMcom"),
        AnnotatedToken("aime", "aimer", "VERcjg"),
        AnnotatedToken("zzz", "zzz", "NOMcom"),
        AnnotatedToken(",", ",", "PONfbl"),
        AnnotatedToken("Valère", "Valère", "NOMpro"),
        AnnotatedToken("Valère", "Valère", "NOMpro"),
        AnnotatedToken("du", "de+le", "PRE.DETdef"),
    ])
    assert projector.counters.as_dict() == {
        "unique": 1,
        "filtered": 1,
        "merged": 1,
        "unknown": 1,
        "special": 4,
        "missing_names": 2,
    }
    assert projector.counters.missing_name_forms == {"Valère"}


def test_missing_name_warns_once(toy_lexicon, capfd):
    projector = MorphProjector(toy_lexicon)
    projector.project([AnnotatedToken("Valère", "Valère", "NOMpro")] * 3)
    _, err = capfd.readouterr()
    assert err.count("Valère") == 1


def test_case_fallback_can_be_disabled(toy_lexicon):
    projector = MorphProjector(toy_lexicon, case_fallback=False)
    assert projector.project_morph(AnnotatedToken("Amour", "amour", "NOMcom")) is UNKNOWN_MORPH
    assert projector.project_morph(AnnotatedToken("amour", "amour", "NOMcom")) == MorphBundle(number="s", gender="m")


def test_contracted_article_without_lexicon():
    projector = MorphProjector(Lexicon())
    assert projector.project_morph(AnnotatedToken("au", "a+le", "PRE.DETdef")) == MorphBundle(number="s", gender="m")
    assert projector.project_morph(AnnotatedToken("aux", "a+le", "PRE.DETdef")) == MorphBundle(number="p")
    assert projector.project_morph(AnnotatedToken("dudit", None, "PRE.DETdef")) is UNKNOWN_MORPH
