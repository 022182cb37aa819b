import pytest

from classica.annotate.audit import audit_corpus
from classica.commands.pipeline import AnnotationPipeline
from classica.corpus.annotation_tsv import read_corpus, write_corpus
from classica.corpus.play import load_metadata
from classica.corpus.tei_parser import parse_play_file
from classica.corpus.tokenizer import tokenize_play
from classica.evaluation.accuracy import accuracy_report
from classica.evaluation.grouped import ALL_COLUMN, ALL_ROW, grouped_report
from classica.evaluation.token_classes import Task, classify_tokens
from classica.sampling.splitter import sample_play, three_tier_split
from classica.tagset.morph_bundle import is_unknown

from conftest import FIXTURES


@pytest.fixture(scope="module")
def pipeline(trained_tagger, trained_lemmatizer, toy_lexicon):
    return AnnotationPipeline(trained_tagger, trained_lemmatizer, toy_lexicon)


def test_play_to_annotated_sample(tmp_path, pipeline, trained_tagger):
    play = parse_play_file(FIXTURES / "les_facheux.xml")
    segments = tokenize_play(play)
    split = three_tier_split(sum(len(segment) for segment in segments), 10, 4, 4, play.id)
    test_tier = sample_play(segments, split)["test"]
    annotated = [pipeline.annotate_sentence([token.text for token in segment]) for segment in test_tier]

    assert [token.form for sentence in annotated for token in sentence] == ["!", "que", "de", "cœurs"]
    assert all(token.pos in trained_tagger.tags for sentence in annotated for token in sentence)
    assert all(token.lemma for sentence in annotated for token in sentence)

    path = tmp_path / f"{play.id}.test.tsv"
    write_corpus(annotated, path)
    assert read_corpus(path) == annotated
    audit = audit_corpus(annotated)
    assert audit.tokens == 4
    assert audit.unannotated_pos == 0
    assert audit.unannotated_lemma == 0


def test_pipeline_tags_like_the_tagger(synthetic_corpora, pipeline, trained_tagger):
    train, _, test = synthetic_corpora
    text = "\n".join(" ".join(token.form for token in sentence) for sentence in test)
    predicted = pipeline.annotate_text(text)
    assert [[token.form for token in sentence] for sentence in predicted] == [[token.form for token in sentence] for sentence in test]
    for sentence, annotated in zip(test, predicted):
        assert [token.pos for token in annotated] == trained_tagger.tag([token.form for token in sentence])

    report = accuracy_report(test, predicted, classify_tokens(train, test, Task.POS), Task.POS)
    assert report.support("all") == sum(len(sentence) for sentence in test)
    assert report.accuracy("all") >= 90


def test_lemma_rules_and_projection_run_after_tagging(pipeline):
    [sentence] = pipeline.annotate_text("il la portait .")
    assert sentence[0].lemma == "il"
    assert sentence[-1].lemma == "."
    assert not is_unknown(sentence[-1].morph)


def test_grouped_evaluation_of_predictions(synthetic_corpora, pipeline):
    _, _, test = synthetic_corpora
    text = "\n".join(" ".join(token.form for token in sentence) for sentence in test[:40])
    predicted = pipeline.annotate_text(text)
    metadata = load_metadata(FIXTURES / "metadata.csv")
    report = grouped_report([("les_facheux", test[:40], predicted)], metadata, Task.POS)
    assert report.columns == ["17"]
    assert report.rows == ["theatre"]
    overall = report.cell(ALL_ROW, ALL_COLUMN)
    assert overall.support == sum(len(sentence) for sentence in test[:40])
    assert report.cell("theatre", "17") == overall
