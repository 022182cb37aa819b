import pytest

from classica.annotate.annotated_token import AnnotatedToken
from classica.models.morph_classifiers import MorphClassifiers, aux_features, train_morph_aux
from classica.models.tagger import TaggerModel
from classica.models.training_config import TrainingConfig
from classica.tagset.morph_bundle import UNKNOWN_MORPH, MorphBundle
from classica.utils.errors import ModelFormatError

AUX_CONFIG = TrainingConfig(seed=5, epochs=5)


@pytest.fixture(scope="module")
def aux(synthetic_corpora):
    train, _, _ = synthetic_corpora
    return train_morph_aux(train, AUX_CONFIG)


def test_fields_with_supervision(aux):
    # the synthetic corpus never marks case
    assert aux.fields() == ["mode", "tense", "person", "number", "gender"]


def test_field_accuracy_on_held_out(aux, synthetic_corpora):
    _, _, test = synthetic_corpora
    correct = total = 0
    for sentence in test:
        forms = [token.form for token in sentence]
        tags = [token.pos for token in sentence]
        for predicted, token in zip(aux.predict(forms, tags), sentence):
            for field_name in ("number", "gender"):
                correct += predicted.get(field_name) == token.morph.get(field_name)
                total += 1
    assert correct / total >= 0.9


def test_predicts_plural_verb(aux):
    [_, verb, _] = aux.predict(["ils", "chantaient", "."], ["PROper", "VERcjg", "PONfrt"])
    assert verb.number == "p"
    assert verb.mode == "ind"


def test_one_bundle_per_token(aux):
    assert aux.predict([], []) == []
    assert len(aux.predict(["la", "porte"], ["DETdef", "NOMcom"])) == 2


def test_constant_and_missing_fields():
    train = [[
        AnnotatedToken("chantait", "chanter", "VERcjg", MorphBundle(mode="ind", number="s")),
        AnnotatedToken("chantaient", "chanter", "VERcjg", MorphBundle(mode="ind", number="p")),
        AnnotatedToken("zzz", "zzz", "NOMcom", UNKNOWN_MORPH),
        AnnotatedToken("orgueil", "orgueil", "NOMcom", MorphBundle.error_bundle()),
    ]]
    aux = train_morph_aux(train, AUX_CONFIG)
    assert aux.fields() == ["mode", "number"]
    assert aux.classifiers["mode"].constant == "ind"
    [bundle] = aux.predict(["inconnu"], ["NOMcom"])
    assert bundle.mode == "ind"


def test_no_supervision_gives_empty_classifiers():
    aux = train_morph_aux([[AnnotatedToken("zzz", "zzz", "NOMcom", UNKNOWN_MORPH)]], AUX_CONFIG)
    assert aux.fields() == []
    assert aux.predict(["zzz"], ["NOMcom"]) == [MorphBundle()]


def test_features_include_pos_context():
    features = aux_features(["il", "la", "porte"], ["PROper", "PROper", "VERcjg"], 1)
    assert "pos=PROper" in features
    assert "pos[-1]=PROper" in features
    assert "pos[+1]=VERcjg" in features
    assert "w.lower=la" in features


def test_aux_travels_with_tagger(tmp_path, trained_tagger, aux):
    path = tmp_path / "tagger.json"
    trained_tagger.with_aux(aux).save(path)
    reloaded = TaggerModel.load(path)
    assert reloaded.aux is not None
    assert reloaded.aux.fields() == aux.fields()
    forms, tags = ["ils", "chantaient", "."], ["PROper", "VERcjg", "PONfrt"]
    assert reloaded.aux.predict(forms, tags) == aux.predict(forms, tags)


def test_unknown_field_in_payload():
    with pytest.raises(ModelFormatError):
        MorphClassifiers.from_dict({"version": "classica-morph-aux/1", "fields": {"voice": {"labels": ["a"]}}})


def test_person_separated_by_suffix():
    first = ["chantais", "dansais", "parlais", "portais", "aimais", "tombais"]
    third = ["chantait", "dansait", "parlait", "portait", "aimait", "tombait"]
    train = [[AnnotatedToken(form, form, "VERcjg", MorphBundle(person=person))]
             for forms, person in ((first, "1"), (third, "3")) for form in forms]
    aux = train_morph_aux(train, TrainingConfig(seed=9, epochs=20))
    assert aux.fields() == ["person"]
    for sentence in train:
        [token] = sentence
        [bundle] = aux.predict([token.form], [token.pos])
        assert bundle.person == token.morph.person
    [held_out] = aux.predict(["jouait"], ["VERcjg"])
    assert held_out.person == "3"
