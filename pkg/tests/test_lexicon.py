import pytest

from classica.lexicon.lexicon import Lexicon, LexiconEntry, load_lexicon, load_name_list, lookup, save_lexicon
from classica.tagset.mappings import MorphalouCategory
from classica.tagset.morph_bundle import MorphBundle, serialize_morph
from classica.utils.errors import LexiconLoadError

from conftest import FIXTURES


def test_toy_lexicon_size(toy_lexicon):
    assert len(toy_lexicon) == 50
    assert toy_lexicon.name_list == frozenset({"Éraste", "Orphise", "Paris"})


def test_lookup_keeps_file_order(toy_lexicon):
    entries = lookup(toy_lexicon, "ferme")
    assert [entry.category for entry in entries] == [
        MorphalouCategory.NOM_COMMUN,
        MorphalouCategory.VERBE,
        MorphalouCategory.ADJECTIF_QUALIFICATIF,
        MorphalouCategory.ADJECTIF_QUALIFICATIF,
    ]


def test_lookup_case_fallback(toy_lexicon):
    assert [entry.lemma for entry in toy_lexicon.lookup("Amour")] == ["amour"]
    assert toy_lexicon.lookup("Amour", fallback_lowercase=False) == []
    assert toy_lexicon.lookup("zzz") == []


def test_case_fallback_only_reaches_lowercase_rows():
    lexicon = Lexicon([LexiconEntry("Paris", "Paris", MorphalouCategory.NOM_COMMUN)])
    assert lexicon.lookup("PARIS") == []
    assert len(lexicon.lookup("Paris")) == 1


def test_identical_rows_are_kept_once():
    entry = LexiconEntry("aime", "aimer", MorphalouCategory.VERBE, ("indicative", "present"))
    lexicon = Lexicon([entry, entry])
    assert len(lexicon) == 1
    assert lexicon.lookup("aime") == [entry]


def test_entry_bundle(toy_lexicon):
    [chante] = toy_lexicon.lookup("chante")
    assert serialize_morph(chante.bundle()) == "MODE=ind|TEMPS=pst|PERS.=3|NOMB.=s"
    [orgueil] = toy_lexicon.lookup("orgueil")
    assert orgueil.bundle() == MorphBundle.error_bundle()


def test_names(toy_lexicon):
    assert toy_lexicon.has_name("Orphise")
    assert not toy_lexicon.has_name("Valère")
    assert load_name_list(FIXTURES / "names.txt") == toy_lexicon.name_list


def test_save_then_load(tmp_path, toy_lexicon):
    path = tmp_path / "lexicon.tsv"
    save_lexicon(toy_lexicon, path)
    assert load_lexicon(path).entries == toy_lexicon.entries


@pytest.mark.parametrize("row", [
    "chante\tchanter\tVerbe",
    "\tchanter\tVerbe\tinfinitive",
    "chante\tchanter\tVerb\tinfinitive",
    "chante\tchanter\tVerbe\tindicative;gerund",
])
def test_bad_rows_are_rejected(tmp_path, row):
    path = tmp_path / "lexicon.tsv"
    path.write_text("# header\nchanter\tchanter\tVerbe\tinfinitive\n" + row + "\n", encoding="utf-8")
    with pytest.raises(LexiconLoadError) as error:
        load_lexicon(path)
    assert error.value.line == 3
