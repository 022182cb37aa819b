import pytest

from classica.corpus.play import AuthorGender, Channel, VerseOrProse, century_of, load_metadata
from classica.corpus.tei_parser import parse_play, parse_play_file
from classica.corpus.token_file import read_token_file, write_token_file
from classica.corpus.tokenizer import tokenize_play
from classica.utils.errors import CorpusFormatError, EmptyPlayError, PlayParseError

from conftest import FIXTURES

EXPECTED_SPEECHES = (
    "Sous quel astre, bon Dieu, faut-il que je sois né, Pour être de fâcheux toujours assassiné !",
    "Monsieur, voilà l’affaire.",
    "Ah ! que de coeurs",
)

TEI_TEMPLATE = """<?xml version="1.0" encoding="UTF-8"?>
<TEI xmlns="http://www.tei-c.org/ns/1.0"><text><body>{body}</body></text></TEI>
"""


@pytest.fixture(scope="module")
def facheux():
    return parse_play_file(FIXTURES / "les_facheux.xml")


def test_speeches_exclude_stage_directions_and_notes(facheux):
    assert facheux.id == "les_facheux"
    assert facheux.speeches == EXPECTED_SPEECHES


def test_header_metadata(facheux):
    assert facheux.metadata.title == "Les Fâcheux"
    assert facheux.metadata.author == "Molière"


def test_ingest_token_counts(facheux):
    segments = tokenize_play(facheux)
    assert [len(segment) for segment in segments] == [21, 6, 5]
    assert [token.text for token in segments[1]] == ["Monsieur", ",", "voilà", "l'", "affaire", "."]
    assert [token.text for token in segments[2]] == ["Ah", "!", "que", "de", "cœurs"]
    assert segments[2][-1].position == 31


def test_metadata_overrides_header():
    metadata = load_metadata(FIXTURES / "metadata.csv")
    play = parse_play_file(FIXTURES / "les_facheux.xml", metadata["les_facheux"])
    assert play.metadata.date == 1662
    assert play.metadata.channel is Channel.THEATRE


def test_verse_lines_do_not_run_together():
    body = "<sp><l>premier vers</l><l>second vers</l></sp>"
    play = parse_play(TEI_TEMPLATE.format(body=body), "p")
    assert play.speeches == ("premier vers second vers",)


def test_text_directly_inside_a_speech():
    play = parse_play("<TEI><sp>Bonjour.</sp></TEI>", "p")
    assert play.speeches == ("Bonjour.",)


def test_speech_text_around_excluded_children():
    body = "<sp><speaker>ÉRASTE</speaker>Holà ! <stage>(il frappe)</stage>Ouvrez.<note>var.</note></sp>"
    play = parse_play(TEI_TEMPLATE.format(body=body), "p")
    assert play.speeches == ("Holà ! Ouvrez.",)


def test_play_without_speech_is_rejected():
    body = "<sp><speaker>A</speaker><stage>Il sort.</stage></sp><p>Prose hors réplique.</p>"
    with pytest.raises(EmptyPlayError):
        parse_play(TEI_TEMPLATE.format(body=body), "p")


def test_malformed_markup_reports_position():
    with pytest.raises(PlayParseError) as error:
        parse_play("<TEI><text><sp><l>vers</sp></text></TEI>", "p")
    assert error.value.line == 1


def test_load_metadata():
    metadata = load_metadata(FIXTURES / "metadata.csv")
    assert sorted(metadata) == ["les_facheux", "lettres"]
    lettres = metadata["lettres"]
    assert lettres.century == 17
    assert lettres.verse_or_prose is VerseOrProse.PROSE
    assert lettres.channel is Channel.OTHER
    assert lettres.author_gender is AuthorGender.FEMALE
    assert metadata["les_facheux"].century == 17


@pytest.mark.parametrize("year, century", [(1600, 16), (1601, 17), (1662, 17), (1700, 17), (1701, 18)])
def test_century_of(year, century):
    assert century_of(year) == century


@pytest.mark.parametrize("content", [
    "author,title\nx,y\n",
    "id,author,title,date,genre,verse_or_prose,period,century,channel,author_gender\n"
    "a,b,c,mil,d,verse,e,,theatre,male\n",
    "id,author,title,date,genre,verse_or_prose,period,century,channel,author_gender\n"
    "a,b,c,1662,d,rimes,e,,theatre,male\n",
    "id,author,title,date,genre,verse_or_prose,period,century,channel,author_gender\n"
    "a,b,c,1662,d,verse,e,,theatre,male\n"
    "a,b,c,1663,d,verse,e,,theatre,male\n",
])
def test_bad_metadata_is_rejected(tmp_path, content):
    path = tmp_path / "metadata.csv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(CorpusFormatError):
        load_metadata(path)


def test_token_file_keeps_segments(tmp_path, facheux):
    segments = tokenize_play(facheux)
    path = tmp_path / "les_facheux.tokens.txt"
    write_token_file(segments, path)
    content = path.read_text(encoding="utf-8")
    assert content.count("\n\n") == 2
    assert content.endswith("cœurs\n")
    assert read_token_file(path) == segments


def test_token_file_rejects_whitespace(tmp_path):
    path = tmp_path / "bad.tokens.txt"
    path.write_text("un\ndeux trois\n", encoding="utf-8")
    with pytest.raises(CorpusFormatError) as error:
        read_token_file(path)
    assert error.value.line == 2


def test_empty_author_gender_stays_unset(tmp_path):
    path = tmp_path / "metadata.csv"
    path.write_text(
        "id,author,title,date,genre,verse_or_prose,period,century,channel,author_gender\n"
        "anonyme,,,1690,comédie,prose,,,theatre,\n"
        "inconnue,,,1690,comédie,prose,,,theatre,unknown\n",
        encoding="utf-8",
    )
    metadata = load_metadata(path)
    assert metadata["anonyme"].author_gender is None
    assert metadata["inconnue"].author_gender is AuthorGender.UNKNOWN
