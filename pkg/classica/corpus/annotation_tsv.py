"""The four-column annotation TSV shared by every subcommand.

    form<TAB>lemma<TAB>POS<TAB>morph
    le<TAB>le<TAB>DETdef<TAB>_

A blank line separates sentences, "_" in the lemma or POS column marks an
unannotated field, and the morph column holds a canonical bundle or
"unknown".
"""
import io
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from classica.annotate.annotated_token import AnnotatedToken, Corpus, Sentence
from classica.tagset.morph_bundle import parse_morph_field, serialize_morph
from classica.utils.errors import CorpusFormatError, MorphParseError, UnknownTagError
from classica.utils.text_files import open_utf8

HEADER = "form\tlemma\tPOS\tmorph"
PLACEHOLDER = "_"


def parse_record(line: str, line_number: int | None = None, path: str | None = None) -> AnnotatedToken:
    columns = line.split("\t")
    if len(columns) != 4:
        raise CorpusFormatError(f"Expected 4 tab-separated columns, got {len(columns)}", line_number, path)
    form, lemma, pos, morph = columns
    if not form:
        raise CorpusFormatError("Empty form column", line_number, path)
    try:
        return AnnotatedToken(
            form=form,
            lemma=None if lemma == PLACEHOLDER else lemma,
            pos=None if pos == PLACEHOLDER else pos,
            morph=parse_morph_field(morph),
        )
    except (UnknownTagError, MorphParseError) as e:
        raise CorpusFormatError(str(e), line_number, path) from None


def format_record(token: AnnotatedToken) -> str:
    fields = (
        token.form,
        PLACEHOLDER if token.lemma is None else token.lemma,
        PLACEHOLDER if token.pos is None else token.pos,
        serialize_morph(token.morph),
    )
    for value in fields:
        if not value or "\t" in value or "\n" in value:
            raise CorpusFormatError(f"Field {value!r} of token {token.form!r} cannot be written to TSV")
    return "\t".join(fields)


def iter_sentences(lines: Iterable[str], path: str | None = None) -> Iterator[Sentence]:
    """Stream sentences from TSV lines; the header is mandatory."""
    sentence: Sentence = []
    seen_header = False
    for line_number, raw_line in enumerate(lines, start=1):
        line = raw_line.rstrip("\n").rstrip("\r")
        if not seen_header:
            if line != HEADER:
                raise CorpusFormatError(f"Missing header {HEADER!r}", line_number, path)
            seen_header = True
            continue
        if not line:
            if sentence:
                yield sentence
                sentence = []
            continue
        sentence.append(parse_record(line, line_number, path))
    if not seen_header:
        raise CorpusFormatError(f"Missing header {HEADER!r}", 1, path)
    if sentence:
        yield sentence


def read_corpus(path: str | Path) -> Corpus:
    with open_utf8(path, newline='') as file:
        return list(iter_sentences(file, str(path)))


def parse_corpus(text: str) -> Corpus:
    return list(iter_sentences(io.StringIO(text, newline='')))


def write_sentences(sentences: Iterable[Sentence], out: TextIO) -> None:
    out.write(HEADER + "\n")
    first = True
    for sentence in sentences:
        if not sentence:
            continue
        if not first:
            out.write("\n")
        first = False
        for token in sentence:
            out.write(format_record(token) + "\n")


def render_corpus(corpus: Iterable[Sentence]) -> str:
    buffer = io.StringIO()
    write_sentences(corpus, buffer)
    return buffer.getvalue()


def write_corpus(corpus: Iterable[Sentence], path: str | Path) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        write_sentences(corpus, file)


def flatten(corpus: Corpus) -> list[AnnotatedToken]:
    return [token for sentence in corpus for token in sentence]
