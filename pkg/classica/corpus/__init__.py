from classica.corpus.play import (
    AuthorGender,
    Channel,
    Play,
    PlayMetadata,
    Token,
    VerseOrProse,
    century_of,
    load_metadata,
)
from classica.corpus.normalizer import NormalizationPolicy, normalize_chars
from classica.corpus.tokenizer import Tokenizer, tokenize, tokenize_play
from classica.corpus.tei_parser import parse_play, parse_play_file
from classica.corpus.token_file import read_token_file, write_token_file
from classica.corpus.annotation_tsv import (
    HEADER,
    iter_sentences,
    parse_corpus,
    read_corpus,
    render_corpus,
    write_corpus,
)
