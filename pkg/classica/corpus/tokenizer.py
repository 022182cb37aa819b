"""Whitespace tokenizer with punctuation detachment, elision and clitic splits.

Tokens are never lowercased and never rewritten: concatenating the tokens
of a text gives back the text minus its whitespace.
"""
from dataclasses import dataclass
from functools import lru_cache

from classica.corpus.normalizer import NormalizationPolicy, normalize_chars
from classica.corpus.play import Play, Token
from classica.utils import config_reader

DEFAULT_PUNCTUATION = ".,;:!?«»\"()—…"
APOSTROPHE = "'"


@dataclass(frozen=True)
class Tokenizer:
    punctuation: frozenset[str] = frozenset(DEFAULT_PUNCTUATION)
    elision_exceptions: frozenset[str] = frozenset()
    hyphen_clitics: tuple[str, ...] = ()

    @classmethod
    def from_config(cls) -> "Tokenizer":
        section = config_reader.get_section("tokenization")
        clitics = [c.lower() for c in section.get("hyphen_clitics", [])]
        return cls(
            punctuation=frozenset(section.get("punctuation", DEFAULT_PUNCTUATION)),
            elision_exceptions=frozenset(e.lower() for e in section.get("elision_exceptions", [])),
            # longest first so "-t-il" is detached before "-il"
            hyphen_clitics=tuple(sorted(set(clitics), key=lambda c: (-len(c), c))),
        )

    def tokenize(self, text: str) -> list[str]:
        tokens: list[str] = []
        for chunk in text.split():
            word = []
            for ch in chunk:
                if ch in self.punctuation:
                    if word:
                        tokens.extend(self._split_word("".join(word)))
                        word = []
                    tokens.append(ch)
                else:
                    word.append(ch)
            if word:
                tokens.extend(self._split_word("".join(word)))
        return tokens

    def _split_word(self, word: str) -> list[str]:
        pieces = []
        rest = word
        while rest.lower() not in self.elision_exceptions:
            cut = rest.find(APOSTROPHE)
            if cut < 0 or cut == len(rest) - 1:
                break
            pieces.append(rest[:cut + 1])
            rest = rest[cut + 1:]
        pieces.append(rest)

        tokens = []
        for piece in pieces:
            tokens.extend(self._split_clitics(piece))
        return tokens

    def _split_clitics(self, piece: str) -> list[str]:
        trailing: list[str] = []
        base = piece
        detached = True
        while detached:
            detached = False
            lowered = base.lower()
            for clitic in self.hyphen_clitics:
                suffix = "-" + clitic
                if lowered.endswith(suffix) and len(base) > len(suffix):
                    trailing.insert(0, base[-len(suffix):])
                    base = base[:-len(suffix)]
                    detached = True
                    break
        return [base] + trailing


@lru_cache(maxsize=1)
def default_tokenizer() -> Tokenizer:
    return Tokenizer.from_config()


def tokenize(text: str, tokenizer: Tokenizer | None = None) -> list[str]:
    return (tokenizer or default_tokenizer()).tokenize(text)


def tokenize_play(
    play: Play,
    tokenizer: Tokenizer | None = None,
    policy: NormalizationPolicy | None = None,
) -> list[list[Token]]:
    """Normalize and tokenize every speech; one segment per speech, positions contiguous over the play."""
    segments: list[list[Token]] = []
    position = 0
    for speech in play.speeches:
        texts = tokenize(normalize_chars(speech, policy), tokenizer)
        if not texts:
            continue
        segment = []
        for text in texts:
            segment.append(Token(text, position, play.id))
            position += 1
        segments.append(segment)
    return segments
