import re
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from classica.utils import classica_logger, config_reader
from classica.utils.text_files import open_utf8

RIGHT_SINGLE_QUOTE = "’"


def load_ligature_wordlist(path: str | Path) -> frozenset[str]:
    words = set()
    with open_utf8(path) as file:
        for line in file:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(unicodedata.normalize("NFC", word.lower()))
    return frozenset(words)


@dataclass(frozen=True)
class NormalizationPolicy:
    compose_ligatures: bool = True
    unify_apostrophes: bool = True
    unicode_form: str = "NFC"
    ligature_words: frozenset[str] = field(default_factory=frozenset)

    @classmethod
    def from_config(cls) -> "NormalizationPolicy":
        section = config_reader.get_section("normalization")
        words: frozenset[str] = frozenset()
        wordlist = config_reader.resolve_path(section.get("ligature_wordlist"))
        if wordlist is not None and wordlist.exists():
            words = load_ligature_wordlist(wordlist)
        elif section.get("compose_ligatures", True):
            classica_logger.warning(f"INGEST Ligature wordlist {wordlist} not found, ligature composition is a no-op")
        return cls(
            compose_ligatures=section.get("compose_ligatures", True),
            unify_apostrophes=section.get("unify_apostrophes", True),
            unicode_form=section.get("unicode_form", "NFC"),
            ligature_words=words,
        )


@lru_cache(maxsize=8)
def _ligature_pattern(words: frozenset[str]) -> tuple[re.Pattern | None, dict[str, str]]:
    decomposed = {}
    for word in words:
        plain = word.replace("œ", "oe")
        if plain != word:
            decomposed[plain] = word
    if not decomposed:
        return None, decomposed
    # longest first so "belle-soeur" wins over "soeur"
    alternatives = sorted(decomposed, key=lambda w: (-len(w), w))
    pattern = re.compile(r"(?<!\w)(" + "|".join(re.escape(w) for w in alternatives) + r")(?!\w)", re.IGNORECASE)
    return pattern, decomposed


def _compose_preserving_case(matched: str, target: str) -> str:
    out = []
    i = 0
    for ch in target:
        if ch == "œ":
            out.append("œ" if matched[i].islower() else "Œ")
            i += 2
        else:
            out.append(matched[i])
            i += 1
    return "".join(out)


def normalize_chars(text: str, policy: NormalizationPolicy | None = None) -> str:
    if policy is None:
        policy = default_policy()
    text = unicodedata.normalize(policy.unicode_form, text)
    if policy.unify_apostrophes:
        text = text.replace(RIGHT_SINGLE_QUOTE, "'")
    if policy.compose_ligatures and policy.ligature_words:
        pattern, decomposed = _ligature_pattern(policy.ligature_words)
        if pattern is not None:
            text = pattern.sub(lambda m: _compose_preserving_case(m.group(0), decomposed[m.group(0).lower()]), text)
    return text


@lru_cache(maxsize=1)
def default_policy() -> NormalizationPolicy:
    return NormalizationPolicy.from_config()
