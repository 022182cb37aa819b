"""Lexicon-first lemmatizer with learned suffix rewrites.

Resolution order for a (form, POS) pair:
  1. a proper name found in the name list is its own lemma;
  2. lexicon analyses of the POS's category: a unique lemma wins, several
     are ranked by training frequency, then alphabetically;
  3. a (form, POS) pair seen in training returns its most frequent lemma;
  4. the longest learned suffix for the POS rewrites the form;
  5. otherwise the lowercased form (proper names keep their case).
"""
from collections import Counter, defaultdict
from pathlib import Path
from typing import Optional

from classica.annotate.annotated_token import Corpus
from classica.lexicon.lexicon import Lexicon
from classica.models.model_io import check_version, load_model_file, save_model_file
from classica.tagset.cattex import PROPER_NOUN
from classica.tagset.mappings import TagsetMappings, default_mappings
from classica.utils import classica_logger
from classica.utils.errors import ModelFormatError, NoMappingError, UnknownTagError

LEMMATIZER_VERSION = "classica-lemmatizer/1"

Rewrite = tuple[int, str]


def source_form(form: str, pos: Optional[str]) -> str:
    return form if pos == PROPER_NOUN else form.lower()


def extract_rewrite(source: str, lemma: str) -> Rewrite:
    """Shortest (strip, append) turning source into lemma after removing their common prefix."""
    prefix = 0
    limit = min(len(source), len(lemma))
    while prefix < limit and source[prefix] == lemma[prefix]:
        prefix += 1
    return len(source) - prefix, lemma[prefix:]


def apply_rewrite(source: str, rewrite: Rewrite) -> str:
    strip, append = rewrite
    return (source[:len(source) - strip] if strip else source) + append


def _best(counter: Counter):
    return min(counter.items(), key=lambda item: (-item[1], item[0]))[0]


class LemmatizerModel:
    def __init__(
        self,
        suffix_rules: dict[str, dict[str, Counter]],
        memory: dict[str, dict[str, Counter]],
        lemma_frequencies: Counter,
        suffix_max: int = 6,
        lexicon: Optional[Lexicon] = None,
        mappings: Optional[TagsetMappings] = None,
        case_fallback: bool = True,
    ):
        self.suffix_rules = suffix_rules
        self.memory = memory
        self.lemma_frequencies = lemma_frequencies
        self.suffix_max = suffix_max
        self.lexicon = lexicon
        self.mappings = mappings or default_mappings()
        self.case_fallback = case_fallback

    def with_lexicon(self, lexicon: Optional[Lexicon]) -> "LemmatizerModel":
        return LemmatizerModel(self.suffix_rules, self.memory, self.lemma_frequencies, self.suffix_max,
                               lexicon, self.mappings, self.case_fallback)

    def lemmatize(self, form: str, pos: Optional[str]) -> str:
        if pos == PROPER_NOUN and self.lexicon is not None and self.lexicon.has_name(form):
            return form

        lemma = self._from_lexicon(form, pos)
        if lemma is not None:
            return lemma

        seen = self.memory.get(pos or "", {}).get(form)
        if seen:
            return _best(seen)

        source = source_form(form, pos)
        rules = self.suffix_rules.get(pos or "", {})
        for length in range(min(self.suffix_max, len(source)), 0, -1):
            rewrites = rules.get(source[-length:])
            if rewrites:
                strip, append = _best(rewrites)
                # a rule learned on a longer form may not consume the whole source
                if strip < len(source) or append:
                    return apply_rewrite(source, (min(strip, len(source)), append))
        return source

    def _from_lexicon(self, form: str, pos: Optional[str]) -> Optional[str]:
        if self.lexicon is None or pos is None:
            return None
        try:
            category = self.mappings.category_for(pos)
        except (NoMappingError, UnknownTagError):
            return None
        lemmas = []
        for entry in self.lexicon.lookup(form, self.case_fallback):
            if entry.category == category and entry.lemma not in lemmas:
                lemmas.append(entry.lemma)
        if not lemmas:
            return None
        if len(lemmas) == 1:
            return lemmas[0]
        return min(lemmas, key=lambda lemma: (-self.lemma_frequencies.get(lemma, 0), lemma))

    def to_dict(self) -> dict:
        return {
            "version": LEMMATIZER_VERSION,
            "suffix_max": self.suffix_max,
            "suffix_rules": {
                pos: {suffix: [[strip, append, count] for (strip, append), count in sorted(rewrites.items())]
                      for suffix, rewrites in by_suffix.items()}
                for pos, by_suffix in self.suffix_rules.items()
            },
            "memory": {
                pos: {form: sorted([lemma, count] for lemma, count in lemmas.items()) for form, lemmas in forms.items()}
                for pos, forms in self.memory.items()
            },
            "lemma_frequencies": dict(self.lemma_frequencies),
        }

    @classmethod
    def from_dict(cls, payload: dict, source: str = "lemmatizer model") -> "LemmatizerModel":
        check_version(payload, LEMMATIZER_VERSION, source)
        try:
            suffix_rules = {
                pos: {suffix: Counter({(int(strip), append): int(count) for strip, append, count in rewrites})
                      for suffix, rewrites in by_suffix.items()}
                for pos, by_suffix in payload["suffix_rules"].items()
            }
            memory = {
                pos: {form: Counter({lemma: int(count) for lemma, count in lemmas}) for form, lemmas in forms.items()}
                for pos, forms in payload["memory"].items()
            }
            frequencies = Counter({lemma: int(count) for lemma, count in payload["lemma_frequencies"].items()})
            suffix_max = int(payload["suffix_max"])
        except (KeyError, TypeError, ValueError) as e:
            raise ModelFormatError(f"{source}: malformed lemmatizer model ({e})") from None
        return cls(suffix_rules, memory, frequencies, suffix_max)

    def save(self, path: str | Path) -> None:
        save_model_file(self.to_dict(), path)
        classica_logger.info(f"LEMMATIZER Saved model to {path}")

    @classmethod
    def load(cls, path: str | Path, lexicon: Optional[Lexicon] = None) -> "LemmatizerModel":
        return cls.from_dict(load_model_file(path, LEMMATIZER_VERSION), str(path)).with_lexicon(lexicon)


def train_lemmatizer(
    train: Corpus,
    lexicon: Optional[Lexicon] = None,
    suffix_max: int = 6,
    mappings: Optional[TagsetMappings] = None,
) -> LemmatizerModel:
    suffix_rules: dict[str, dict[str, Counter]] = defaultdict(lambda: defaultdict(Counter))
    memory: dict[str, dict[str, Counter]] = defaultdict(lambda: defaultdict(Counter))
    frequencies: Counter = Counter()
    pairs = 0
    for sentence in train:
        for token in sentence:
            if token.lemma is None or token.pos is None:
                continue
            pairs += 1
            frequencies[token.lemma] += 1
            memory[token.pos][token.form][token.lemma] += 1
            source = source_form(token.form, token.pos)
            rewrite = extract_rewrite(source, token.lemma)
            for length in range(max(rewrite[0], 1), min(suffix_max, len(source)) + 1):
                suffix_rules[token.pos][source[-length:]][rewrite] += 1

    classica_logger.info(
        f"LEMMATIZER Learned {sum(len(by_suffix) for by_suffix in suffix_rules.values())} suffix keys from {pairs} tokens"
    )
    return LemmatizerModel(
        {pos: dict(by_suffix) for pos, by_suffix in suffix_rules.items()},
        {pos: dict(forms) for pos, forms in memory.items()},
        frequencies,
        suffix_max,
        lexicon,
        mappings,
    )


def lemmatize(model: LemmatizerModel, form: str, pos: Optional[str]) -> str:
    return model.lemmatize(form, pos)
