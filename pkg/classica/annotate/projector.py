"""Lexicon-driven morphology projection onto POS-annotated tokens.

Special cases run first (punctuation, proper names, contracted articles);
every other token looks its form up in the lexicon, narrows ambiguous
hits with the POS category and merges what is left.
"""
from dataclasses import dataclass, field

from classica.annotate.annotated_token import AnnotatedToken
from classica.lexicon.lexicon import Lexicon, LexiconEntry
from classica.tagset.cattex import CONTRACTED_ARTICLE, is_proper_noun, is_punctuation
from classica.tagset.mappings import MorphalouCategory, TagsetMappings, default_mappings
from classica.tagset.morph_bundle import UNKNOWN_MORPH, Morph, MorphBundle, merge_bundles
from classica.utils import classica_logger
from classica.utils.errors import NoMappingError

# contracted article -> the determiner it contains
CONTRACTION_COMPONENTS: dict[str, str] = {
    "au": "le",
    "du": "le",
    "aux": "les",
    "des": "les",
    "ès": "les",
}
CONTRACTION_FALLBACK: dict[str, MorphBundle] = {
    "le": MorphBundle(number="s", gender="m"),
    "les": MorphBundle(number="p"),
}


@dataclass
class ProjectionCounters:
    unique: int = 0
    filtered: int = 0
    merged: int = 0
    unknown: int = 0
    special: int = 0
    missing_names: int = 0
    missing_name_forms: set[str] = field(default_factory=set)

    def as_dict(self) -> dict[str, int]:
        return {
            "unique": self.unique,
            "filtered": self.filtered,
            "merged": self.merged,
            "unknown": self.unknown,
            "special": self.special,
            "missing_names": self.missing_names,
        }


class MorphProjector:
    def __init__(self, lexicon: Lexicon, mappings: TagsetMappings | None = None, case_fallback: bool = True):
        self.lexicon = lexicon
        self.mappings = mappings or default_mappings()
        self.case_fallback = case_fallback
        self.counters = ProjectionCounters()

    def project(self, tokens: list[AnnotatedToken]) -> list[AnnotatedToken]:
        return [token.with_morph(self.project_morph(token)) for token in tokens]

    def project_morph(self, token: AnnotatedToken) -> Morph:
        pos = token.pos
        if pos is None:
            self.counters.unknown += 1
            return UNKNOWN_MORPH
        if is_punctuation(pos):
            self.counters.special += 1
            return MorphBundle()
        if is_proper_noun(pos):
            self.counters.special += 1
            name = token.lemma or token.form
            if not self.lexicon.has_name(name):
                self.counters.missing_names += 1
                if name not in self.counters.missing_name_forms:
                    self.counters.missing_name_forms.add(name)
                    classica_logger.warning(f"PROJECTOR Proper name {name!r} is missing from the name list")
            return MorphBundle()
        if pos == CONTRACTED_ARTICLE:
            self.counters.special += 1
            return self._contracted_article(token.form)

        entries = self.lexicon.lookup(token.form, self.case_fallback)
        if not entries:
            self.counters.unknown += 1
            return UNKNOWN_MORPH
        if len(entries) == 1:
            self.counters.unique += 1
            return entries[0].bundle(self.mappings)

        try:
            category = self.mappings.category_for(pos)
        except NoMappingError:
            self.counters.unknown += 1
            return UNKNOWN_MORPH
        survivors = [entry for entry in entries if entry.category == category]
        if not survivors:
            self.counters.unknown += 1
            return UNKNOWN_MORPH
        bundles = _distinct_bundles(survivors, self.mappings)
        if len(bundles) == 1:
            self.counters.filtered += 1
            return bundles[0]
        self.counters.merged += 1
        return merge_bundles(bundles)

    def _contracted_article(self, form: str) -> Morph:
        component = CONTRACTION_COMPONENTS.get(form.lower())
        if component is None:
            return UNKNOWN_MORPH
        determiners = [
            entry for entry in self.lexicon.lookup(component, True)
            if entry.category == MorphalouCategory.DETERMINANT
        ]
        if determiners:
            merged = merge_bundles(_distinct_bundles(determiners, self.mappings))
            if not merged.error and not merged.invariable and (merged.number or merged.gender):
                return MorphBundle(number=merged.number, gender=merged.gender)
        return CONTRACTION_FALLBACK[component]


def _distinct_bundles(entries: list[LexiconEntry], mappings: TagsetMappings) -> list[MorphBundle]:
    bundles: list[MorphBundle] = []
    for entry in entries:
        bundle = entry.bundle(mappings)
        if bundle not in bundles:
            bundles.append(bundle)
    return bundles


def project_morphology(
    tokens: list[AnnotatedToken],
    lexicon: Lexicon,
    mappings: TagsetMappings | None = None,
    case_fallback: bool = True,
) -> list[AnnotatedToken]:
    return MorphProjector(lexicon, mappings, case_fallback).project(tokens)
