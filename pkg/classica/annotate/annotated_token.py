from dataclasses import dataclass, field, replace
from typing import Optional

from classica.tagset.cattex import parse_pos
from classica.tagset.morph_bundle import Morph, MorphBundle


@dataclass(frozen=True)
class AnnotatedToken:
    """One corpus token. lemma and pos are None while unannotated."""
    form: str
    lemma: Optional[str] = None
    pos: Optional[str] = None
    morph: Morph = field(default_factory=MorphBundle)

    def __post_init__(self):
        if not self.form:
            raise ValueError("AnnotatedToken form must be non-empty")
        if self.pos is not None:
            parse_pos(self.pos)

    def with_lemma(self, lemma: Optional[str]) -> "AnnotatedToken":
        return replace(self, lemma=lemma)

    def with_pos(self, pos: Optional[str]) -> "AnnotatedToken":
        return replace(self, pos=pos)

    def with_morph(self, morph: Morph) -> "AnnotatedToken":
        return replace(self, morph=morph)


Sentence = list[AnnotatedToken]
Corpus = list[Sentence]
