from collections import Counter
from dataclasses import dataclass, field

from classica.annotate.annotated_token import Corpus
from classica.tagset.morph_bundle import MorphBundle, is_unknown


@dataclass
class CorpusAudit:
    sentences: int = 0
    tokens: int = 0
    unknown_morph: int = 0
    error_morph: int = 0
    invariable_morph: int = 0
    unannotated_lemma: int = 0
    unannotated_pos: int = 0
    pos_counts: Counter = field(default_factory=Counter)
    lemma_counts: Counter = field(default_factory=Counter)

    def as_dict(self, top_k: int = 20) -> dict:
        return {
            "sentences": self.sentences,
            "tokens": self.tokens,
            "unknown_morph": self.unknown_morph,
            "error_morph": self.error_morph,
            "invariable_morph": self.invariable_morph,
            "unannotated_lemma": self.unannotated_lemma,
            "unannotated_pos": self.unannotated_pos,
            "pos_counts": dict(sorted(self.pos_counts.items(), key=lambda item: (-item[1], item[0]))),
            "top_lemmas": [
                [lemma, count]
                for lemma, count in sorted(self.lemma_counts.items(), key=lambda item: (-item[1], item[0]))[:top_k]
            ],
        }


def audit_corpus(corpus: Corpus) -> CorpusAudit:
    audit = CorpusAudit()
    for sentence in corpus:
        if sentence:
            audit.sentences += 1
        for token in sentence:
            audit.tokens += 1
            if is_unknown(token.morph):
                audit.unknown_morph += 1
            elif isinstance(token.morph, MorphBundle):
                if token.morph.error:
                    audit.error_morph += 1
                elif token.morph.invariable:
                    audit.invariable_morph += 1
            if token.lemma is None:
                audit.unannotated_lemma += 1
            else:
                audit.lemma_counts[token.lemma] += 1
            if token.pos is None:
                audit.unannotated_pos += 1
            else:
                audit.pos_counts[token.pos] += 1
    return audit
