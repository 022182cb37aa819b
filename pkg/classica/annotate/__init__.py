from classica.annotate.annotated_token import AnnotatedToken, Corpus, Sentence
from classica.annotate.projector import MorphProjector, ProjectionCounters, project_morphology
from classica.annotate.lemma_rules import (
    LemmaRule,
    apply_lemma_rules,
    apply_rules_to_corpus,
    default_rules,
    load_rules,
)
from classica.annotate.audit import CorpusAudit, audit_corpus
