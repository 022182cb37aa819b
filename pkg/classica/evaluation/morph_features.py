from classica.annotate.annotated_token import Corpus
from classica.evaluation.accuracy import ClassScore, aligned_pairs
from classica.tagset.morph_bundle import FEATURE_FIELDS, FIELD_KEYS, MorphBundle


def morph_feature_report(gold: Corpus, pred: Corpus) -> dict[str, ClassScore]:
    """Accuracy per morph field, keyed MODE, TEMPS, PERS., NOMB., GENRE, CAS.

    Gold tokens without a bundle are skipped; a predicted unknown marker
    counts as a bundle with every field at none.
    """
    scores = {FIELD_KEYS[name]: ClassScore() for name in FEATURE_FIELDS}
    for gold_token, pred_token in aligned_pairs(gold, pred):
        if not isinstance(gold_token.morph, MorphBundle):
            continue
        predicted = pred_token.morph if isinstance(pred_token.morph, MorphBundle) else MorphBundle()
        for name in FEATURE_FIELDS:
            scores[FIELD_KEYS[name]].add(gold_token.morph.get(name) == predicted.get(name))
    return scores
