"""Text-to-TSV annotation shared by the `tag` command and the HTTP service."""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from classica.annotate.annotated_token import AnnotatedToken, Corpus, Sentence
from classica.annotate.lemma_rules import LemmaRule, apply_lemma_rules, default_rules, load_rules
from classica.annotate.projector import MorphProjector
from classica.corpus.annotation_tsv import render_corpus
from classica.corpus.normalizer import NormalizationPolicy, normalize_chars
from classica.corpus.tokenizer import Tokenizer, tokenize
from classica.lexicon.lexicon import Lexicon, load_lexicon, load_name_list
from classica.models.lemmatizer import LemmatizerModel
from classica.models.tagger import TaggerModel
from classica.tagset.morph_bundle import is_unknown
from classica.utils import classica_logger, config_reader
from classica.utils.errors import UsageError


@dataclass(frozen=True)
class ModelPaths:
    tagger: Path
    lemmatizer: Path
    lexicon: Optional[Path] = None
    names: Optional[Path] = None
    rules: Optional[Path] = None

    @classmethod
    def resolve(
        cls,
        models_dir: str | Path | None = None,
        tagger: str | Path | None = None,
        lemmatizer: str | Path | None = None,
        lexicon: str | Path | None = None,
        names: str | Path | None = None,
        rules: str | Path | None = None,
    ) -> "ModelPaths":
        """Explicit paths win, then the models directory (flag, then CLASSICA_MODELS)."""
        directory = Path(models_dir) if models_dir else config_reader.models_dir()
        section = config_reader.get_section("models")

        def pick(explicit, key: str, default_name: str, required: bool) -> Optional[Path]:
            if explicit:
                return Path(explicit)
            if directory is not None:
                candidate = directory / section.get(key, default_name)
                if candidate.exists() or required:
                    return candidate
            if required:
                raise UsageError(f"No {key.replace('_file', '')} model given: use the flag, --models-dir or CLASSICA_MODELS")
            return None

        return cls(
            tagger=pick(tagger, "tagger_file", "tagger.json", True),
            lemmatizer=pick(lemmatizer, "lemmatizer_file", "lemmatizer.json", True),
            lexicon=pick(lexicon, "lexicon_file", "lexicon.tsv", False),
            names=pick(names, "names_file", "names.txt", False),
            rules=pick(rules, "rules_file", "lemma_rules.tsv", False),
        )


class AnnotationPipeline:
    """normalize -> tokenize -> tag -> lemmatize -> lemma rules -> project morphology -> aux fill."""

    def __init__(
        self,
        tagger: TaggerModel,
        lemmatizer: LemmatizerModel,
        lexicon: Optional[Lexicon] = None,
        rules: Optional[tuple[LemmaRule, ...]] = None,
        tokenizer: Optional[Tokenizer] = None,
        policy: Optional[NormalizationPolicy] = None,
        case_fallback: Optional[bool] = None,
    ):
        self.tagger = tagger
        self.lexicon = lexicon if lexicon is not None else Lexicon()
        self.lemmatizer = lemmatizer.with_lexicon(self.lexicon)
        self.rules = tuple(rules) if rules is not None else default_rules()
        self.tokenizer = tokenizer
        self.policy = policy
        self.case_fallback = case_fallback if case_fallback is not None else config_reader.get("annotation", "case_fallback", True)

    @classmethod
    def from_paths(cls, paths: ModelPaths) -> "AnnotationPipeline":
        tagger = TaggerModel.load(paths.tagger)
        lemmatizer = LemmatizerModel.load(paths.lemmatizer)
        lexicon = None
        if paths.lexicon is not None:
            lexicon = load_lexicon(paths.lexicon, names_path=paths.names)
        elif paths.names is not None:
            lexicon = Lexicon([], load_name_list(paths.names))
        rules = tuple(load_rules(paths.rules)) if paths.rules is not None else None
        classica_logger.info(f"CLI Loaded tagger {paths.tagger} and lemmatizer {paths.lemmatizer}")
        return cls(tagger, lemmatizer, lexicon, rules)

    def annotate_sentence(self, forms: list[str], projector: Optional[MorphProjector] = None) -> Sentence:
        projector = projector or MorphProjector(self.lexicon, case_fallback=self.case_fallback)
        tags = self.tagger.tag(forms)
        tokens = []
        for form, pos in zip(forms, tags):
            token = AnnotatedToken(form, self.lemmatizer.lemmatize(form, pos), pos)
            tokens.append(apply_lemma_rules(token, self.rules))
        tokens = projector.project(tokens)

        if self.tagger.aux is not None and any(is_unknown(token.morph) for token in tokens):
            predicted = self.tagger.aux.predict(forms, tags)
            tokens = [
                token.with_morph(predicted[i]) if is_unknown(token.morph) else token
                for i, token in enumerate(tokens)
            ]
        return tokens

    def annotate_text(self, text: str) -> Corpus:
        """Each non-empty input line becomes one sentence."""
        projector = MorphProjector(self.lexicon, case_fallback=self.case_fallback)
        corpus: Corpus = []
        for line in text.splitlines():
            forms = tokenize(normalize_chars(line, self.policy), self.tokenizer)
            if forms:
                corpus.append(self.annotate_sentence(forms, projector))
        return corpus

    def render(self, text: str) -> str:
        return render_corpus(self.annotate_text(text))
