"""Ordered lemma-normalization rules keyed on form, lemma and POS.

Rules are tried in file order and the first match rewrites the lemma;
a token is rewritten at most once per pass.
"""
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from classica.annotate.annotated_token import AnnotatedToken, Corpus
from classica.tagset.cattex import CATTEX_TAGS
from classica.utils import classica_logger, config_reader
from classica.utils.errors import RuleLoadError
from classica.utils.text_files import open_utf8

WILDCARD = "*"
RULE_COLUMNS = ("rule_id", "match_form", "match_lemma", "match_pos", "replacement_lemma")


@dataclass(frozen=True)
class LemmaRule:
    rule_id: str
    replacement_lemma: str
    match_form: Optional[frozenset[str]] = None
    match_lemma: Optional[frozenset[str]] = None
    match_pos: Optional[frozenset[str]] = None

    def __post_init__(self):
        if self.match_form is None and self.match_lemma is None and self.match_pos is None:
            raise ValueError(f"Rule {self.rule_id} matches every token")

    def matches(self, token: AnnotatedToken) -> bool:
        if self.match_form is not None and token.form not in self.match_form:
            return False
        if self.match_lemma is not None and token.lemma not in self.match_lemma:
            return False
        if self.match_pos is not None and token.pos not in self.match_pos:
            return False
        return True


def _parse_set(cell: str) -> Optional[frozenset[str]]:
    cell = cell.strip()
    if cell == WILDCARD:
        return None
    values = frozenset(value.strip() for value in cell.split(",") if value.strip())
    return values or None


def load_rules(path: str | Path) -> list[LemmaRule]:
    path = Path(path)
    rules: list[LemmaRule] = []
    seen_ids: set[str] = set()
    with open_utf8(path) as file:
        for line_number, raw_line in enumerate(file, start=1):
            line = raw_line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            columns = line.split("\t")
            if len(columns) != len(RULE_COLUMNS):
                raise RuleLoadError(f"{path}: expected {len(RULE_COLUMNS)} tab-separated columns, got {len(columns)}", line_number)
            rule_id, match_form, match_lemma, match_pos, replacement = columns
            rule_id, replacement = rule_id.strip(), replacement.strip()
            if not rule_id or not replacement:
                raise RuleLoadError(f"{path}: rule id and replacement lemma are mandatory", line_number)
            if rule_id in seen_ids:
                raise RuleLoadError(f"{path}: duplicate rule id {rule_id!r}", line_number)
            pos_set = _parse_set(match_pos)
            if pos_set is not None:
                unknown = sorted(pos_set - CATTEX_TAGS)
                if unknown:
                    raise RuleLoadError(f"{path}: unknown CATTEX tags {', '.join(unknown)} in rule {rule_id}", line_number)
            try:
                rule = LemmaRule(rule_id, replacement, _parse_set(match_form), _parse_set(match_lemma), pos_set)
            except ValueError as e:
                raise RuleLoadError(f"{path}: {e}", line_number) from None
            seen_ids.add(rule_id)
            rules.append(rule)
    classica_logger.debug(f"RULES Loaded {len(rules)} lemma rules from {path}")
    return rules


@lru_cache(maxsize=1)
def default_rules() -> tuple[LemmaRule, ...]:
    path = config_reader.resolve_path(config_reader.get("annotation", "lemma_rules", "configs/lemma_rules.tsv"))
    return tuple(load_rules(path))


def apply_lemma_rules(token: AnnotatedToken, rules: list[LemmaRule] | tuple[LemmaRule, ...]) -> AnnotatedToken:
    for rule in rules:
        if rule.matches(token):
            if token.lemma == rule.replacement_lemma:
                return token
            return token.with_lemma(rule.replacement_lemma)
    return token


def apply_rules_to_corpus(corpus: Corpus, rules: list[LemmaRule] | tuple[LemmaRule, ...]) -> tuple[Corpus, int]:
    """Apply the rules to every token; also returns how many lemmas changed."""
    changed = 0
    result: Corpus = []
    for sentence in corpus:
        rewritten = []
        for token in sentence:
            new_token = apply_lemma_rules(token, rules)
            if new_token is not token:
                changed += 1
            rewritten.append(new_token)
        result.append(rewritten)
    classica_logger.info(f"RULES Rewrote {changed} lemmas")
    return result, changed
