"""Inflected-form lexicon in a four-column TSV stand-in for Morphalou.

    form<TAB>lemma<TAB>category<TAB>flexion;values;...

Rows keep file order per form; identical rows are kept once.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from classica.tagset.mappings import MorphalouCategory, TagsetMappings, bundle_from_flexions, default_mappings
from classica.tagset.morph_bundle import MorphBundle
from classica.utils import classica_logger
from classica.utils.errors import LexiconLoadError
from classica.utils.text_files import open_utf8


@dataclass(frozen=True)
class LexiconEntry:
    form: str
    lemma: str
    category: MorphalouCategory
    morph_source_values: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.form or not self.lemma:
            raise ValueError("Lexicon entries need a form and a lemma")

    def bundle(self, mappings: TagsetMappings | None = None) -> MorphBundle:
        return bundle_from_flexions(self.morph_source_values, mappings)


@dataclass
class Lexicon:
    entries: list[LexiconEntry] = field(default_factory=list)
    name_list: frozenset[str] = frozenset()

    def __post_init__(self):
        self._by_form: dict[str, list[LexiconEntry]] = defaultdict(list)
        self._by_lower: dict[str, list[LexiconEntry]] = defaultdict(list)
        unique: list[LexiconEntry] = []
        seen = set()
        for entry in self.entries:
            if entry in seen:
                continue
            seen.add(entry)
            unique.append(entry)
            self._by_form[entry.form].append(entry)
            self._by_lower[entry.form.lower()].append(entry)
        self.entries = unique

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, form: str, fallback_lowercase: bool = True) -> list[LexiconEntry]:
        hits = self._by_form.get(form)
        if hits:
            return list(hits)
        if fallback_lowercase:
            lowered = form.lower()
            # only rows whose own form is lowercase answer a case-folded query
            return [entry for entry in self._by_lower.get(lowered, ()) if entry.form == lowered]
        return []

    def has_name(self, lemma: str) -> bool:
        return lemma in self.name_list


def lookup(lexicon: Lexicon, form: str, fallback_lowercase: bool = True) -> list[LexiconEntry]:
    return lexicon.lookup(form, fallback_lowercase)


def _iter_rows(path: Path):
    with open_utf8(path) as file:
        for line_number, raw_line in enumerate(file, start=1):
            line = raw_line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            yield line_number, line


def load_lexicon(path: str | Path, mappings: TagsetMappings | None = None, names_path: str | Path | None = None) -> Lexicon:
    path = Path(path)
    mappings = mappings or default_mappings()
    entries = []
    for line_number, line in _iter_rows(path):
        columns = line.split("\t")
        if len(columns) != 4:
            raise LexiconLoadError(f"{path}: expected 4 tab-separated columns, got {len(columns)}", line_number)
        form, lemma, category, flexions = (column.strip() for column in columns)
        if not form or not lemma:
            raise LexiconLoadError(f"{path}: empty form or lemma", line_number)
        try:
            parsed_category = MorphalouCategory(category)
        except ValueError:
            raise LexiconLoadError(f"{path}: unknown Morphalou category {category!r}", line_number) from None
        values = tuple(value.strip() for value in flexions.split(";") if value.strip()) if flexions else ()
        for value in values:
            if not mappings.is_known_value(value):
                raise LexiconLoadError(f"{path}: unknown flexion value {value!r}", line_number)
        entries.append(LexiconEntry(form, lemma, parsed_category, values))

    names = load_name_list(names_path) if names_path is not None else frozenset()
    lexicon = Lexicon(entries, names)
    classica_logger.info(f"LEXICON Loaded {len(lexicon)} entries from {path}")
    return lexicon


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        for entry in lexicon.entries:
            file.write(f"{entry.form}\t{entry.lemma}\t{entry.category.value}\t{';'.join(entry.morph_source_values)}\n")


def load_name_list(path: str | Path) -> frozenset[str]:
    names = set()
    for _, line in _iter_rows(Path(path)):
        names.add(line.strip())
    classica_logger.info(f"LEXICON Loaded {len(names)} proper names from {path}")
    return frozenset(names)
