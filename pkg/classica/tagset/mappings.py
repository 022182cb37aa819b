"""CATTEX <-> Morphalou mapping tables.

Both tables ship as TSV files under configs/ and as the built-in
defaults below, so a corrected table can be dropped in without touching
the code.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path

from classica.tagset.cattex import CATTEX_TAGS
from classica.tagset.morph_bundle import (
    GENDERS,
    MODES,
    NUMBERS,
    PERSONS,
    TENSES,
    MorphBundle,
)
from classica.utils import classica_logger, config_reader
from classica.utils.errors import CorpusFormatError, NoMappingError, UnknownTagError
from classica.utils.text_files import open_utf8


class MorphalouCategory(str, Enum):
    INTERJECTION = "Interjection"
    ADVERBE = "Adverbe"
    CONJONCTION = "Conjonction"
    VERBE = "Verbe"
    PREPOSITION = "Préposition"
    DETERMINANT = "Déterminant"
    PRONOM = "Pronom"
    NOM_COMMUN = "Nom commun"
    ADJECTIF_QUALIFICATIF = "Adjectif qualificatif"
    NOMBRE = "Nombre"

    def __str__(self) -> str:
        return self.value


BUILTIN_CATTEX_TO_MORPHALOU: dict[str, MorphalouCategory] = {
    "INJ": MorphalouCategory.INTERJECTION,
    "ADVgen": MorphalouCategory.ADVERBE,
    "ADVneg": MorphalouCategory.ADVERBE,
    "ADVint": MorphalouCategory.ADVERBE,
    "ADVsub": MorphalouCategory.ADVERBE,
    "CONcoo": MorphalouCategory.CONJONCTION,
    "CONsub": MorphalouCategory.CONJONCTION,
    "VERcjg": MorphalouCategory.VERBE,
    "VERinf": MorphalouCategory.VERBE,
    "VERppe": MorphalouCategory.VERBE,
    "VERppa": MorphalouCategory.VERBE,
    "PRE": MorphalouCategory.PREPOSITION,
    "DETdef": MorphalouCategory.DETERMINANT,
    "DETndf": MorphalouCategory.DETERMINANT,
    "DETdem": MorphalouCategory.DETERMINANT,
    "DETpos": MorphalouCategory.DETERMINANT,
    "DETind": MorphalouCategory.DETERMINANT,
    "DETrel": MorphalouCategory.DETERMINANT,
    "DETint": MorphalouCategory.DETERMINANT,
    "DETcom": MorphalouCategory.DETERMINANT,
    "PROper": MorphalouCategory.PRONOM,
    "PROimp": MorphalouCategory.PRONOM,
    "PROadv": MorphalouCategory.PRONOM,
    "PROpos": MorphalouCategory.PRONOM,
    "PROdem": MorphalouCategory.PRONOM,
    "PROind": MorphalouCategory.PRONOM,
    "PROord": MorphalouCategory.NOM_COMMUN,
    "PROrel": MorphalouCategory.PRONOM,
    "PROint": MorphalouCategory.PRONOM,
    "PROcom": MorphalouCategory.DETERMINANT,
    "ADJqua": MorphalouCategory.ADJECTIF_QUALIFICATIF,
    "ADJind": MorphalouCategory.ADJECTIF_QUALIFICATIF,
    "ADJord": MorphalouCategory.ADJECTIF_QUALIFICATIF,
    "ADJpos": MorphalouCategory.ADJECTIF_QUALIFICATIF,
    "NOMcom": MorphalouCategory.NOM_COMMUN,
    "ADJcar": MorphalouCategory.NOMBRE,
    "DETcar": MorphalouCategory.NOMBRE,
    "PROcar": MorphalouCategory.NOMBRE,
}

NONE_CODE = "-"
INVARIABLE_CODE = "x"
ERROR_CODE = "ERROR"

BUILTIN_MORPHALOU_TO_CATTEX: dict[str, str] = {
    # Mode
    "indicative": "ind",
    "imperative": "imp",
    "conditional": "con",
    "subjunctive": "sub",
    "infinitive": NONE_CODE,
    "past": NONE_CODE,
    "participle": NONE_CODE,
    # Temps
    "present": "pst",
    "imperfect": "ipf",
    "future": "fut",
    "simplePast": "psp",
    # Pers.
    "firstPerson": "1",
    "secondPerson": "2",
    "thirdPerson": "3",
    # Nomb.
    "singular": "s",
    "plural": "p",
    # Genre
    "masculine": "m",
    "feminine": "f",
    "neuter": "n",
    # Varia
    "-": NONE_CODE,
    "invariable": INVARIABLE_CODE,
    "1036442": ERROR_CODE,
}

# CATTEX codes are disjoint across fields, so the code alone names its field
CODE_FIELDS: dict[str, str] = {
    **{code: "mode" for code in MODES},
    **{code: "tense" for code in TENSES},
    **{code: "person" for code in PERSONS},
    **{code: "number" for code in NUMBERS},
    **{code: "gender" for code in GENDERS},
}
VALID_CODES = frozenset(CODE_FIELDS) | {NONE_CODE, INVARIABLE_CODE, ERROR_CODE}


@dataclass(frozen=True)
class TagsetMappings:
    cattex_to_category: dict[str, MorphalouCategory] = field(default_factory=dict)
    flexion_to_code: dict[str, str] = field(default_factory=dict)

    @classmethod
    def builtin(cls) -> "TagsetMappings":
        return cls(dict(BUILTIN_CATTEX_TO_MORPHALOU), dict(BUILTIN_MORPHALOU_TO_CATTEX))

    def category_for(self, pos: str) -> MorphalouCategory:
        if pos not in CATTEX_TAGS:
            raise UnknownTagError(f"Unknown CATTEX tag {pos!r}")
        try:
            return self.cattex_to_category[pos]
        except KeyError:
            raise NoMappingError(
                f"CATTEX tag {pos!r} has no Morphalou category; "
                "punctuation, proper names and PRE.DETdef take the special-case path"
            ) from None

    def code_for(self, morphalou_value: str) -> str:
        return self.flexion_to_code.get(morphalou_value, ERROR_CODE)

    def is_known_value(self, morphalou_value: str) -> bool:
        # numeric identifiers stand for the lexicon's unresolved references
        return morphalou_value in self.flexion_to_code or morphalou_value.isdigit()


def _read_two_columns(path: Path):
    with open_utf8(path) as file:
        for line_number, raw_line in enumerate(file, start=1):
            line = raw_line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            columns = line.split("\t")
            if len(columns) != 2:
                raise CorpusFormatError(f"Expected 2 tab-separated columns, got {len(columns)}", line_number, str(path))
            yield line_number, columns[0].strip(), columns[1].strip()


def load_mapping_tsv(cattex_path: str | Path, morphalou_path: str | Path) -> TagsetMappings:
    cattex_to_category: dict[str, MorphalouCategory] = {}
    for line_number, pos, category in _read_two_columns(Path(cattex_path)):
        if pos not in CATTEX_TAGS:
            raise CorpusFormatError(f"Unknown CATTEX tag {pos!r}", line_number, str(cattex_path))
        try:
            cattex_to_category[pos] = MorphalouCategory(category)
        except ValueError:
            raise CorpusFormatError(f"Unknown Morphalou category {category!r}", line_number, str(cattex_path)) from None

    flexion_to_code: dict[str, str] = {}
    for line_number, value, code in _read_two_columns(Path(morphalou_path)):
        if code not in VALID_CODES:
            raise CorpusFormatError(f"Unknown CATTEX flexion code {code!r}", line_number, str(morphalou_path))
        flexion_to_code[value] = code

    classica_logger.debug(
        f"TAGSET Loaded {len(cattex_to_category)} POS mappings and {len(flexion_to_code)} flexion mappings"
    )
    return TagsetMappings(cattex_to_category, flexion_to_code)


@lru_cache(maxsize=1)
def default_mappings() -> TagsetMappings:
    section = config_reader.get_section("tagset")
    cattex_path = config_reader.resolve_path(section.get("cattex_morphalou"))
    morphalou_path = config_reader.resolve_path(section.get("morphalou_cattex"))
    if cattex_path and morphalou_path and cattex_path.exists() and morphalou_path.exists():
        return load_mapping_tsv(cattex_path, morphalou_path)
    classica_logger.warning("TAGSET Mapping files not found, using built-in tables")
    return TagsetMappings.builtin()


def cattex_to_morphalou(pos: str, mappings: TagsetMappings | None = None) -> MorphalouCategory:
    return (mappings or default_mappings()).category_for(pos)


def flexion_to_cattex(morphalou_value: str, mappings: TagsetMappings | None = None) -> str:
    """Table lookup; anything unrecognized comes back as the ERROR marker."""
    return (mappings or default_mappings()).code_for(morphalou_value)


def bundle_from_flexions(values: list[str] | tuple[str, ...], mappings: TagsetMappings | None = None) -> MorphBundle:
    codes = [flexion_to_cattex(value, mappings) for value in values]
    if ERROR_CODE in codes:
        return MorphBundle.error_bundle()
    features: dict[str, str | None] = {}
    for code in codes:
        field_name = CODE_FIELDS.get(code)
        if field_name is None:
            continue
        if field_name in features and features[field_name] != code:
            features[field_name] = None  # conflicting values in one analysis
        else:
            features[field_name] = code
    features = {name: value for name, value in features.items() if value is not None}
    if not features and INVARIABLE_CODE in codes:
        return MorphBundle.invariable_bundle()
    return MorphBundle(**features)
