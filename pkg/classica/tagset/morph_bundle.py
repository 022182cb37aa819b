"""Morphological feature bundles in CATTEX codes and their canonical serialization.

Canonical form: ``MODE=ind|TEMPS=pst|PERS.=3|NOMB.=s|GENRE=m|CAS=n`` with
none-valued fields omitted, ``_`` for the empty bundle, ``MORPH=inv`` for
invariable forms and ``MORPH=err`` for the ERROR marker.
"""
from dataclasses import dataclass
from typing import Optional, Union

from classica.utils.errors import MorphParseError

MODES = frozenset({"ind", "imp", "con", "sub"})
TENSES = frozenset({"pst", "ipf", "fut", "psp"})
PERSONS = frozenset({"1", "2", "3"})
NUMBERS = frozenset({"s", "p"})
GENDERS = frozenset({"m", "f", "n"})

FEATURE_FIELDS: tuple[str, ...] = ("mode", "tense", "person", "number", "gender", "case")

# field name -> serialization key, in canonical order
FIELD_KEYS: dict[str, str] = {
    "mode": "MODE",
    "tense": "TEMPS",
    "person": "PERS.",
    "number": "NOMB.",
    "gender": "GENRE",
    "case": "CAS",
}
KEY_FIELDS: dict[str, str] = {key: field_name for field_name, key in FIELD_KEYS.items()}

FIELD_VALUES: dict[str, frozenset[str] | None] = {
    "mode": MODES,
    "tense": TENSES,
    "person": PERSONS,
    "number": NUMBERS,
    "gender": GENDERS,
    "case": None,  # open string field
}

EMPTY_SERIALIZATION = "_"
INVARIABLE_SERIALIZATION = "MORPH=inv"
ERROR_SERIALIZATION = "MORPH=err"
UNKNOWN_SERIALIZATION = "unknown"


def _valid_case(value: str) -> bool:
    return bool(value) and not any(ch in value for ch in "|=\t\n ") and len(value) <= 16


@dataclass(frozen=True)
class MorphBundle:
    mode: Optional[str] = None
    tense: Optional[str] = None
    person: Optional[str] = None
    number: Optional[str] = None
    gender: Optional[str] = None
    case: Optional[str] = None
    invariable: bool = False
    error: bool = False

    def __post_init__(self):
        for field_name in FEATURE_FIELDS:
            value = getattr(self, field_name)
            if value is None:
                continue
            allowed = FIELD_VALUES[field_name]
            if allowed is None:
                if not _valid_case(value):
                    raise MorphParseError(f"Invalid CAS value {value!r}")
            elif value not in allowed:
                raise MorphParseError(f"Invalid {FIELD_KEYS[field_name]} code {value!r}")
        if (self.invariable or self.error) and not self.is_empty_features():
            raise MorphParseError("Invariable and error bundles carry no inflection fields")
        if self.invariable and self.error:
            raise MorphParseError("A bundle cannot be both invariable and an error marker")

    @classmethod
    def empty(cls) -> "MorphBundle":
        return cls()

    @classmethod
    def invariable_bundle(cls) -> "MorphBundle":
        return cls(invariable=True)

    @classmethod
    def error_bundle(cls) -> "MorphBundle":
        return cls(error=True)

    def is_empty_features(self) -> bool:
        return all(getattr(self, field_name) is None for field_name in FEATURE_FIELDS)

    def is_empty(self) -> bool:
        return self.is_empty_features() and not self.invariable and not self.error

    def get(self, field_name: str) -> Optional[str]:
        return getattr(self, field_name)

    def __str__(self) -> str:
        return serialize_morph(self)


class UnknownMorph:
    """Marker for tokens whose morphology could not be projected."""
    _instance: Optional["UnknownMorph"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNKNOWN_MORPH"

    def __str__(self) -> str:
        return UNKNOWN_SERIALIZATION

    def __reduce__(self):
        return (UnknownMorph, ())


UNKNOWN_MORPH = UnknownMorph()

Morph = Union[MorphBundle, UnknownMorph]


def is_unknown(morph: object) -> bool:
    return morph is UNKNOWN_MORPH


def serialize_morph(bundle: Morph) -> str:
    if bundle is UNKNOWN_MORPH:
        return UNKNOWN_SERIALIZATION
    assert isinstance(bundle, MorphBundle)
    if bundle.error:
        return ERROR_SERIALIZATION
    if bundle.invariable:
        return INVARIABLE_SERIALIZATION
    parts = [
        f"{key}={getattr(bundle, field_name)}"
        for field_name, key in FIELD_KEYS.items()
        if getattr(bundle, field_name) is not None
    ]
    if not parts:
        return EMPTY_SERIALIZATION
    return "|".join(parts)


def parse_morph(text: str) -> MorphBundle:
    """Inverse of serialize_morph on bundles (not on the unknown marker)."""
    if text == EMPTY_SERIALIZATION:
        return MorphBundle()
    if text == INVARIABLE_SERIALIZATION:
        return MorphBundle.invariable_bundle()
    if text == ERROR_SERIALIZATION:
        return MorphBundle.error_bundle()
    if not text:
        raise MorphParseError("Empty morph string, use '_' for the empty bundle")
    values: dict[str, str] = {}
    for part in text.split("|"):
        key, sep, value = part.partition("=")
        if not sep or not value:
            raise MorphParseError(f"Malformed morph feature {part!r} in {text!r}")
        if key not in KEY_FIELDS:
            raise MorphParseError(f"Unknown morph key {key!r} in {text!r}")
        field_name = KEY_FIELDS[key]
        if field_name in values:
            raise MorphParseError(f"Duplicate morph key {key!r} in {text!r}")
        values[field_name] = value
    return MorphBundle(**values)


def parse_morph_field(text: str) -> Morph:
    """Parse a TSV morph column, which may also hold the unknown marker."""
    if text == UNKNOWN_SERIALIZATION:
        return UNKNOWN_MORPH
    return parse_morph(text)


def merge_bundles(bundles: list[MorphBundle]) -> MorphBundle:
    """Keep the fields every bundle agrees on, set the others to none."""
    if not bundles:
        raise ValueError("merge_bundles needs at least one bundle")
    first = bundles[0]
    if all(bundle == first for bundle in bundles):
        return first
    # flags only survive unanimity, which the equality check above already covers
    merged = {}
    for field_name in FEATURE_FIELDS:
        values = {bundle.get(field_name) for bundle in bundles}
        merged[field_name] = values.pop() if len(values) == 1 else None
    return MorphBundle(**merged)
