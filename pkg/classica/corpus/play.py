import csv
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

from classica.utils import classica_logger
from classica.utils.errors import CorpusFormatError
from classica.utils.text_files import open_utf8


class VerseOrProse(str, Enum):
    VERSE = "verse"
    PROSE = "prose"
    MIXED = "mixed"


class Channel(str, Enum):
    THEATRE = "theatre"
    OTHER = "other"


class AuthorGender(str, Enum):
    MALE = "male"
    FEMALE = "female"
    UNKNOWN = "unknown"


def century_of(year: int) -> int:
    return (year - 1) // 100 + 1


@dataclass(frozen=True)
class PlayMetadata:
    id: str = ""
    author: str = ""
    title: str = ""
    date: Optional[int] = None
    genre: str = ""
    structure: str = ""
    verse_or_prose: Optional[VerseOrProse] = None
    period: str = ""
    century: Optional[int] = None
    channel: Optional[Channel] = None
    author_gender: Optional[AuthorGender] = None

    def __post_init__(self):
        if self.century is None and self.date is not None:
            object.__setattr__(self, "century", century_of(self.date))


@dataclass(frozen=True)
class Token:
    text: str
    position: int
    play_id: str

    def __post_init__(self):
        if not self.text or any(ch.isspace() for ch in self.text):
            raise ValueError(f"Token text must be non-empty and whitespace-free, got {self.text!r}")


@dataclass(frozen=True)
class Play:
    id: str
    speeches: tuple[str, ...]
    metadata: PlayMetadata = field(default_factory=PlayMetadata)

    def __post_init__(self):
        if not self.id:
            raise ValueError("Play id must be non-empty")


METADATA_COLUMNS = (
    "id", "author", "title", "date", "genre", "verse_or_prose",
    "period", "century", "channel", "author_gender",
)


def _parse_enum(enum_cls, value: str, column: str, line_number: int, path: Path):
    try:
        return enum_cls(value.strip().lower())
    except ValueError:
        allowed = ", ".join(member.value for member in enum_cls)
        raise CorpusFormatError(f"Invalid {column} {value!r} (expected one of {allowed})", line_number, str(path)) from None


def _parse_int(value: str, column: str, line_number: int, path: Path) -> Optional[int]:
    value = value.strip()
    if not value:
        return None
    try:
        return int(value)
    except ValueError:
        raise CorpusFormatError(f"Invalid {column} {value!r}, expected an integer", line_number, str(path)) from None


def load_metadata(path: str | Path) -> dict[str, PlayMetadata]:
    """Read the per-corpus metadata CSV sidecar, keyed by play id."""
    path = Path(path)
    metadata: dict[str, PlayMetadata] = {}
    with open_utf8(path, newline='') as file:
        reader = csv.reader(file)
        header = next(reader, None)
        if header is None or [column.strip() for column in header[:1]] != ["id"]:
            raise CorpusFormatError("Metadata header row missing (first column must be 'id')", 1, str(path))
        header = [column.strip() for column in header]
        missing = [column for column in METADATA_COLUMNS if column not in header]
        if missing:
            raise CorpusFormatError(f"Metadata header lacks columns {', '.join(missing)}", 1, str(path))

        for row in reader:
            line_number = reader.line_num
            if not any(cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise CorpusFormatError(f"Expected {len(header)} columns, got {len(row)}", line_number, str(path))
            cells = dict(zip(header, (cell.strip() for cell in row)))
            play_id = cells["id"]
            if not play_id:
                raise CorpusFormatError("Empty play id", line_number, str(path))
            if play_id in metadata:
                raise CorpusFormatError(f"Duplicate play id {play_id!r}", line_number, str(path))

            date = _parse_int(cells["date"], "date", line_number, path)
            century = _parse_int(cells["century"], "century", line_number, path)
            if century is not None and date is not None and century != century_of(date):
                classica_logger.warning(
                    f"INGEST Play {play_id} dated {date} is listed in century {century}, keeping the listed century"
                )
            metadata[play_id] = PlayMetadata(
                id=play_id,
                author=cells["author"],
                title=cells["title"],
                date=date,
                genre=cells["genre"],
                structure=cells.get("structure", ""),
                verse_or_prose=_parse_enum(VerseOrProse, cells["verse_or_prose"], "verse_or_prose", line_number, path)
                if cells["verse_or_prose"] else None,
                period=cells["period"],
                century=century,
                channel=_parse_enum(Channel, cells["channel"], "channel", line_number, path)
                if cells["channel"] else None,
                author_gender=_parse_enum(AuthorGender, cells["author_gender"], "author_gender", line_number, path)
                if cells["author_gender"] else None,
            )
    classica_logger.info(f"INGEST Loaded metadata for {len(metadata)} plays from {path}")
    return metadata
