"""Character-speech extraction from TEI drama files."""
from pathlib import Path

from lxml import etree

from classica.corpus.play import Play, PlayMetadata
from classica.utils import classica_logger, config_reader
from classica.utils.errors import EmptyPlayError, PlayParseError

XML_ID = "{http://www.w3.org/XML/1998/namespace}id"


def _localname(element) -> str | None:
    if not isinstance(element.tag, str):
        return None  # comments and processing instructions
    return etree.QName(element).localname


class TeiSpeechExtractor:
    def __init__(
        self,
        speech_elements: list[str] | None = None,
        content_elements: list[str] | None = None,
        excluded_elements: list[str] | None = None,
    ):
        section = config_reader.get_section("tei")
        self.speech_elements = frozenset(speech_elements or section.get("speech_elements", ["sp"]))
        self.content_elements = frozenset(content_elements or section.get("content_elements", ["l", "p", "ab"]))
        self.excluded_elements = frozenset(
            excluded_elements or section.get("excluded_elements", ["speaker", "stage", "note", "head"])
        )

    def parse(self, document: str | bytes, play_id: str | None = None, metadata: PlayMetadata | None = None) -> Play:
        if isinstance(document, str):
            document = document.encode("utf-8")
        parser = etree.XMLParser(resolve_entities=False, no_network=True, remove_blank_text=False)
        try:
            root = etree.fromstring(document, parser=parser)
        except etree.XMLSyntaxError as e:
            line, column = e.position if e.position else (None, None)
            raise PlayParseError(f"Malformed play markup: {e.msg}", line, column) from None

        play_id = play_id or root.get(XML_ID) or "play"
        speech_count = 0
        speeches = []
        for element in root.iter():
            if _localname(element) not in self.speech_elements:
                continue
            speech_count += 1
            text = " ".join("".join(self._speech_parts(element, False)).split())
            if text:
                speeches.append(text)
            else:
                classica_logger.debug(f"INGEST Speech {speech_count} of {play_id} has no spoken text")

        if not speeches:
            raise EmptyPlayError(f"Play {play_id} contains no character speech ({speech_count} speech elements)")

        if metadata is None:
            metadata = self._header_metadata(root, play_id)
        classica_logger.info(f"INGEST Parsed {play_id}: {len(speeches)} speeches")
        return Play(play_id, tuple(speeches), metadata)

    def _speech_parts(self, element, inside_content: bool) -> list[str]:
        name = _localname(element)
        if name is None or name in self.excluded_elements:
            return []
        # a speech holds its own text and the tails of its children like any content element
        inside = inside_content or name in self.content_elements or name in self.speech_elements
        parts = []
        if inside and element.text:
            parts.append(element.text)
        for child in element:
            parts.extend(self._speech_parts(child, inside))
            if inside and child.tail:
                parts.append(child.tail)
        if name in self.content_elements:
            parts.append(" ")  # verse lines and paragraphs never run together
        return parts

    @staticmethod
    def _header_metadata(root, play_id: str) -> PlayMetadata:
        title = author = ""
        for element in root.iter():
            name = _localname(element)
            if name == "title" and not title:
                title = " ".join("".join(element.itertext()).split())
            elif name == "author" and not author:
                author = " ".join("".join(element.itertext()).split())
            if title and author:
                break
        return PlayMetadata(id=play_id, author=author, title=title)


def parse_play(document: str | bytes, play_id: str | None = None, metadata: PlayMetadata | None = None) -> Play:
    return TeiSpeechExtractor().parse(document, play_id, metadata)


def parse_play_file(path: str | Path, metadata: PlayMetadata | None = None) -> Play:
    path = Path(path)
    with open(path, 'rb') as file:
        document = file.read()
    play_id = metadata.id if metadata is not None and metadata.id else path.stem
    return parse_play(document, play_id, metadata)
