from pathlib import Path

from classica.corpus.play import Token
from classica.utils.errors import CorpusFormatError
from classica.utils.text_files import open_utf8


def write_token_file(segments: list[list[Token]], path: str | Path) -> None:
    """One token per line, a blank line between speeches."""
    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        file.write("\n\n".join("\n".join(token.text for token in segment) for segment in segments if segment))
        if any(segments):
            file.write("\n")


def read_token_file(path: str | Path, play_id: str | None = None) -> list[list[Token]]:
    path = Path(path)
    play_id = play_id or path.name.split(".")[0]
    segments: list[list[Token]] = []
    current: list[Token] = []
    position = 0
    with open_utf8(path) as file:
        for line_number, raw_line in enumerate(file, start=1):
            text = raw_line.rstrip("\n").rstrip("\r")
            if not text:
                if current:
                    segments.append(current)
                    current = []
                continue
            if any(ch.isspace() for ch in text):
                raise CorpusFormatError(f"Token {text!r} contains whitespace", line_number, str(path))
            current.append(Token(text, position, play_id))
            position += 1
    if current:
        segments.append(current)
    return segments
