"""UTF-8 input that fails as a DataError instead of a UnicodeDecodeError."""
import io
import sys
from pathlib import Path

from classica.utils.errors import InputEncodingError


def decode_utf8(data: bytes, source: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise InputEncodingError(source, e.start, data[e.start]) from None


def open_utf8(path: str | Path, newline: str | None = None) -> io.StringIO:
    """Decode the whole file up front, so the reported offset is a file offset."""
    with open(path, 'rb') as file:
        data = file.read()
    return io.StringIO(decode_utf8(data, str(path)), newline=newline)


def read_stdin() -> str:
    buffer = getattr(sys.stdin, "buffer", None)
    if buffer is None:
        return sys.stdin.read()
    return decode_utf8(buffer.read(), "<stdin>")
