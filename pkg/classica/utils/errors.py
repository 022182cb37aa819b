"""Exception hierarchy. UsageError maps to exit status 1, DataError to 2."""


class ClassicaError(Exception):
    exit_status = 2


class UsageError(ClassicaError):
    exit_status = 1


class DataError(ClassicaError):
    exit_status = 2


class PlayParseError(DataError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class EmptyPlayError(DataError):
    pass


class CorpusFormatError(DataError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f" in {path}"
        if line is not None:
            where += f" at line {line}"
        super().__init__(f"{message}{where}")


class SplitError(DataError):
    def __init__(self, message: str, colliding: tuple[range, range] | None = None):
        self.colliding = colliding
        super().__init__(message)


class BalanceValidationError(DataError):
    def __init__(self, message: str, sample_id: str | None = None):
        self.sample_id = sample_id
        super().__init__(message)


class UnknownTagError(DataError):
    pass


class NoMappingError(DataError):
    pass


class MorphParseError(DataError):
    pass


class LexiconLoadError(DataError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"{message}{where}")


class RuleLoadError(LexiconLoadError):
    pass


class TrainingError(DataError):
    pass


class TaskColumnError(DataError):
    pass


class AlignmentError(DataError):
    def __init__(self, position: int, gold_form: str | None, pred_form: str | None):
        self.position = position
        self.gold_form = gold_form
        self.pred_form = pred_form
        super().__init__(
            f"Gold and prediction are misaligned at position {position}: "
            f"gold {gold_form!r} vs pred {pred_form!r}"
        )


class AxisMismatchError(DataError):
    pass


class ModelFormatError(DataError):
    pass


class InputEncodingError(DataError):
    def __init__(self, source: str, offset: int, byte: int):
        self.source = source
        self.offset = offset
        super().__init__(f"{source} is not valid UTF-8: byte 0x{byte:02x} at offset {offset}")
