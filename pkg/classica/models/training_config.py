from dataclasses import asdict, dataclass, fields

from classica.utils import config_reader


@dataclass(frozen=True)
class TrainingConfig:
    seed: int = 42
    epochs: int = 20
    patience: int = 6
    threshold: float = 0.001
    restarts: int = 5
    suffix_max: int = 6

    @classmethod
    def from_config(cls, **overrides) -> "TrainingConfig":
        """Config file values, then any non-None keyword override."""
        section = config_reader.get_section("training")
        known = {f.name for f in fields(cls)}
        values = {key: value for key, value in section.items() if key in known}
        values.update({key: value for key, value in overrides.items() if key in known and value is not None})
        return cls(**values)

    def as_dict(self) -> dict:
        return asdict(self)
