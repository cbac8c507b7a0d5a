import os
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from splitg2.algebra.fields import RATIONALS, FieldSpec, field_from_label
from splitg2.errors import ParseError
from splitg2.my_types import OutputFormat

FIELD_ENV = "SPLITG2_FIELD"
FORMAT_ENV = "SPLITG2_FORMAT"

FORMATS = ("text", "json", "latex")


class CliConfig(BaseModel):
    """
    Settings shared by every subcommand. Flags win over the
    SPLITG2_FIELD / SPLITG2_FORMAT environment variables, which win over
    the defaults.
    """

    model_config = ConfigDict(frozen=True)

    field: FieldSpec = RATIONALS
    format: OutputFormat = "text"
    verbosity: int = Field(default=0, ge=0)
    max_workers: Optional[int] = Field(default=None, ge=1)

    @field_validator("field", mode="before")
    @classmethod
    def parse_field(cls, value):
        if isinstance(value, str):
            return field_from_label(value)
        return value

    @classmethod
    def resolve(
        cls,
        field: Optional[str] = None,
        format: Optional[str] = None,
        verbosity: int = 0,
        max_workers: Optional[int] = None,
    ) -> "CliConfig":
        field = field or os.getenv(FIELD_ENV) or "q"
        format = format or os.getenv(FORMAT_ENV) or "text"
        if format not in FORMATS:
            raise ParseError(f"Unknown format {format!r}, expected one of {', '.join(FORMATS)}")
        return cls(
            field=field_from_label(field),
            format=format,  # type: ignore[arg-type]
            verbosity=verbosity,
            max_workers=max_workers,
        )
