import json
from pathlib import Path
from typing import Any, Union

from splitg2.errors import ParseError
from splitg2.my_types import JsonValue


def dumps(data: Any) -> str:
    """
    Canonical JSON text for data output: stable key order, no timestamps,
    trailing newline left to the caller.
    """
    return json.dumps(ensure_values_serializable(data), indent=2)


def ensure_values_serializable(data):
    """
    Recursively converts tuples to lists and anything non-JSON to its text form.
    """
    if hasattr(data, "to_dict") and callable(data.to_dict):
        return ensure_values_serializable(data.to_dict())
    elif isinstance(data, dict):
        return {key: ensure_values_serializable(value) for key, value in data.items()}
    elif isinstance(data, (list, tuple)):
        return [ensure_values_serializable(item) for item in data]
    elif isinstance(data, (str, int, bool, type(None))):
        return data
    else:
        return str(data)


def parse_json(text: str, source: str = "<input>") -> JsonValue:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"Invalid JSON in {source}: {e.msg}",
            position=f"line {e.lineno}, column {e.colno} (char {e.pos})",
        )


def load_json_file(path: Union[str, Path]) -> JsonValue:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}")
    return parse_json(text, source=str(path))


def expect_dict(data: JsonValue, position: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError("Expected a JSON object", position=position)
    return data


def expect_list(data: JsonValue, length: int, position: str) -> list:
    if not isinstance(data, list) or len(data) != length:
        raise ParseError(f"Expected a JSON array of length {length}", position=position)
    return data
