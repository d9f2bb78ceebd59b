import json
from pathlib import Path
from typing import Any

from chatelet_decider.errors import InputError


def save(path: Path, data: dict[str, Any] | list | str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        if isinstance(data, str):
            f.write(data)
        else:
            json.dump(data, f, ensure_ascii=False, indent=2)


def read(path: Path) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}") from e


def read_json(path: Path) -> Any:
    try:
        return json.loads(read(path))
    except json.JSONDecodeError as e:
        raise InputError(f"Malformed JSON in {path}: {e}") from e
