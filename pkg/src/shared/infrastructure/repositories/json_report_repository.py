"""
JSON Report Repository Module.
"""

import json
import math
from pathlib import Path

from src.shared.domain.exceptions import ConfigurationError


def _finite(record):
    if isinstance(record, float) and not math.isfinite(record):
        return None
    if isinstance(record, dict):
        return {key: _finite(value) for key, value in record.items()}
    if isinstance(record, (list, tuple)):
        return [_finite(value) for value in record]
    return record


class JSONReportRepository:
    """
    Stores JSON-shaped records (reports, resolved configurations).

    Floats keep their shortest round-trip form; non-finite floats become null.
    """

    def __init__(self, file_path: str | Path):
        """
        Initialize `JSONReportRepository` with the JSON file path.
        """
        self._file_path = Path(file_path)

    @property
    def file_path(self) -> Path:
        """Get the file path."""
        return self._file_path

    def save(self, record: dict) -> Path:
        """
        Write the record with two-space indentation and a trailing newline.

        Returns:
            Path: The written file
        """
        self._file_path.parent.mkdir(parents=True, exist_ok=True)
        text = json.dumps(_finite(record), indent=2, allow_nan=False)
        self._file_path.write_text(text + "\n", encoding="utf-8")
        return self._file_path

    def load(self) -> dict:
        """
        Read the record back.

        Raises:
            ConfigurationError: If the file is missing or not a JSON object
        """
        try:
            record = json.loads(self._file_path.read_text(encoding="utf-8"))
        except FileNotFoundError as error:
            raise ConfigurationError(f"File not found: {self._file_path}") from error
        except json.JSONDecodeError as error:
            raise ConfigurationError(f"Malformed JSON in {self._file_path}: {error}") from error
        if not isinstance(record, dict):
            raise ConfigurationError(f"{self._file_path} must hold a JSON object")
        return record
