"""
Base CSV Repository Module.
"""

from abc import ABC
from pathlib import Path

import pandas as pd

COMMENT_PREFIX = "#"


class CSVRepository(ABC):
    """
    Base class for CSV-based repositories.

    Files start with '#'-prefixed metadata lines followed by a plain CSV table.
    Floats are written in their shortest round-trip form and missing values as
    empty cells.
    """

    def __init__(self, file_path: str | Path):
        """
        Initialize `CSVRepository` with CSV file path.
        """
        self._file_path = Path(file_path)

    @property
    def file_path(self) -> Path:
        """Get the file path."""
        return self._file_path

    def _load_csv(self, sep: str = ",", **kwargs) -> pd.DataFrame:
        """
        Load the table part of the file, skipping the metadata lines.

        Args:
            sep (str): The separator used in the CSV file.
            **kwargs: Additional keyword arguments passed to `pandas.read_csv`

        Returns:
            pd.DataFrame: The contents of the CSV file.
        """
        return pd.read_csv(self._file_path, sep=sep, comment=COMMENT_PREFIX, **kwargs)

    def _read_metadata(self) -> list[str]:
        """Metadata lines without their prefix."""
        lines = []
        with self._file_path.open(encoding="utf-8") as handle:
            for line in handle:
                if not line.startswith(COMMENT_PREFIX):
                    break
                lines.append(line[len(COMMENT_PREFIX) :].strip())
        return lines

    def _write_csv(self, frame: pd.DataFrame, metadata: list[str]) -> Path:
        """
        Write metadata lines and the table.

        Args:
            frame: Table to write (index dropped)
            metadata: Header lines, written as '# line'

        Returns:
            Path: The written file
        """
        self._file_path.parent.mkdir(parents=True, exist_ok=True)
        with self._file_path.open("w", encoding="utf-8", newline="") as handle:
            for line in metadata:
                handle.write(f"{COMMENT_PREFIX} {line}\n")
            frame.to_csv(handle, index=False, na_rep="", lineterminator="\n")
        return self._file_path
