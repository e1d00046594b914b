"""
CSV-based implementation of TableRepository.
"""

import json
from pathlib import Path

import pandas as pd

from src.shared.infrastructure.repositories.csv_repository import CSVRepository
from src.shared.infrastructure.repositories.table_repository import TableRepository


class CSVTableRepository(TableRepository, CSVRepository):
    """
    CSV-based implementation of `TableRepository`.

    Metadata values are written one per line as `key: <json>` in insertion
    order, so equal inputs produce byte-identical files.
    """

    def save(self, frame: pd.DataFrame, metadata: dict) -> Path:
        """
        Write the table behind a `#` provenance header.

        Args:
            frame: Table to write
            metadata: Provenance entries

        Returns:
            Path: The written file
        """
        lines = [f"{key}: {json.dumps(value)}" for key, value in metadata.items()]
        return self._write_csv(frame, lines)

    def load(self) -> pd.DataFrame:
        """
        Load the table, empty cells as NaN.

        Returns:
            pd.DataFrame: The table
        """
        return self._load_csv(sep=",")

    def load_metadata(self) -> dict:
        """
        Parse the provenance header back into a dictionary.

        Returns:
            dict: Metadata entries in file order
        """
        metadata = {}
        for line in self._read_metadata():
            key, _, value = line.partition(": ")
            metadata[key] = json.loads(value)
        return metadata
