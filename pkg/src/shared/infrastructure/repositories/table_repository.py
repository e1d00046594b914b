"""
Shared Infrastructure - Table Repository Interface
"""

from abc import ABC, abstractmethod
from pathlib import Path

import pandas as pd


class TableRepository(ABC):
    """
    Abstract base class for TableRepository.
    This repository stores the tabular data behind field maps, portraits and trajectories.
    """

    @abstractmethod
    def save(self, frame: pd.DataFrame, metadata: dict) -> Path:
        """
        Store a table with its provenance.

        Args:
            frame: Table to store
            metadata: Provenance (command, body, tolerances, version)

        Returns:
            Path: Where the table was stored
        """

    @abstractmethod
    def load(self) -> pd.DataFrame:
        """
        Load the stored table.

        Returns:
            pd.DataFrame: The table without its provenance
        """
