"""
CLI Infrastructure - Run Output Repository.
"""

from pathlib import Path

import pandas as pd

from src.shared.infrastructure.repositories import CSVTableRepository, JSONReportRepository

CONFIG_SUFFIX = ".config.json"


class RunOutputRepository:
    """
    Writes every file of one command run.

    Derived tables are placed next to the main output with a name suffix
    (portrait.csv -> portrait_000.csv, portrait_wprime.csv) and the resolved
    configuration goes to <output>.config.json.
    """

    def __init__(self, output: str | Path, config_suffix: str = CONFIG_SUFFIX):
        """
        Initialize `RunOutputRepository` with the main output path.
        """
        self._output = Path(output)
        self._config_suffix = config_suffix

    @property
    def output(self) -> Path:
        """Get the main output path."""
        return self._output

    def path_for(self, suffix: str = "") -> Path:
        """Main output path with a suffix inserted before the extension."""
        if not suffix:
            return self._output
        return self._output.with_name(f"{self._output.stem}{suffix}{self._output.suffix}")

    def save_table(self, frame: pd.DataFrame, metadata: dict, suffix: str = "") -> Path:
        """Write a CSV table behind its provenance header."""
        return CSVTableRepository(self.path_for(suffix)).save(frame, metadata)

    def save_report(self, record: dict) -> Path:
        """Write the JSON report to the main output path."""
        return JSONReportRepository(self._output).save(record)

    def save_config(self, record: dict) -> Path:
        """Write the resolved configuration next to the main output."""
        return JSONReportRepository(Path(f"{self._output}{self._config_suffix}")).save(record)
