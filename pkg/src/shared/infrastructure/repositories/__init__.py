"""
src.shared.infrastructure.repositories - Shared Infrastructure Repositories module.
"""

from .csv_repository import CSVRepository
from .table_repository import TableRepository
from .csv_table_repository import CSVTableRepository
from .json_report_repository import JSONReportRepository

__all__ = [
    "CSVRepository",
    "CSVTableRepository",
    "JSONReportRepository",
    "TableRepository",
]
