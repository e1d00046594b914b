"""
JSON-shaped records of complex eigenvalues.
"""


def complex_record(value: complex) -> dict:
    """{"re": float, "im": float} with full-precision floats."""
    return {"re": float(value.real), "im": float(value.imag)}


def complex_records(values) -> list[dict] | None:
    """List of complex records, or None."""
    if values is None:
        return None
    return [complex_record(value) for value in values]
