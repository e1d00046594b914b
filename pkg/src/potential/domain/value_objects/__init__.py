"""
src.potential.domain.value_objects - Potential Value Objects module.
"""

from .bodies import AnnulusBody, Body, BodyStack, DiskBody, WireBody
from .field_point import FieldPoint
from .field_sample import FieldSample

__all__ = [
    "AnnulusBody",
    "Body",
    "BodyStack",
    "DiskBody",
    "FieldPoint",
    "FieldSample",
    "WireBody",
]
