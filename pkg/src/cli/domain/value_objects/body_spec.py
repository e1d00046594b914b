"""
CLI Domain - Body specifications.

{"type": "annulus", "a": 1, "b": 0.75, "mu": 1}
{"type": "disk", "a": 1, "mu": 1}
{"type": "wire", "a": 1, "mu": 1}
{"type": "stack", "annuli": [{"a": .., "b": .., "mu": ..}, ...]}
"""

from src.potential.domain.value_objects import AnnulusBody, Body, BodyStack, DiskBody, WireBody
from src.shared.domain.enums import BodyType
from src.shared.domain.exceptions import ConfigurationError, NumericalDomainError


def _field(spec: dict, key: str) -> float:
    if key not in spec:
        raise ConfigurationError(f"Body specification {spec!r} lacks '{key}'")
    value = spec[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigurationError(f"Body field '{key}' must be a number, got {value!r}")
    return float(value)


def _annulus(spec: dict) -> AnnulusBody:
    return AnnulusBody(a=_field(spec, "a"), b=_field(spec, "b"), mu=_field(spec, "mu"))


def body_from_spec(spec: dict) -> Body:
    """
    Build the body a specification describes.

    Raises:
        ConfigurationError: If the specification is malformed or describes an invalid body
    """
    if not isinstance(spec, dict):
        raise ConfigurationError(f"Body specification must be an object, got {spec!r}")
    try:
        body_type = BodyType(spec.get("type"))
    except ValueError as error:
        raise ConfigurationError(f"Unknown body type {spec.get('type')!r}") from error
    try:
        if body_type is BodyType.WIRE:
            return WireBody(a=_field(spec, "a"), mu=_field(spec, "mu"))
        if body_type is BodyType.DISK:
            return DiskBody(a=_field(spec, "a"), mu=_field(spec, "mu"))
        if body_type is BodyType.ANNULUS:
            return _annulus(spec)
        members = spec.get("annuli")
        if not isinstance(members, list) or not members:
            raise ConfigurationError("A stack specification needs a non-empty 'annuli' list")
        return BodyStack.of(*(_annulus(member) for member in members))
    except NumericalDomainError as error:
        raise ConfigurationError(f"Invalid body: {error}") from error
