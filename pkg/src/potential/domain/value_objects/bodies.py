"""
Potential Domain Value Objects - Gravitating Bodies.
"""

import math
from dataclasses import dataclass

from src.shared.domain.enums import BodyType
from src.shared.domain.exceptions import PreconditionError


def _require_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise PreconditionError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class WireBody:
    """
    Value Object: homogeneous circular wire of radius a in the plane z = 0.

    Attributes:
        a: Radius of the wire
        mu: Gravitational parameter G*M
    """

    a: float
    mu: float

    def __post_init__(self):
        _require_positive("Wire radius a", self.a)
        _require_positive("Gravitational parameter mu", self.mu)

    @property
    def body_type(self) -> BodyType:
        """Body type tag."""
        return BodyType.WIRE

    @property
    def linear_density(self) -> float:
        """G*lambda = mu / (2 pi a)."""
        return self.mu / (2.0 * math.pi * self.a)

    def to_dict(self) -> dict:
        """Configuration record of the wire."""
        return {"type": BodyType.WIRE.value, "a": self.a, "mu": self.mu}


@dataclass(frozen=True)
class DiskBody:
    """
    Value Object: homogeneous solid disk of radius a in the plane z = 0.

    Attributes:
        a: Radius of the disk
        mu: Gravitational parameter G*M
    """

    a: float
    mu: float

    def __post_init__(self):
        _require_positive("Disk radius a", self.a)
        _require_positive("Gravitational parameter mu", self.mu)

    @property
    def body_type(self) -> BodyType:
        """Body type tag."""
        return BodyType.DISK

    @property
    def surface_density(self) -> float:
        """G*sigma = mu / (pi a^2)."""
        return self.mu / (math.pi * self.a * self.a)

    @property
    def normal_jump(self) -> float:
        """Jump of the normal derivative of U across the plate, 4 pi G sigma."""
        return 4.0 * math.pi * self.surface_density

    def to_dict(self) -> dict:
        """Configuration record of the disk."""
        return {"type": BodyType.DISK.value, "a": self.a, "mu": self.mu}


@dataclass(frozen=True)
class AnnulusBody:
    """
    Value Object: homogeneous planar annulus b <= r <= a in the plane z = 0.

    Business Rules:
    - 0 < b < a
    - mu > 0
    - G*sigma = mu / (pi (a^2 - b^2))
    """

    a: float
    b: float
    mu: float

    def __post_init__(self):
        _require_positive("Outer radius a", self.a)
        _require_positive("Inner radius b", self.b)
        _require_positive("Gravitational parameter mu", self.mu)
        if self.b >= self.a:
            raise PreconditionError(f"Annulus requires b < a, got a={self.a!r}, b={self.b!r}")

    @property
    def body_type(self) -> BodyType:
        """Body type tag."""
        return BodyType.ANNULUS

    @property
    def surface_density(self) -> float:
        """G*sigma = mu / (pi (a^2 - b^2))."""
        return self.mu / (math.pi * (self.a * self.a - self.b * self.b))

    @property
    def normal_jump(self) -> float:
        """Jump of the normal derivative of U across the plate, 4 pi G sigma."""
        return 4.0 * math.pi * self.surface_density

    @property
    def origin_energy(self) -> float:
        """Potential energy at the origin, E* = -2 mu / (a + b)."""
        return -2.0 * self.mu / (self.a + self.b)

    def covers(self, r: float, margin: float = 0.0) -> bool:
        """True when the radius r lies on the closed plate [b - margin, a + margin]."""
        return self.b - margin <= r <= self.a + margin

    def to_dict(self) -> dict:
        """Configuration record of the annulus."""
        return {"type": BodyType.ANNULUS.value, "a": self.a, "b": self.b, "mu": self.mu}


@dataclass(frozen=True)
class BodyStack:
    """
    Value Object: concentric coplanar annuli whose potentials add.

    Business Rules:
    - At least one member
    - Members sorted by inner radius
    - Radial intervals [b_i, a_i] pairwise disjoint
    """

    annuli: tuple[AnnulusBody, ...]

    def __post_init__(self):
        if not self.annuli:
            raise PreconditionError("A body stack needs at least one annulus")
        for member in self.annuli:
            if not isinstance(member, AnnulusBody):
                raise PreconditionError(f"Body stack members must be annuli, got {type(member).__name__}")
        for inner, outer in zip(self.annuli, self.annuli[1:], strict=False):
            if inner.b > outer.b:
                raise PreconditionError("Body stack members must be sorted by inner radius")
            if inner.a >= outer.b:
                raise PreconditionError(
                    f"Annuli [{inner.b}, {inner.a}] and [{outer.b}, {outer.a}] overlap; "
                    "radial intervals must be disjoint"
                )

    @classmethod
    def of(cls, *annuli: AnnulusBody) -> "BodyStack":
        """Build a stack from annuli given in any order."""
        return cls(tuple(sorted(annuli, key=lambda member: member.b)))

    @classmethod
    def coerce(cls, bodies: "AnnulusBody | BodyStack") -> "BodyStack":
        """Promote a single annulus to a one-member stack."""
        if isinstance(bodies, BodyStack):
            return bodies
        if isinstance(bodies, AnnulusBody):
            return cls((bodies,))
        raise PreconditionError(f"Expected an annulus or a body stack, got {type(bodies).__name__}")

    @property
    def body_type(self) -> BodyType:
        """Body type tag."""
        return BodyType.STACK

    @property
    def inner_radius(self) -> float:
        """Inner radius of the innermost member."""
        return self.annuli[0].b

    @property
    def outer_radius(self) -> float:
        """Outer radius of the outermost member."""
        return self.annuli[-1].a

    @property
    def total_mu(self) -> float:
        """Sum of the member gravitational parameters."""
        return sum(member.mu for member in self.annuli)

    @property
    def origin_energy(self) -> float:
        """Potential energy at the origin, sum of -2 mu_i / (a_i + b_i)."""
        return sum(member.origin_energy for member in self.annuli)

    @property
    def edge_radii(self) -> tuple[float, ...]:
        """All edge-circle radii in increasing order."""
        return tuple(radius for member in self.annuli for radius in (member.b, member.a))

    @property
    def gaps(self) -> tuple[tuple[float, float], ...]:
        """Open radial intervals (a_i, b_{i+1}) between consecutive members."""
        return tuple((inner.a, outer.b) for inner, outer in zip(self.annuli, self.annuli[1:], strict=False))

    def member_covering(self, r: float, margin: float = 0.0) -> AnnulusBody | None:
        """Member whose closed plate contains the radius r, if any."""
        for member in self.annuli:
            if member.covers(r, margin):
                return member
        return None

    def to_dict(self) -> dict:
        """Configuration record of the stack."""
        return {
            "type": BodyType.STACK.value,
            "annuli": [{"a": member.a, "b": member.b, "mu": member.mu} for member in self.annuli],
        }


Body = WireBody | DiskBody | AnnulusBody | BodyStack
