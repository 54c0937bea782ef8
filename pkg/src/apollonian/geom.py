"""Planar primitives on complex numbers.

Points of the plane are plain Python ``complex`` values.  The extended plane
adds a single point at infinity, represented by the :data:`INFINITY` marker
(only Möbius maps ever produce it).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .config import DEFAULT
from .errors import DegenerateInput


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def as_point(z) -> complex:
    """Coerce ``z`` (complex, real, or an ``(x, y)`` pair) to a finite complex."""
    if isinstance(z, (tuple, list)):
        if len(z) != 2:
            raise DegenerateInput(f"expected an (x, y) pair, got {z!r}")
        z = complex(float(z[0]), float(z[1]))
    else:
        z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DegenerateInput(f"non-finite point {z!r}")
    return z


def cross_ratio(x, y, a, b) -> complex:
    """Return ``(x - a)/(y - a) * (y - b)/(x - b)``.

    The four points lie on a common generalized circle iff the value is real,
    and they appear on it in the order x, y, a, b iff the value is in (1, inf).
    """
    pts = [as_point(p) for p in (x, y, a, b)]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(pts[i] - pts[j]) <= 1e-14:
                raise DegenerateInput("cross-ratio needs four distinct points")
    x, y, a, b = pts
    return (x - a) / (y - a) * (y - b) / (x - b)


def is_real(w: complex, tol: float = DEFAULT.real_tol) -> bool:
    return abs(w.imag) <= tol * (1.0 + abs(w.real))


def in_cyclic_order(x, y, a, b, tol: float = DEFAULT.real_tol) -> bool:
    """True when x, y, a, b sit on a generalized circle in that cyclic order."""
    w = cross_ratio(x, y, a, b)
    return is_real(w, tol) and w.real > 1.0


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DegenerateInput("circle radius must be positive")

    def distance(self, z: complex) -> float:
        """Unsigned distance from ``z`` to the circle."""
        return abs(abs(z - self.center) - self.radius)

    def is_orthogonal_to_unit_circle(self, tol: float = 1e-10) -> bool:
        return abs(abs(self.center) ** 2 - self.radius**2 - 1.0) <= tol


@dataclass(frozen=True)
class Line:
    point: complex
    direction: complex  # unit vector

    def __post_init__(self):
        if abs(abs(self.direction) - 1.0) > 1e-12:
            raise DegenerateInput("line direction must be a unit vector")

    def distance(self, z: complex) -> float:
        return abs(((z - self.point) * self.direction.conjugate()).imag)

    def is_orthogonal_to_unit_circle(self, tol: float = 1e-10) -> bool:
        # a line is orthogonal to the unit circle iff it passes through 0
        return self.distance(0j) <= tol


GeneralizedCircle = Union[Circle, Line]


def circumcircle(p, q, r, tol: float = DEFAULT.collinear_tol) -> GeneralizedCircle:
    """Generalized circle through three distinct points.

    Collinear input (triangle area below ``tol`` times the largest squared
    side) gives a :class:`Line`.
    """
    p, q, r = as_point(p), as_point(q), as_point(r)
    sides = (abs(q - p), abs(r - q), abs(p - r))
    if min(sides) <= 1e-14:
        raise DegenerateInput("circumcircle needs three distinct points")
    a, b = q - p, r - p
    cross = (a.conjugate() * b).imag
    area = abs(cross) / 2.0
    if area < tol * max(sides) ** 2:
        # direction along the longest side so the line is well conditioned
        u, v = max(((p, q), (q, r), (p, r)), key=lambda uv: abs(uv[1] - uv[0]))
        d = (v - u) / abs(v - u)
        return Line(point=p, direction=d)
    offset = (abs(a) ** 2 * b - abs(b) ** 2 * a) / (a.conjugate() * b - a * b.conjugate())
    return Circle(center=p + offset, radius=abs(offset))


def invert_unit_circle(z) -> complex:
    """Reflection in the unit circle, ``z -> 1/conj(z)``."""
    z = as_point(z)
    if abs(z) <= 1e-300:
        raise DegenerateInput("cannot invert the origin")
    return 1.0 / z.conjugate()


@dataclass(frozen=True)
class Similarity:
    """``z -> scale * rotation * J(z) + translation`` with ``J`` conjugation if ``reflect``."""

    scale: float = 1.0
    rotation: complex = 1 + 0j
    translation: complex = 0j
    reflect: bool = False

    def __post_init__(self):
        if not self.scale > 0:
            raise DegenerateInput("similarity scale must be positive")
        if abs(abs(self.rotation) - 1.0) > 1e-12:
            raise DegenerateInput("similarity rotation must be a unit complex")

    def __call__(self, z) -> complex:
        z = as_point(z)
        if self.reflect:
            z = z.conjugate()
        return self.scale * self.rotation * z + self.translation

    def __matmul__(self, other: "Similarity") -> "Similarity":
        """``(self @ other)(z) == self(other(z))``."""
        rot = other.rotation.conjugate() if self.reflect else other.rotation
        return Similarity(
            scale=self.scale * other.scale,
            rotation=self.rotation * rot,
            translation=self(other.translation),
            reflect=self.reflect != other.reflect,
        )


def apply_similarity(s: Similarity, z) -> complex:
    return s(z)


@dataclass(frozen=True)
class MobiusMap:
    """``z -> (a z + b)/(c z + d)`` on the extended plane."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) <= 1e-12 * max(
            1.0, abs(self.a * self.d), abs(self.b * self.c)
        ):
            raise DegenerateInput("Möbius map must have ad - bc != 0")

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    def normalized(self) -> "MobiusMap":
        s = cmath.sqrt(self.a * self.d - self.b * self.c)
        return MobiusMap(self.a / s, self.b / s, self.c / s, self.d / s)

    def __call__(self, z):
        if z is INFINITY:
            if abs(self.c) < DEFAULT.infinity_tol:
                return INFINITY
            return self.a / self.c
        z = as_point(z)
        den = self.c * z + self.d
        if abs(den) < DEFAULT.infinity_tol:
            return INFINITY
        return (self.a * z + self.b) / den

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)


def apply_mobius(m: MobiusMap, z):
    return m(z)


def disk_automorphism(c, rotation: complex = 1 + 0j) -> MobiusMap:
    """``z -> rotation * (z - c)/(1 - conj(c) z)`` for ``|c| < 1``."""
    c = as_point(c)
    if abs(c) >= 1.0:
        raise DegenerateInput("automorphism centre must lie inside the unit disk")
    return MobiusMap(rotation, -rotation * c, -c.conjugate(), 1)


def disk_swap(x, y) -> MobiusMap:
    """The disk automorphism of order two exchanging ``x`` and ``y``."""
    x, y = as_point(x), as_point(y)
    to_origin = disk_automorphism(x)
    w = to_origin(y)
    # z -> (w - z)/(1 - conj(w) z) swaps 0 and w and is an involution
    flip = MobiusMap(-1, w, -w.conjugate(), 1)
    return to_origin.inverse() @ flip @ to_origin


def cross_ratio_map(y, a, b) -> MobiusMap:
    """The Möbius map sending ``a -> 0``, ``b -> INFINITY``, ``y -> 1``.

    Its value at ``x`` is ``cross_ratio(x, y, a, b)``.
    """
    y, a, b = as_point(y), as_point(a), as_point(b)
    k = (y - b) / (y - a)
    return MobiusMap(k, -k * a, 1, -b)
