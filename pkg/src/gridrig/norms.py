"""Plane norms and the differential geometry of their unit spheres.

Four norm variants are supported: the Euclidean norm, p-norms with
1 < p < inf, axis-weighted p-norms, and the max norm.  Besides plain
evaluation the module provides unit-sphere gradients and tangent
directions, parametrised by the radial angle measured counterclockwise
from the downward radius (so the standard polar angle is theta - pi/2).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidNorm, NonSmoothPoint, ZeroVector

# |x| and |y| closer than this (relatively) counts as a max-norm corner.
CORNER_TOL = 1e-12


@dataclass(frozen=True)
class Norm:
    """A plane norm: one of euclidean, p, weighted_p, linf."""

    kind: str
    p: float = None
    a: float = None
    b: float = None

    def __post_init__(self):
        if self.kind == "euclidean" or self.kind == "linf":
            if self.p is not None or self.a is not None or self.b is not None:
                raise InvalidNorm("%s norm takes no parameters" % self.kind)
        elif self.kind == "p":
            if self.p is None or not (1.0 < self.p < math.inf):
                raise InvalidNorm("p-norm requires 1 < p < inf, got %r" % (self.p,))
            if self.a is not None or self.b is not None:
                raise InvalidNorm("p-norm takes no weights")
        elif self.kind == "weighted_p":
            if self.p is None or not (1.0 < self.p < math.inf):
                raise InvalidNorm("weighted p-norm requires 1 < p < inf, got %r" % (self.p,))
            if self.a is None or self.b is None or self.a <= 0 or self.b <= 0:
                raise InvalidNorm("weighted p-norm requires weights a, b > 0")
        else:
            raise InvalidNorm("unknown norm kind %r" % (self.kind,))

    @classmethod
    def euclidean(cls):
        return cls("euclidean")

    @classmethod
    def p_norm(cls, p):
        return cls("p", p=float(p))

    @classmethod
    def weighted_p(cls, p, a, b):
        return cls("weighted_p", p=float(p), a=float(a), b=float(b))

    @classmethod
    def linf(cls):
        return cls("linf")

    @property
    def is_linf(self):
        return self.kind == "linf"

    @property
    def behaves_euclidean(self):
        """True when rotations are isometries, so the rigid motions include
        an infinitesimal rotation (plain Euclidean or a disguised multiple)."""
        if self.kind == "euclidean":
            return True
        if self.kind == "p" and self.p == 2.0:
            return True
        if self.kind == "weighted_p" and self.p == 2.0 and self.a == self.b:
            return True
        return False

    @property
    def is_smooth_strictly_convex(self):
        """Differentiable with strictly convex unit sphere (all p-norm
        variants with finite p > 1, and the Euclidean norm)."""
        return self.kind != "linf"

    def to_json(self):
        doc = {"kind": self.kind}
        if self.p is not None:
            doc["p"] = self.p
        if self.a is not None:
            doc["a"] = self.a
            doc["b"] = self.b
        return doc

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict) or "kind" not in doc:
            raise InvalidNorm("norm must be an object with a 'kind' key")
        allowed = {"kind", "p", "a", "b"}
        extra = set(doc) - allowed
        if extra:
            raise InvalidNorm("unknown norm keys: %s" % ", ".join(sorted(extra)))
        kind = doc["kind"]
        params = {k: doc[k] for k in ("p", "a", "b") if k in doc}
        for k, v in params.items():
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise InvalidNorm("norm parameter %r must be a number" % k)
        try:
            return cls(kind, **{k: float(v) for k, v in params.items()})
        except TypeError:
            raise InvalidNorm("norm parameters do not match kind %r" % kind)


@dataclass(frozen=True)
class RadialAngle:
    """Angle in [0, 2pi) measured counterclockwise from the downward radius."""

    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", self.theta % (2.0 * math.pi))

    @property
    def polar(self):
        """Standard polar angle of the corresponding radial direction."""
        return self.theta - 0.5 * math.pi

    def direction(self):
        """Euclidean-unit radial direction (downward radius rotated ccw by theta)."""
        return np.array([math.sin(self.theta), -math.cos(self.theta)])


def norm_value(norm, z):
    """Evaluate ||z|| for a 2-vector z."""
    x, y = float(z[0]), float(z[1])
    if norm.kind == "euclidean":
        return math.hypot(x, y)
    if norm.kind == "linf":
        return max(abs(x), abs(y))
    if norm.kind == "p":
        return _p_value(x, y, norm.p, 1.0, 1.0)
    return _p_value(x, y, norm.p, norm.a, norm.b)


def _p_value(x, y, p, a, b):
    # Scale by the max component so the powers stay in range.
    m = max(abs(x), abs(y))
    if m == 0.0:
        return 0.0
    return m * (a * abs(x / m) ** p + b * abs(y / m) ** p) ** (1.0 / p)


def norm_gradient(norm, z):
    """Gradient of ||.|| at a nonzero smooth point z.

    Satisfies the Euler identity <grad, z> = ||z||.  For the max norm the
    point must be off the corner diagonals |x| = |y|.
    """
    x, y = float(z[0]), float(z[1])
    if x == 0.0 and y == 0.0:
        raise ZeroVector("norm gradient undefined at the origin")
    if norm.kind == "euclidean":
        r = math.hypot(x, y)
        return np.array([x / r, y / r])
    if norm.kind == "linf":
        ax, ay = abs(x), abs(y)
        if abs(ax - ay) <= CORNER_TOL * max(ax, ay):
            raise NonSmoothPoint("max-norm gradient undefined on |x| = |y|")
        if ax > ay:
            return np.array([math.copysign(1.0, x), 0.0])
        return np.array([0.0, math.copysign(1.0, y)])
    a = 1.0 if norm.kind == "p" else norm.a
    b = 1.0 if norm.kind == "p" else norm.b
    r = norm_value(norm, z)
    q = norm.p - 1.0
    gx = a * math.copysign(abs(x / r) ** q, x)
    gy = b * math.copysign(abs(y / r) ** q, y)
    return np.array([gx, gy])


def sphere_point(norm, angle):
    """Point of the unit sphere at the given radial angle."""
    d = angle.direction()
    return d / norm_value(norm, d)


def tangent_direction(norm, angle):
    """Unit tangent to the unit sphere at radial angle theta.

    Returns (vector, tau): the Euclidean-unit tangent vector with direction
    angle tau reduced to [0, pi).  The tangent is the quarter-turn of the
    norm gradient at the sphere point; for the Euclidean norm tau equals
    theta mod pi.
    """
    if not isinstance(angle, RadialAngle):
        angle = RadialAngle(float(angle))
    q = sphere_point(norm, angle)
    g = norm_gradient(norm, q)
    t = np.array([-g[1], g[0]])
    tau = math.atan2(t[1], t[0]) % math.pi
    return np.array([math.cos(tau), math.sin(tau)]), tau


def is_four_fold_symmetric(norm, tol=1e-12):
    """Whether a quarter turn is an isometry, sampled on 360 unit directions."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    worst = 0.0
    for k in range(360):
        phi = 2.0 * math.pi * k / 360.0
        z = (math.cos(phi), math.sin(phi))
        rz = (-z[1], z[0])
        worst = max(worst, abs(norm_value(norm, rz) - norm_value(norm, z)))
    return worst <= tol
