"""Line-coefficient flex space, ribbon sheers, and the maps between them.

A flex of the unbraced grid is a coefficient per line: joints on
horizontal line h and vertical line v move by d_horizontal[h] * u_x +
d_vertical[v] * u_y, where u_x, u_y are the line tangent vectors of the
ambient norm.  The sheer of a ribbon is the signed difference of its two
boundary-line coefficients, positive on the right-hand line of a vertical
ribbon and on the lower line of a horizontal ribbon.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FlexCoefficients:
    """One coefficient per grid line: n+1 horizontal, m+1 vertical."""

    d_horizontal: tuple
    d_vertical: tuple

    @classmethod
    def make(cls, d_horizontal, d_vertical):
        return cls(tuple(float(d) for d in d_horizontal),
                   tuple(float(d) for d in d_vertical))

    @property
    def dimension(self):
        return len(self.d_horizontal) + len(self.d_vertical)


@dataclass(frozen=True)
class SheerField:
    """One sheer value per ribbon: n horizontal, m vertical."""

    s_horizontal: tuple
    s_vertical: tuple

    @classmethod
    def make(cls, s_horizontal, s_vertical):
        return cls(tuple(float(s) for s in s_horizontal),
                   tuple(float(s) for s in s_vertical))

    @classmethod
    def from_vector(cls, vec, m, n):
        """Split a length m+n vector (horizontal ribbons first)."""
        vec = np.asarray(vec, dtype=float)
        return cls(tuple(vec[:n]), tuple(vec[n:n + m]))

    def to_vector(self):
        return np.array(self.s_horizontal + self.s_vertical)


def sheer_map(coeffs):
    """Ribbon sheers of a line-coefficient flex.

    Vertical ribbon i gets d_vertical[i] - d_vertical[i-1]; horizontal
    ribbon j gets d_horizontal[j-1] - d_horizontal[j].  The kernel is the
    2-dimensional space of constant-per-direction coefficient vectors,
    i.e. the translations.
    """
    dh, dv = coeffs.d_horizontal, coeffs.d_vertical
    s_h = tuple(dh[j - 1] - dh[j] for j in range(1, len(dh)))
    s_v = tuple(dv[i] - dv[i - 1] for i in range(1, len(dv)))
    return SheerField(s_h, s_v)


def rotation_field(m, n):
    """The coefficient vector with d_vertical[i] = i, d_horizontal[j] = -j.

    Its sheer field is identically 1.  On a unit Euclidean grid it is the
    infinitesimal rotation fixing the south-west joint.
    """
    return FlexCoefficients(tuple(float(-j) for j in range(n + 1)),
                            tuple(float(i) for i in range(m + 1)))


def unsheer(s):
    """Right inverse of sheer_map with gauge d_horizontal[0] = d_vertical[0] = 0."""
    dh = [0.0]
    for v in s.s_horizontal:
        dh.append(dh[-1] - v)
    dv = [0.0]
    for v in s.s_vertical:
        dv.append(dv[-1] + v)
    return FlexCoefficients(tuple(dh), tuple(dv))


def is_constant_sheer(s, tol=0.0):
    """Whether all m+n sheer entries agree within tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    vals = s.s_horizontal + s.s_vertical
    return max(vals) - min(vals) <= tol


def sheer_matrix(m, n):
    """Matrix of sheer_map: rows are ribbons (horizontal first), columns
    are line coefficients (d_horizontal then d_vertical)."""
    rows = m + n
    cols = (n + 1) + (m + 1)
    mat = np.zeros((rows, cols))
    for j in range(1, n + 1):
        mat[j - 1, j - 1] = 1.0
        mat[j - 1, j] = -1.0
    for i in range(1, m + 1):
        mat[n + i - 1, (n + 1) + i] = 1.0
        mat[n + i - 1, (n + 1) + i - 1] = -1.0
    return mat


def velocities_from_coefficients(spec, coeffs, frame):
    """Joint velocity field of a coefficient vector.

    frame supplies the line tangents u_x, u_y (see stress_sheer.line_tangents).
    The velocity at joint (v, h) is d_horizontal[h] * u_x + d_vertical[v] * u_y.
    """
    ux, uy = np.asarray(frame.u_x), np.asarray(frame.u_y)
    out = {}
    for h in range(spec.n + 1):
        for v in range(spec.m + 1):
            out[(v, h)] = coeffs.d_horizontal[h] * ux + coeffs.d_vertical[v] * uy
    return out


def witness_json(spec, coeffs, velocities):
    """Fixed 6-decimal JSON text for a flex witness.

    Velocities are listed joint by joint, bottom row first and left to
    right within a row, matching joint_placement order.
    """
    def f6(x):
        v = "%.6f" % (x,)
        return "0.000000" if v == "-0.000000" else v

    order = [(v, h) for h in range(spec.n + 1) for v in range(spec.m + 1)]
    parts = []
    parts.append('{\n  "d_horizontal": [%s],' %
                 ", ".join(f6(d) for d in coeffs.d_horizontal))
    parts.append('  "d_vertical": [%s],' %
                 ", ".join(f6(d) for d in coeffs.d_vertical))
    vel = ", ".join("[%s, %s]" % (f6(velocities[j][0]), f6(velocities[j][1]))
                    for j in order)
    parts.append('  "velocities": [%s]\n}' % vel)
    return "\n".join(parts) + "\n"


def velocity_order(spec):
    """Joint order used by witness_json and the oracle."""
    return [(v, h) for h in range(spec.n + 1) for v in range(spec.m + 1)]
