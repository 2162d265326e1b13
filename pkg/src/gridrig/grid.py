"""Grid combinatorics and geometry.

An m x n grid has m+1 vertical lines (indexed 0..m left to right), n+1
horizontal lines (0..n bottom to top), m vertical ribbons (ribbon i lies
between vertical lines i-1 and i), n horizontal ribbons, and m*n cells.
Cell (i, j) uses 1-based column i and row j with row 1 at the bottom.
Joints are (v, h) pairs naming the vertical and horizontal line they sit
on.  Braces are diagonals of cells: Blue is the top-left to bottom-right
diagonal, Red the bottom-left to top-right one.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    MalformedDocument,
    UnknownBraceChar,
)
from .norms import Norm

BLUE = "blue"
RED = "red"

_BRACE_CHARS = {
    ".": frozenset(),
    "b": frozenset([BLUE]),
    "\\": frozenset([BLUE]),
    "r": frozenset([RED]),
    "/": frozenset([RED]),
    "x": frozenset([BLUE, RED]),
}


@dataclass(frozen=True)
class GridSpec:
    """Grid dimensions, spacings, inclination and the ambient norm."""

    m: int
    n: int
    col_widths: tuple
    row_heights: tuple
    alpha: float
    norm: Norm

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise MalformedDocument("grid dimensions must be at least 1 x 1")
        if len(self.col_widths) != self.m:
            raise DimensionMismatch("need %d column widths, got %d"
                                    % (self.m, len(self.col_widths)))
        if len(self.row_heights) != self.n:
            raise DimensionMismatch("need %d row heights, got %d"
                                    % (self.n, len(self.row_heights)))
        if any(w <= 0 for w in self.col_widths) or any(h <= 0 for h in self.row_heights):
            raise MalformedDocument("spacings must be positive")
        if not (0.0 <= self.alpha < 0.5 * math.pi):
            raise MalformedDocument("inclination must lie in [0, pi/2)")

    @classmethod
    def make(cls, m, n, col_widths=None, row_heights=None, alpha=0.0, norm=None):
        if col_widths is None:
            col_widths = (1.0,) * m
        if row_heights is None:
            row_heights = (1.0,) * n
        if norm is None:
            norm = Norm.euclidean()
        return cls(m, n, tuple(float(w) for w in col_widths),
                   tuple(float(h) for h in row_heights), float(alpha), norm)

    def cell_size(self, i, j):
        """Width and height of cell (i, j)."""
        return self.col_widths[i - 1], self.row_heights[j - 1]

    @property
    def cells_all_square(self):
        sizes = set(self.col_widths) | set(self.row_heights)
        return len(sizes) == 1


@dataclass(frozen=True)
class Brace:
    """One diagonal brace: cell (i, j) plus a colour."""

    i: int
    j: int
    colour: str


class BracingPattern:
    """Per-cell subsets of {Blue, Red} for an m x n grid."""

    def __init__(self, m, n, cells=None):
        self.m = m
        self.n = n
        self._cells = {}
        if cells:
            for (i, j), colours in cells.items():
                for c in colours:
                    self.add(i, j, c)

    def add(self, i, j, colour):
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise ValueError("cell (%d, %d) outside %d x %d grid" % (i, j, self.m, self.n))
        if colour not in (BLUE, RED):
            raise ValueError("unknown colour %r" % colour)
        self._cells.setdefault((i, j), set()).add(colour)

    def colours(self, i, j):
        return frozenset(self._cells.get((i, j), ()))

    def has(self, i, j, colour):
        return colour in self._cells.get((i, j), ())

    def without(self, brace):
        """Copy of the pattern with one brace removed."""
        out = BracingPattern(self.m, self.n)
        for (i, j), colours in self._cells.items():
            for c in colours:
                if (i, j, c) != (brace.i, brace.j, brace.colour):
                    out.add(i, j, c)
        return out

    def __eq__(self, other):
        return (isinstance(other, BracingPattern)
                and (self.m, self.n) == (other.m, other.n)
                and {k: frozenset(v) for k, v in self._cells.items() if v}
                == {k: frozenset(v) for k, v in other._cells.items() if v})

    def __len__(self):
        return sum(len(v) for v in self._cells.values())


@dataclass(frozen=True)
class GridTopology:
    """Index sets of lines, ribbons, cells, joints and grid bars."""

    m: int
    n: int
    vertical_lines: tuple = field(init=False)
    horizontal_lines: tuple = field(init=False)
    vertical_ribbons: tuple = field(init=False)
    horizontal_ribbons: tuple = field(init=False)
    cells: tuple = field(init=False)
    joints: tuple = field(init=False)
    bars: tuple = field(init=False)

    def __post_init__(self):
        m, n = self.m, self.n
        object.__setattr__(self, "vertical_lines", tuple(range(m + 1)))
        object.__setattr__(self, "horizontal_lines", tuple(range(n + 1)))
        object.__setattr__(self, "vertical_ribbons", tuple(range(1, m + 1)))
        object.__setattr__(self, "horizontal_ribbons", tuple(range(1, n + 1)))
        object.__setattr__(self, "cells", tuple((i, j)
                           for j in range(1, n + 1) for i in range(1, m + 1)))
        object.__setattr__(self, "joints", tuple((v, h)
                           for h in range(n + 1) for v in range(m + 1)))
        bars = []
        for h in range(n + 1):          # bars along horizontal lines
            for v in range(m):
                bars.append(((v, h), (v + 1, h)))
        for v in range(m + 1):          # bars along vertical lines
            for h in range(n):
                bars.append(((v, h), (v, h + 1)))
        object.__setattr__(self, "bars", tuple(bars))

    def cell_ribbons(self, i, j):
        """(vertical ribbon, horizontal ribbon) pair touched by cell (i, j)."""
        return i, j


def build_topology(m, n):
    """Topology of the m x n grid with the package's fixed indexing."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be at least 1 x 1")
    return GridTopology(m, n)


def joint_placement(spec):
    """Map joint (v, h) to its point in the plane.

    The south-west joint sits at the origin; the grid is rotated
    counterclockwise by the inclination.
    """
    xs = np.concatenate([[0.0], np.cumsum(spec.col_widths)])
    ys = np.concatenate([[0.0], np.cumsum(spec.row_heights)])
    c, s = math.cos(spec.alpha), math.sin(spec.alpha)
    placement = {}
    for h in range(spec.n + 1):
        for v in range(spec.m + 1):
            x, y = xs[v], ys[h]
            placement[(v, h)] = np.array([c * x - s * y, s * x + c * y])
    return placement


def braces_list(pattern, max=False):
    """Braces in deterministic (row, column, Blue before Red) order.

    With max=True the pattern is ignored and all 2mn braces are returned.
    """
    out = []
    for j in range(1, pattern.n + 1):
        for i in range(1, pattern.m + 1):
            for colour in (BLUE, RED):
                if max or pattern.has(i, j, colour):
                    out.append(Brace(i, j, colour))
    return out


def parse_spec(document):
    """Parse a grid-spec JSON document into (GridSpec, BracingPattern)."""
    try:
        doc = json.loads(document)
    except (json.JSONDecodeError, TypeError) as exc:
        raise MalformedDocument("not valid JSON: %s" % exc)
    if not isinstance(doc, dict):
        raise MalformedDocument("top-level value must be an object")
    allowed = {"m", "n", "col_widths", "row_heights", "alpha", "norm", "bracing"}
    extra = set(doc) - allowed
    if extra:
        raise MalformedDocument("unknown keys: %s" % ", ".join(sorted(extra)))
    for key in ("m", "n", "norm", "bracing"):
        if key not in doc:
            raise MalformedDocument("missing required key %r" % key)
    m, n = doc["m"], doc["n"]
    if not isinstance(m, int) or not isinstance(n, int) or isinstance(m, bool) or isinstance(n, bool):
        raise MalformedDocument("m and n must be integers")
    if m < 1 or n < 1:
        raise MalformedDocument("m and n must be at least 1")

    col_widths = doc.get("col_widths", [1.0] * m)
    row_heights = doc.get("row_heights", [1.0] * n)
    for name, arr in (("col_widths", col_widths), ("row_heights", row_heights)):
        if not isinstance(arr, list) or not all(
                isinstance(v, (int, float)) and not isinstance(v, bool) for v in arr):
            raise MalformedDocument("%s must be an array of numbers" % name)
    if len(col_widths) != m:
        raise DimensionMismatch("col_widths has %d entries for m=%d" % (len(col_widths), m))
    if len(row_heights) != n:
        raise DimensionMismatch("row_heights has %d entries for n=%d" % (len(row_heights), n))

    alpha = doc.get("alpha", 0.0)
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool):
        raise MalformedDocument("alpha must be a number")

    norm = Norm.from_json(doc["norm"])

    bracing = doc["bracing"]
    if not isinstance(bracing, list) or not all(isinstance(r, str) for r in bracing):
        raise MalformedDocument("bracing must be an array of strings")
    if len(bracing) != n:
        raise DimensionMismatch("bracing has %d rows for n=%d" % (len(bracing), n))
    pattern = BracingPattern(m, n)
    for k, row in enumerate(bracing):       # top row first
        if len(row) != m:
            raise DimensionMismatch("bracing row %d has length %d for m=%d"
                                    % (k, len(row), m))
        j = n - k
        for idx, ch in enumerate(row):
            if ch not in _BRACE_CHARS:
                raise UnknownBraceChar("bracing char %r at row %d col %d" % (ch, k, idx))
            for colour in _BRACE_CHARS[ch]:
                pattern.add(idx + 1, j, colour)

    spec = GridSpec.make(m, n, col_widths, row_heights, alpha, norm)
    return spec, pattern


def serialize_spec(spec, pattern):
    """Canonical JSON document for a spec/pattern pair (parse round-trips)."""
    rows = []
    for k in range(spec.n):
        j = spec.n - k
        chars = []
        for i in range(1, spec.m + 1):
            colours = pattern.colours(i, j)
            if colours == frozenset([BLUE, RED]):
                chars.append("x")
            elif colours == frozenset([BLUE]):
                chars.append("b")
            elif colours == frozenset([RED]):
                chars.append("r")
            else:
                chars.append(".")
        rows.append("".join(chars))
    doc = {
        "m": spec.m,
        "n": spec.n,
        "col_widths": list(spec.col_widths),
        "row_heights": list(spec.row_heights),
        "alpha": spec.alpha,
        "norm": spec.norm.to_json(),
        "bracing": rows,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
