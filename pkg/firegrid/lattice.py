"""
Lattice geometry for FIREGRID

Exact integer geometry of the square lattice under the L1 metric: distances,
rings, diamonds, 4-neighbourhoods and the wall polygon used by the
incremental wall strategy. Everything here is a pure function on immutable
values.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, NamedTuple, Set, Tuple

from firegrid.errors import PreconditionViolated

logger = logging.getLogger(__name__)


class Cell(NamedTuple):
    """A lattice point; tuple ordering gives the lexicographic (x, y) order"""

    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"

    def shifted(self, dx: int, dy: int) -> "Cell":
        return Cell(self.x + dx, self.y + dy)


ORIGIN = Cell(0, 0)

# Outward diagonal per ring quadrant, counterclockwise from the positive x axis
QUADRANT_DIAGONALS: Tuple[Tuple[int, int], ...] = ((1, 1), (-1, 1), (-1, -1), (1, -1))

# The 8 lattice symmetries fixing the origin
SYMMETRIES: Tuple[Callable[[int, int], Tuple[int, int]], ...] = (
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
)


def l1_distance(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def neighbors(c: Cell) -> Tuple[Cell, Cell, Cell, Cell]:
    """4-neighbourhood in the fixed order east, west, north, south"""
    x, y = c
    return (Cell(x + 1, y), Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 1))


def ring_cell_at(radius: int, index: int, center: Cell = ORIGIN) -> Cell:
    """
    Cell at a cyclic position on a ring.

    Args:
        radius: ring radius, at least 1
        index: position 0..4*radius-1, counterclockwise from (radius, 0)
        center: ring center

    Returns:
        The lattice cell at that position
    """
    quadrant, k = divmod(index % (4 * radius), radius)
    if quadrant == 0:
        dx, dy = radius - k, k
    elif quadrant == 1:
        dx, dy = -k, radius - k
    elif quadrant == 2:
        dx, dy = -radius + k, -k
    else:
        dx, dy = k, -radius + k
    return Cell(center[0] + dx, center[1] + dy)


def ring_index(c: Cell, center: Cell = ORIGIN) -> int:
    """Inverse of ring_cell_at; 0 for the center itself"""
    dx, dy = c[0] - center[0], c[1] - center[1]
    radius = abs(dx) + abs(dy)
    if radius == 0:
        return 0
    if dx > 0 and dy >= 0:
        return dy
    if dx <= 0 and dy > 0:
        return radius - dx
    if dx < 0 and dy <= 0:
        return 2 * radius - dy
    return 3 * radius + dx


def ring_angle(c: Cell, center: Cell = ORIGIN) -> Fraction:
    """Exact angular position in [0, 1) measured along the diamond, counterclockwise"""
    radius = l1_distance(c, center)
    if radius == 0:
        return Fraction(0)
    return Fraction(ring_index(c, center), 4 * radius)


def outward_diagonal(c: Cell, center: Cell = ORIGIN) -> Tuple[int, int]:
    """Diagonal step that moves a ring cell two units further from the center"""
    radius = l1_distance(c, center)
    if radius == 0:
        raise PreconditionViolated("the center has no outward diagonal")
    return QUADRANT_DIAGONALS[ring_index(c, center) // radius]


def ring_cells(center: Cell, radius: int) -> List[Cell]:
    """
    All cells at exact L1 distance `radius`, in counterclockwise order from (radius, 0).

    Returns:
        A list of 4*radius cells, or just the center when radius is 0
    """
    if radius < 0:
        raise PreconditionViolated(f"ring radius must be non-negative, got {radius}")
    if radius == 0:
        return [Cell(*center)]
    return [ring_cell_at(radius, k, center) for k in range(4 * radius)]


def diamond_cells(center: Cell, radius: int) -> List[Cell]:
    """Closed L1 ball, sorted lexicographically"""
    if radius < 0:
        raise PreconditionViolated(f"diamond radius must be non-negative, got {radius}")
    cx, cy = center
    cells = []
    for dx in range(-radius, radius + 1):
        span = radius - abs(dx)
        for dy in range(-span, span + 1):
            cells.append(Cell(cx + dx, cy + dy))
    return cells


def transform_cells(cells: Iterable[Cell], symmetry: Callable[[int, int], Tuple[int, int]]) -> List[Cell]:
    return [Cell(*symmetry(c[0], c[1])) for c in cells]


def sorted_cells(cells: Iterable[Cell]) -> List[Cell]:
    return sorted(Cell(*c) for c in cells)


def ccw_key(c: Cell, center: Cell = ORIGIN) -> Tuple[Fraction, int]:
    """Sort key: diamond angle first, then distance"""
    return (ring_angle(c, center), l1_distance(c, center))


@dataclass(frozen=True)
class Polygon:
    """
    Region bounded by the outer diamond of radius `turn_index` and the two
    walls y = x - M and y = -x + M that meet at (M, 0).

    The wedge behind the walls (x - |y| > M) is excluded, so the two wall
    inequalities combine as a disjunction.
    """

    turn_index: int
    wall_offset: int

    def __post_init__(self):
        if not 1 <= self.wall_offset <= self.turn_index:
            raise PreconditionViolated(
                f"polygon needs 1 <= M <= i, got i={self.turn_index} M={self.wall_offset}"
            )


def polygon_contains(p: Polygon, c: Cell) -> bool:
    i, m = p.turn_index, p.wall_offset
    x, y = c
    inside_diamond = y <= x + i and y >= -x - i and y >= x - i and y <= -x + i
    # behind both walls means outside
    inside_walls = y >= x - m or y <= -x + m
    return inside_diamond and inside_walls


def polygon_cells(p: Polygon) -> Set[Cell]:
    return {c for c in diamond_cells(ORIGIN, p.turn_index) if polygon_contains(p, c)}


def polygon_perimeter_cells(p: Polygon) -> List[Cell]:
    """
    Region cells with a 4-neighbour outside the region, counterclockwise from (M, 0).

    Args:
        p: polygon with 1 <= M <= i

    Returns:
        Ordered boundary cells; for M == i this is the ring of radius i
    """
    region = polygon_cells(p)
    boundary = [c for c in region if any(n not in region for n in neighbors(c))]
    start = Cell(p.wall_offset, 0)
    boundary.sort(key=lambda c: (ccw_key(c), c))
    if start in boundary:
        k = boundary.index(start)
        boundary = boundary[k:] + boundary[:k]
    logger.debug(f"polygon i={p.turn_index} M={p.wall_offset}: {len(boundary)} perimeter cells")
    return boundary
