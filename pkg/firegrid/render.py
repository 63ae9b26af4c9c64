"""
FIREGRID Rendering
ASCII grids and SVG figures of a trace: burned cells labeled with the turn
they caught fire, protected cells with the turn they were placed.
"""

import logging
from typing import Dict, Iterable, Optional, Tuple

from lxml import etree

from firegrid.errors import BoundsTooSmall, PreconditionViolated
from firegrid.lattice import Cell
from firegrid.trace import Trace

logger = logging.getLogger(__name__)

# (x_min, y_min, x_max, y_max), inclusive
Bounds = Tuple[int, int, int, int]

DEFAULT_CELL_PX = 24
MIN_CELL_PX = 8

SVG_NS = "http://www.w3.org/2000/svg"

# Red family for fire, green family for firefighters
PALETTE = {
    "burned": "#d73027",
    "protected": "#1a9850",
    "ignition": "#7f0000",
    "label": "#ffffff",
    "grid": "#bdbdbd",
    "text": "#000000",
}

LEGEND = (
    ("burned", "Node burned at time i"),
    ("protected", "Node protected at time i"),
    ("ignition", "Ignition"),
)


def cell_marks(trace: Trace) -> Dict[Cell, Tuple[str, int]]:
    """Map every touched cell to (kind, turn); an empty trace touches nothing"""
    marks: Dict[Cell, Tuple[str, int]] = {}
    if not trace.records:
        return marks
    marks[trace.ignition] = ("ignition", 0)
    for record in trace.records:
        for c in record.placements:
            marks[Cell(*c)] = ("protected", record.turn)
        for c in record.newly_burned:
            marks[Cell(*c)] = ("burned", record.turn)
    return marks


def _fit_bounds(cells: Iterable[Cell], fallback: Cell) -> Bounds:
    cells = list(cells) or [fallback]
    xs = [c.x for c in cells]
    ys = [c.y for c in cells]
    return min(xs), min(ys), max(xs), max(ys)


def _check_bounds(marks: Dict[Cell, Tuple[str, int]], bounds: Bounds) -> None:
    x_min, y_min, x_max, y_max = bounds
    if x_min > x_max or y_min > y_max:
        raise BoundsTooSmall(f"empty bounds {bounds}")
    outside = [c for c in marks if not (x_min <= c.x <= x_max and y_min <= c.y <= y_max)]
    if outside:
        raise BoundsTooSmall(f"{len(outside)} touched cells fall outside {bounds}, e.g. {min(outside)}")


def _glyph(mark: Optional[Tuple[str, int]]) -> str:
    if mark is None:
        return "."
    kind, turn = mark
    if kind == "ignition":
        return "*"
    return f"{'b' if kind == 'burned' else 'p'}{turn}"


def render_ascii(trace: Trace, bounds: Optional[Bounds] = None) -> str:
    """
    Fixed-width text grid of a trace.

    Glyphs: `.` untouched, `bT` burned at turn T, `pT` protected at turn T,
    `*` ignition. The top row is the largest y.

    Args:
        trace: trace to draw
        bounds: (x_min, y_min, x_max, y_max); defaults to the touched cells

    Raises:
        BoundsTooSmall: a touched cell lies outside the bounds
    """
    marks = cell_marks(trace)
    if bounds is None:
        bounds = _fit_bounds(marks, trace.ignition)
    _check_bounds(marks, bounds)
    x_min, y_min, x_max, y_max = bounds

    width = max([len(_glyph(m)) for m in marks.values()] + [1])
    lines = []
    for y in range(y_max, y_min - 1, -1):
        row = [_glyph(marks.get(Cell(x, y))).ljust(width) for x in range(x_min, x_max + 1)]
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines) + "\n"


def _svg(tag: str, parent=None, **attributes):
    attributes = {k.rstrip("_").replace("_", "-"): str(v) for k, v in attributes.items()}
    if parent is None:
        return etree.Element(f"{{{SVG_NS}}}{tag}", attributes, nsmap={None: SVG_NS})
    return etree.SubElement(parent, f"{{{SVG_NS}}}{tag}", attributes)


def _legend(root, top: int, cell_px: int) -> int:
    group = _svg("g", root, id="legend")
    y = top
    for kind, text in LEGEND:
        _svg("rect", group, class_="legend-swatch", x=cell_px // 2, y=y,
             width=cell_px, height=cell_px, fill=PALETTE[kind])
        label = _svg("text", group, x=cell_px * 2, y=y + cell_px * 3 // 4,
                     font_family="sans-serif", font_size=max(cell_px // 2, 8), fill=PALETTE["text"])
        label.text = text
        y += cell_px + cell_px // 4
    return y


def render_svg(trace: Trace, bounds: Optional[Bounds] = None, cell_px: int = DEFAULT_CELL_PX) -> str:
    """
    SVG figure of a trace: one square per touched cell with its turn centered, plus a legend.

    Args:
        trace: trace to draw; a trace without turns yields a legend-only document
        bounds: (x_min, y_min, x_max, y_max); defaults to the touched cells
        cell_px: side of one lattice cell in pixels (>= 8)

    Returns:
        SVG document text

    Raises:
        BoundsTooSmall: a touched cell lies outside the bounds
    """
    if cell_px < MIN_CELL_PX:
        raise PreconditionViolated(f"cell_px must be >= {MIN_CELL_PX}, got {cell_px}")
    marks = cell_marks(trace)
    if marks:
        if bounds is None:
            bounds = _fit_bounds(marks, trace.ignition)
        _check_bounds(marks, bounds)
        x_min, y_min, x_max, y_max = bounds
        columns, rows = x_max - x_min + 1, y_max - y_min + 1
    else:
        x_min = y_max = 0
        columns = rows = 0

    margin = cell_px // 2
    grid_height = rows * cell_px
    legend_height = len(LEGEND) * (cell_px + cell_px // 4)
    width = max(columns * cell_px, cell_px * 12) + 2 * margin
    height = grid_height + legend_height + 3 * margin

    root = _svg("svg", width=width, height=height, viewBox=f"0 0 {width} {height}")
    root.append(etree.Comment(
        f" firegrid: {trace.strategy_id} vs {trace.adversary_id}, ignition {trace.ignition}."
        f" Lattice cell (x,y) is drawn at px=({margin}+(x-({x_min}))*{cell_px}, {margin}+(({y_max})-y)*{cell_px});"
        f" y points up. "
    ))

    cells = _svg("g", root, id="cells")
    for c in sorted(marks):
        kind, turn = marks[c]
        px = margin + (c.x - x_min) * cell_px
        py = margin + (y_max - c.y) * cell_px
        _svg("rect", cells, class_="cell", x=px, y=py, width=cell_px, height=cell_px,
             fill=PALETTE[kind], stroke=PALETTE["grid"], data_kind=kind, data_cell=f"{c.x},{c.y}")
        label = _svg("text", cells, x=px + cell_px // 2, y=py + cell_px // 2,
                     text_anchor="middle", dominant_baseline="central",
                     font_family="sans-serif", font_size=max(cell_px // 2, 6), fill=PALETTE["label"])
        label.text = str(turn)

    _legend(root, grid_height + 2 * margin, cell_px)
    logger.debug(f"📊 svg: {len(marks)} cells, {width}x{height}px")
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")
