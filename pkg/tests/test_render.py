import pytest
from lxml import etree

from firegrid.adversaries import FixedBudgets
from firegrid.errors import BoundsTooSmall, PreconditionViolated
from firegrid.lattice import ORIGIN
from firegrid.render import SVG_NS, render_ascii, render_svg
from firegrid.strategies import Idle
from firegrid.trace import Trace, play

NS = {"svg": SVG_NS}


def one_idle_turn():
    return play(ORIGIN, Idle(), FixedBudgets([0, 5]), horizon=1)


def test_ascii_of_one_uncontrolled_turn():
    assert render_ascii(one_idle_turn()) == (
        ".  b1 .\n"
        "b1 *  b1\n"
        ".  b1 .\n"
    )


def test_ascii_of_figure1(figure1_golden):
    text = render_ascii(figure1_golden)
    tokens = text.split()
    assert sum(t.startswith("p") for t in tokens) == 16
    assert sum(t.startswith("b") for t in tokens) == 19
    assert tokens.count("*") == 1
    # top row is the largest y: the closure cell (0,4)
    assert text.splitlines()[0].split() == [".", ".", ".", ".", "p4", ".", "."]


def test_ascii_is_byte_stable(example1_golden):
    assert render_ascii(example1_golden) == render_ascii(example1_golden)


def test_ascii_with_explicit_bounds():
    text = render_ascii(one_idle_turn(), bounds=(-2, -1, 2, 1))
    assert text.splitlines()[1] == ".  b1 *  b1 ."


def test_bounds_must_cover_touched_cells(figure1_golden):
    with pytest.raises(BoundsTooSmall):
        render_ascii(figure1_golden, bounds=(-1, -1, 1, 1))
    with pytest.raises(BoundsTooSmall):
        render_svg(figure1_golden, bounds=(-1, -1, 1, 1))


def test_svg_has_one_square_per_touched_cell(example1_golden):
    root = etree.fromstring(render_svg(example1_golden).encode("utf-8"))
    cells = root.findall(".//svg:rect[@class='cell']", NS)
    assert len(cells) == 49 + 24
    kinds = [c.get("data-kind") for c in cells]
    assert kinds.count("protected") == 24
    assert kinds.count("ignition") == 1
    labels = [t.text for t in root.findall(".//svg:g[@id='cells']/svg:text", NS)]
    assert labels.count("7") == 15


def test_svg_legend_and_header(figure1_golden):
    text = render_svg(figure1_golden)
    root = etree.fromstring(text.encode("utf-8"))
    legend = [t.text for t in root.findall(".//svg:g[@id='legend']/svg:text", NS)]
    assert legend == ["Node burned at time i", "Node protected at time i", "Ignition"]
    assert len(root.findall(".//svg:rect[@class='legend-swatch']", NS)) == 3
    assert "y points up" in text


def test_svg_of_an_empty_trace_is_legend_only():
    empty = Trace(ignition=ORIGIN, strategy_id="idle", adversary_id="thm1")
    root = etree.fromstring(render_svg(empty).encode("utf-8"))
    assert root.findall(".//svg:rect[@class='cell']", NS) == []
    assert len(root.findall(".//svg:rect[@class='legend-swatch']", NS)) == 3


def test_svg_is_byte_stable(figure1_golden):
    assert render_svg(figure1_golden) == render_svg(figure1_golden)


def test_svg_cell_size_floor(figure1_golden):
    with pytest.raises(PreconditionViolated):
        render_svg(figure1_golden, cell_px=4)
