import pytest

from monass.errors import ParseError
from monass.graphs import cycle_graph, wheel_graph
from monass.ideal import format_ideal
from monass.parsing import infer_ring, parse_graph, parse_ideal, parse_ring, parse_script
from monass.properties import random_ideal
from monass.ring import RingContext


def test_ring_forms():
    assert parse_ring("ring x,y,z").variables == ("x", "y", "z")
    assert parse_ring("x y z").variables == ("x", "y", "z")
    assert parse_ring("ring x1..x6").n == 6
    assert parse_ring("x1..6").variables[-1] == "x6"


@pytest.mark.parametrize("text", ["ring", "ring x3..x1", "ring x,1y", "ring x,x"])
def test_bad_rings(text):
    with pytest.raises(ParseError):
        parse_ring(text)


def test_infer_ring_uses_natural_order():
    assert infer_ring("(x10*x2, x1)").variables == ("x1", "x2", "x10")
    assert infer_ring("(1)").variables == ("x",)


def test_ideal_literals():
    R = RingContext("xyz")
    assert parse_ideal(R, "(0)").is_zero()
    assert parse_ideal(R, "(1, x)").is_unit()
    assert format_ideal(parse_ideal(R, " ( x^2 , y*x ) ")) == "(x^2, x*y)"


@pytest.mark.parametrize(
    "text, column",
    [("x, y)", 1), ("(x, y", 6), ("(x, (y))", 5), ("(x, w)", 5), ("(x, y^)", 7)],
)
def test_ideal_errors_point_at_the_column(text, column):
    with pytest.raises(ParseError) as info:
        parse_ideal(RingContext("xyz"), text)
    assert info.value.column == column


def test_round_trip_random_ideals():
    import random

    rng = random.Random(5)
    for _ in range(200):
        I = random_ideal(rng)
        assert parse_ideal(I.ctx, format_ideal(I)) == I


def test_graph_forms():
    assert parse_graph("cycle:5") == cycle_graph(5)
    assert parse_graph("wheel:6") == wheel_graph(6)
    G = parse_graph("graph 4; 1-2 2-3 3-4")
    assert parse_graph(str(G)) == G
    with pytest.raises(ParseError):
        parse_graph("graph 3; 1-2 2_3")
    with pytest.raises(ParseError):
        parse_graph("cycle:2")
    with pytest.raises(ParseError):
        parse_graph("path:4")


def test_script_structure():
    script = parse_script("# comment\nring x,y\nI = (x^2, x*y)  # trailing\nass I\n\ncheck chain I\n")
    assert script.ring.variables == ("x", "y")
    assert [(s.line, s.target, s.words) for s in script.statements] == [
        (3, "I", ["(x^2, x*y)"]),
        (4, None, ["ass", "I"]),
        (6, None, ["check", "chain", "I"]),
    ]


@pytest.mark.parametrize(
    "text, line",
    [("I = (x)\n", 1), ("ring x\nring y\n", 2), ("# only comments\n", 1)],
)
def test_script_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_script(text)
    assert info.value.line == line
