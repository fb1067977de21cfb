from fractions import Fraction

import pytest
from hypothesis import given

from mptkit import io
from mptkit.errors import FormatError
from mptkit.geometry import contact_lsystem_from_outerplanar, cyclic_segments_from_rep, random_maximal_outerplanar
from mptkit.optimization import random_circular_arcs
from mptkit.representations import NET_LSYSTEM, random_interval_rep, random_ray_system

from strategies import graphs, raw_reps


def parse(text, source="t.txt"):
    return io.parse_document(text, source)


@given(graphs(max_n=9))
def test_graph_round_trip(g):
    text = io.dump_graph(g)
    doc = parse(text)
    assert doc.kind == "graph"
    assert io.load_graph(doc) == g


@given(raw_reps())
def test_rep_round_trip(rep):
    assert io.load_rep(parse(io.dump_rep(rep))) == rep


def test_other_round_trips():
    assert io.load_lsystem(parse(io.dump_lsystem(NET_LSYSTEM))) == NET_LSYSTEM
    iv = random_interval_rep(7, 1)
    assert io.load_interval(parse(io.dump_interval(iv))) == iv
    rs = random_ray_system(6, 2)
    assert io.load_rays(parse(io.dump_rays(rs))) == rs
    ca = random_circular_arcs(5, 3)
    assert io.load_arcs(parse(io.dump_arcs(ca))) == ca
    cs = contact_lsystem_from_outerplanar(random_maximal_outerplanar(9, 4))
    assert io.load_contact(parse(io.dump_contact(cs))) == cs
    segs = cyclic_segments_from_rep(random_interval_and_rep())
    assert io.load_segments(parse(io.dump_segments(segs))) == list(segs.segments)
    assert io.load_order(parse(io.dump_order((2, 0, 1)))) == (2, 0, 1)


def random_interval_and_rep():
    from mptkit.representations import random_mpt_rep

    return random_mpt_rep(8, 5)


def test_comments_blank_lines_and_fractions():
    doc = parse("# hello\n\n2  # two vertices\n1/2 3/4 1\n0 0 0\n")
    rep = io.load_rep(doc)
    assert rep.items[0].p == Fraction(3, 4)


def test_weights():
    w = io.load_weights(parse("0 3\n2 1/2\n"), 3)
    assert w == [3, 0, Fraction(1, 2)]
    with pytest.raises(FormatError):
        io.load_weights(parse("0 -1\n"), 3)
    with pytest.raises(FormatError):
        io.load_weights(parse("0 1\n0 2\n"), 3)


@pytest.mark.parametrize(
    "text, kind, line",
    [
        ("3 1\n0 5\n", "graph", 2),
        ("3 2\n0 1\n", "graph", 2),
        ("2\n1 2 3\n1 x 3\n", "rep", 3),
        ("2\n3 2 1\n1 1 1\n", "rep", 2),
        ("mptkit-format 9\n1\n1 1 1\n", "rep", 1),
        ("1\nup 0 0\n", "rays", 2),
        ("1\n1/2 1/2\n", "arcs", 2),
        ("1\n0 0 1\ncontacts 1\n0 3 0 0\n", "contact", 4),
        ("2 1\n0 1\n0 1\n", "graph", 3),
    ],
)
def test_format_errors_name_the_line(text, kind, line):
    with pytest.raises(FormatError) as info:
        io.LOADERS[kind](parse(text, "f.txt"))
    assert info.value.line == line
    assert str(info.value).startswith(f"f.txt:{line}:")


def test_kind_mismatch(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(io.dump_graph(random_maximal_outerplanar(4, 1)))
    with pytest.raises(FormatError):
        io.load(str(path), "rep")
