from natrees import bijections as bj
from natrees import gallery as g
from natrees import render


def test_nat_dot():
    dot = render.nat_to_dot(g.EX22_NAT)
    assert dot.startswith("digraph nat {")
    assert dot.count(":sw ->") == 10 and dot.count(":se ->") == 11
    assert dot.count("fontcolor=red") == 10 and dot.count("fontcolor=blue") == 11
    assert '<font color="red">11</font>' in dot


def test_nat_text():
    lines = render.nat_to_text(g.EX22_NAT).splitlines()
    assert len(lines) == 22
    assert lines[0] == "(11,12)"
    assert lines[1] == "  L 10"


def test_not_renderings():
    tree = bj.xi(g.EX22_NAT)
    dot = render.not_to_dot(tree)
    assert dot.count(" -> ") == 21 and "ordering=out" in dot
    text = render.not_to_text(tree).splitlines()
    assert text[0] == "(11,12)" and len(text) == 22
    assert {line.strip()[0] for line in text[1:]} == {"r", "b"}


def test_dk_renderings():
    dot = render.dk_to_dot(g.DK32_EXAMPLE)
    assert dot.count(" -> ") == g.DK32_EXAMPLE.size() - 1
    text = render.dk_to_text(g.DK32_EXAMPLE).splitlines()
    assert text[0] == "(6,5,4)"
    assert all("{" in line for line in text[1:])
