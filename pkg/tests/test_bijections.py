import json
import math
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from natrees import bijections as bj
from natrees import gallery as g
from natrees.nat import enumerate_nats_by_size, refined_count
from natrees.poly import QPoly2
from natrees.trees import OrderedTree

NAMES = ("alpha", "beta")


def _nats(max_total):
    return [n for t in range(max_total + 1) for w in range(t + 1) for n in enumerate_nats_by_size(w, t - w)]


def test_words_parse_and_format():
    w = bj.parse_word("r4 b8 r3")
    assert w == ((bj.RED, 4), (bj.BLUE, 8), (bj.RED, 3))
    assert bj.format_word(w) == "r4 b8 r3"
    with pytest.raises(ValueError):
        bj.parse_word("g2")


def test_example22_words_and_tuple():
    tree = bj.xi(g.EX22_NAT)
    bj.validate_not(tree)
    assert tree.label == (11, 12)
    wp = bj.omega(tree)
    assert wp == g.EX22_WORDS
    assert bj.four_tuple(wp).as_tuple() == g.EX22_FOUR_TUPLE
    assert bj.four_tuple_inv(bj.four_tuple(wp)) == wp
    assert bj.xi_inv(bj.omega_inv(wp)) == g.EX22_NAT


def test_round_trips_small():
    for nat in _nats(5):
        tree = bj.xi(nat)
        wp = bj.omega(tree)
        assert bj.xi_inv(tree) == nat
        assert bj.omega_inv(wp) == tree
        assert bj.four_tuple_inv(bj.four_tuple(wp)) == wp


@pytest.mark.parametrize("m", range(1, 7))
def test_not_tree_image(m):
    image = {bj.xi(n) for w in range(m) for n in enumerate_nats_by_size(w, m - 1 - w)}
    assert image == set(bj.enumerate_not_trees(m))


@pytest.mark.parametrize("w,h", [(0, 0), (1, 0), (0, 2), (2, 2), (3, 2)])
def test_word_pair_image(w, h):
    image = {bj.omega(bj.xi(n)) for n in enumerate_nats_by_size(w, h)}
    assert image == set(bj.enumerate_word_pairs(w, h))


def _with_children(node, children):
    return replace(node, children=tuple(children))


def test_not_clause_violations():
    tree = bj.xi(g.EX22_NAT)
    with pytest.raises(bj.NotTreeError) as e:
        bj.validate_not(replace(tree, label=(3, 3)))
    assert e.value.clause == "root"
    # blue children must follow the red ones
    with pytest.raises(bj.NotTreeError) as e:
        bj.validate_not(_with_children(tree, tree.children[::-1]))
    assert e.value.clause == "root-order"
    first = tree.children[0]
    recoloured = _with_children(tree, (replace(first, colour=None),) + tree.children[1:])
    with pytest.raises(bj.NotTreeError) as e:
        bj.validate_not(recoloured)
    assert e.value.clause == "colouring"
    small = OrderedTree((OrderedTree((), bj.RED, 2), OrderedTree((), bj.RED, 1)), None, (3, 1))
    bj.validate_not(small)
    with pytest.raises(bj.NotTreeError) as e:
        bj.validate_not(_with_children(small, small.children[::-1]))
    assert e.value.clause == "decreasing"
    nested = OrderedTree((OrderedTree((OrderedTree((), bj.RED, 1),), bj.RED, 2),), None, (3, 1))
    with pytest.raises(bj.NotTreeError) as e:
        bj.validate_not(nested)
    assert e.value.clause == "alternation"


@pytest.mark.parametrize(
    "words, clause",
    [
        (("r1",), "shape"),
        (("r1 r1", ""), "letters"),
        (("r1 r2", ""), "blocks"),
        (("r1 b1", ""), "ends"),
        (("r1", "b1 r2"), "ends"),
    ],
)
def test_word_pair_violations(words, clause):
    wp = tuple(bj.parse_word(w) for w in words)
    with pytest.raises(bj.WordPairError) as e:
        bj.omega_inv(wp)
    assert e.value.clause == clause


def test_bad_four_tuple():
    ft = bj.four_tuple(g.EX22_WORDS)
    with pytest.raises(bj.WordPairError):
        bj.four_tuple_inv(replace(ft, red_set=frozenset({2, 99})))


def test_json_round_trips():
    tree = bj.xi(g.EX22_NAT)
    wp = bj.omega(tree)
    ft = bj.four_tuple(wp)
    assert bj.not_from_json(json.loads(json.dumps(bj.not_to_json(tree)))) == tree
    assert bj.word_pair_from_json(json.loads(json.dumps(bj.word_pair_to_json(wp)))) == wp
    assert bj.four_tuple_from_json(json.loads(json.dumps(bj.four_tuple_to_json(ft)))) == ft
    with pytest.raises(bj.NotTreeError):
        bj.not_from_json({"colour": "red"})
    with pytest.raises(bj.WordPairError):
        bj.word_pair_from_json({"w1": "r1"})


def _stirling2(n, p):
    return sum((-1) ** (p - j) * math.comb(p, j) * j ** n for j in range(p + 1)) // math.factorial(p)


@settings(deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.sampled_from([0, 1]))
def test_q_stirling(n, p, var):
    s = bj.q_stirling(n, p, var)
    assert s == bj.q_stirling_brute(n, p, var)
    assert s.evaluate(1, 1) == (_stirling2(n, p) if p <= n else 0)


def test_q_stirling_edges():
    assert bj.q_stirling(0, 0) == QPoly2.constant(1, NAMES)
    assert bj.q_stirling(3, 0).is_zero()
    assert bj.q_stirling(3, 3) == QPoly2.constant(1, NAMES)
    # {1,2,3} into 2 blocks: 1 alone, or 1 with 2, or 1 with 3
    assert bj.q_stirling(3, 2) == QPoly2({(0, 0): 1, (1, 0): 2}, NAMES)


def test_rising_factorial():
    x = QPoly2({(1, 0): 1}, NAMES)
    assert bj.rising_factorial(x, 0) == QPoly2.constant(1, NAMES)
    assert bj.rising_factorial(x, 3) == x * (x + 1) * (x + 2)
    assert bj.rising_factorial(QPoly2.constant(2, NAMES), 3).evaluate(0, 0) == 24


@pytest.mark.parametrize("w,h", [(w, h) for w in range(5) for h in range(5 - w)])
def test_stirling_count(w, h):
    res = bj.stirling_count(w, h)
    by_p = refined_count(w, h, by_hook_number=True)
    assert {p: t for p, t in res.summands.items() if not t.is_zero()} == by_p
    assert res.total == refined_count(w, h)
    numeric = bj.stirling_count(w, h, alpha=1, beta=1)
    assert numeric.total.evaluate(0, 0) == len(enumerate_nats_by_size(w, h))
    assert max(res.summands) == min(w, h) + 1


def test_stirling_rejects_negative():
    with pytest.raises(ValueError):
        bj.stirling_count(-1, 2)
