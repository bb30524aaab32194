import pytest
from hypothesis import given, settings, strategies as st

from natrees import gallery as g
from natrees import qhook as qh
from natrees.nat import count_nats_hook, enumerate_nats_of_shape
from natrees.poly import QPoly2
from natrees.trees import parse_tree, shape_info

from strategies import binary_trees, perms

FOUR = parse_tree("((. .) ((. .) .))")


def test_q_numbers():
    assert qh.q_int(0) == QPoly2()
    assert qh.q_int(3) == QPoly2({(0, 0): 1, (1, 0): 1, (2, 0): 1})
    assert qh.q_int(2, "R") == QPoly2({(0, 0): 1, (0, 1): 1})
    assert qh.q_factorial(3).evaluate(1, 1) == 6
    assert qh.q_binomial(4, 2) == QPoly2({(0, 0): 1, (1, 0): 1, (2, 0): 2, (3, 0): 1, (4, 0): 1})


@given(st.integers(0, 8), st.integers(0, 8))
def test_q_binomial_symmetry_and_value(n, k):
    if k > n:
        return
    b = qh.q_binomial(n, k, "R")
    assert b == qh.q_binomial(n, n - k, "R")
    assert b.evaluate(1, 1) == qh.q_factorial(n).evaluate(1, 1) // (
        qh.q_factorial(k).evaluate(1, 1) * qh.q_factorial(n - k).evaluate(1, 1)
    )


def test_four_vertex_example():
    assert qh.q_hook_product(FOUR) == QPoly2({(0, 0): 1, (1, 0): 1})
    assert qh.q_weight_sum(FOUR, "inv") == qh.q_hook_product(FOUR)
    assert qh.q_hook_product(parse_tree("(. .)")) == QPoly2.constant(1)


def test_worked_example():
    shape = g.QHOOK_SHAPE
    assert qh.match_display_variables(shape, g.QHOOK_DISPLAY) == [{"qx": "qR", "qy": "qL"}]
    assert qh.q_hook_product(shape).coefficient(1, 2) == 2
    hits = {n for n in enumerate_nats_of_shape(shape) if qh.q_weight(n, "imaj") == QPoly2.monomial(1, 2)}
    assert hits == set(g.QHOOK_WITNESSES)


@settings(max_examples=50, deadline=None)
@given(binary_trees(7))
def test_q_hook_identity(t):
    target = qh.q_hook_product(t)
    assert qh.q_weight_sum(t, "inv") == target == qh.q_weight_sum(t, "imaj")
    assert target.evaluate(1, 1) == count_nats_hook(t)


@settings(max_examples=50, deadline=None)
@given(binary_trees(10))
def test_q_pumping_over_trees(t):
    info = shape_info(t)
    key = (len(info.left_vertices) + 1, len(info.right_vertices) + 1)
    assert qh.q_pump_tree(t).terms == {key: qh.q_hook_product(t)}


@settings(max_examples=60, deadline=None)
@given(perms(3), perms(3), perms(3), perms(3), st.sampled_from(["inv", "imaj"]))
def test_commutation(a, b, c, d, stat):
    assert qh.commutes((a, b), (c, d), stat)


def test_series_algebra():
    one = qh.QDivSeries({(0, 0): QPoly2.constant(1)})
    x = qh.QDivSeries({(1, 0): QPoly2.constant(1)})
    assert x * one == x
    # X^(1) X^(1) = [2]_qL X^(2)
    assert (x * x).terms == {(2, 0): qh.q_int(2)}
    assert x.shift(-1, 0) == one
    assert x.shift(0, -1) == qh.QDivSeries()
    assert (x + x).terms == {(1, 0): QPoly2.constant(2)}


def test_bad_variable():
    with pytest.raises(ValueError):
        qh.q_int(2, "z")
