import math
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from natrees import gallery as g
from natrees import perm as pm
from natrees.nat import Nat
from natrees.trees import parse_tree

from strategies import perms


def test_extract_sigma_examples():
    assert pm.extract_sigma(g.EX22_NAT) == (g.EX22_SIGMA_L, g.EX22_SIGMA_R)
    assert pm.extract_sigma(Nat(parse_tree("(. .)"), (), ())) == ((), ())
    four = Nat(parse_tree("((. .) ((. .) .))"), (2, 1), (1,))
    assert pm.extract_sigma(four) == ((2, 1), (1,))


def test_example22_statistics():
    sl, sr = g.EX22_SIGMA_L, g.EX22_SIGMA_R
    assert (pm.statistic(sl, "inv"), pm.statistic(sr, "inv")) == (11, 7)
    assert (pm.statistic(sl, "imaj"), pm.statistic(sr, "imaj")) == (25, 24)


@given(perms(9))
def test_statistics_match_definitions(p):
    inv = sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])
    q = pm.inverse(p)
    imaj = sum(i + 1 for i in range(len(q) - 1) if q[i] > q[i + 1])
    assert pm.statistic(p, "inv") == inv
    assert pm.statistic(p, "imaj") == imaj
    assert pm.inverse(q) == p


@given(st.integers(0, 8))
def test_identity_statistics(n):
    ident = tuple(range(1, n + 1))
    assert pm.statistic(ident, "inv") == pm.statistic(ident, "imaj") == 0


def test_unknown_statistic():
    with pytest.raises(ValueError):
        pm.statistic((1,), "maj2")


def test_std_and_append():
    assert pm.std((3, 6, 4, 8, 2)) == (2, 4, 3, 5, 1)
    assert pm.std((2, 5, 9)) == (1, 2, 3)
    assert pm.append_max((2, 1)) == (2, 1, 3)
    with pytest.raises(ValueError):
        pm.std((1, 1))


@given(st.lists(st.integers(-50, 50), unique=True, max_size=10))
def test_std_is_order_isomorphic(word):
    s = pm.std(word)
    assert pm.is_perm(s)
    for i, j in combinations(range(len(word)), 2):
        assert (word[i] < word[j]) == (s[i] < s[j])


def test_pump_example():
    got = pm.pump_perm((2, 1), (1, 2))
    terms = "21345 21435 21534 31425 31524 41523 32415 32514 42513 43512".split()
    assert got == Counter({tuple(map(int, t)): 1 for t in terms})


@settings(max_examples=80, deadline=None)
@given(perms(3), perms(3))
def test_pump_matches_oracle(sigma, mu):
    got = pm.pump_perm(sigma, mu)
    assert got == pm.pump_perm_brute(sigma, mu)
    total = len(sigma) + len(mu) + 1
    assert sum(got.values()) == math.comb(total, len(mu))
    assert all(pm.is_perm(w) for w in got)


def test_pump_pair_orientation():
    left, right = pm.pump_pair(((1,), (2, 1)), ((), (1,)))
    assert left == pm.pump_perm((1,), ())
    assert right == pm.pump_perm((1,), (2, 1))
