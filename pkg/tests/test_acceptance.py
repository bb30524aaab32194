"""Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
repeated in the terminal summary under "acceptance criteria".
"""

import math
from fractions import Fraction

import pytest

from natrees import bijections as bj
from natrees import gallery as g
from natrees import natdk as dk
from natrees import perm as pm
from natrees import qhook as qh
from natrees import series as sr
from natrees.nat import (
    count_nats_hook,
    enumerate_nats_by_size,
    enumerate_nats_of_shape,
    nat_from_json,
    nat_to_json,
    refined_count,
)
from natrees.poly import QPoly2
from natrees.trees import (
    enumerate_binary_trees,
    hook_number,
    hook_number_distribution,
    leaf_parent_distribution,
    shape_info,
)

ORDER = 8


def _shapes(max_size):
    for n in range(1, max_size + 1):
        yield from enumerate_binary_trees(n)


def _sizes(max_total):
    return [(w, t - w) for t in range(max_total + 1) for w in range(t + 1)]


def _first_bad(items, pred):
    n = 0
    for item in items:
        n += 1
        if not pred(item):
            return False, f"first failure at {item!r}"
    return True, f"{n} cases"


# ---------------------------------------------------------------------------
# 1. hook formula


def test_c1_hook_formula(criterion):
    def check():
        shapes = list(_shapes(8))

        def ok(shape):
            rec = enumerate_nats_of_shape(shape, "recursive")
            brute = enumerate_nats_of_shape(shape, "brute_force")
            return count_nats_hook(shape) == len(rec) == len(brute) and set(rec) == set(brute)

        good, detail = _first_bad(shapes, ok)
        return good, f"{len(shapes)} shapes of size 1..8; {detail}"

    criterion("C1", "hook formula = recursive = brute force", check)


# ---------------------------------------------------------------------------
# 2. q-hook identity


def test_c2_q_hook_identity(criterion):
    def check():
        def ok(shape):
            target = qh.q_hook_product(shape)
            return (
                qh.q_weight_sum(shape, "inv") == target
                and qh.q_weight_sum(shape, "imaj") == target
                and qh.q_weight_sum(shape, "imaj", "brute_force") == target
            )

        return _first_bad(_shapes(7), ok)

    criterion("C2", "q-weight sums (inv, imaj) = q-hook product, size <= 7", check)


def test_c2_worked_example(criterion):
    def check():
        shape = g.QHOOK_SHAPE
        maps = qh.match_display_variables(shape, g.QHOOK_DISPLAY)
        if not maps:
            return False, "no assignment of qx, qy reproduces [4][3][2]"
        # qx^2 qy under the matching assignment
        a = 2 if maps[0]["qx"] == "qL" else 1
        b = 3 - a
        coeff = qh.q_hook_product(shape).coefficient(a, b)
        target = QPoly2.monomial(a, b)
        hits = [n for n in enumerate_nats_of_shape(shape) if qh.q_weight(n, "imaj") == target]
        sigmas = tuple(pm.extract_sigma(n) for n in hits)
        ok = (
            coeff == 2
            and set(hits) == set(g.QHOOK_WITNESSES)
            and set(sigmas) == set(g.QHOOK_WITNESS_SIGMAS)
            and len(hits) == 2
        )
        return ok, f"mapping {maps[0]}, coefficient {coeff}, witnesses {sigmas}"

    criterion("C2b", "worked q-hook example ([4][3][2], coefficient 2, two witnesses)", check)


# ---------------------------------------------------------------------------
# 3. the 22-vertex example


def test_c3_example22(criterion):
    def check():
        nat = nat_from_json(nat_to_json(g.EX22_NAT))
        sl, sr_ = pm.extract_sigma(nat)
        got = {
            "sigma_L": sl,
            "sigma_R": sr_,
            "inv": (pm.statistic(sl, "inv"), pm.statistic(sr_, "inv")),
            "imaj": (pm.statistic(sl, "imaj"), pm.statistic(sr_, "imaj")),
            "hook_number": hook_number(nat.shape),
        }
        want = {
            "sigma_L": (2, 1, 4, 3, 6, 10, 8, 9, 5, 7),
            "sigma_R": (1, 2, 3, 4, 5, 7, 11, 9, 6, 8, 10),
            "inv": (11, 7),
            "imaj": (25, 24),
            "hook_number": 8,
        }
        bad = [k for k in want if got[k] != want[k]]
        return not bad, "all values match" if not bad else f"mismatch: {bad}"

    criterion("C3", "22-vertex example: sigmas, inv, imaj, hook number", check)


# ---------------------------------------------------------------------------
# 4. generating functions


def _lift(series, slot):
    params = ("alpha", "beta")
    coeffs = {}
    for k, c in series.items():
        extra = (k[2], 0) if slot == 0 else (0, k[2])
        coeffs[k[:2] + extra] = c
    return sr.TruncatedEgf(2, series.order, coeffs, params)


def test_c4_fixed_points(criterion):
    def check():
        n = sr.closed_form_series("gfn", ORDER)
        h = sr.closed_form_series("gfh", ORDER)
        nab = sr.closed_form_series("gfnab", ORDER)
        x = sr.TruncatedEgf.variable(1, 2, ORDER)
        y = sr.TruncatedEgf.variable(2, 2, ORDER)
        fixed = sr.fixed_point_series("2d", ORDER)
        gfn_ok = n == fixed == sr.fixed_point_series((2, 1), ORDER)
        gfh_ok = (sr.m_from_n(fixed, 2, 1) - x - y).agrees_with(h)
        params = ("alpha", "beta")
        a = sr.TruncatedEgf.parameter("alpha", 2, ORDER, params)
        b = sr.TruncatedEgf.parameter("beta", 2, ORDER, params)
        na1 = _lift(nab.specialize_parameter("beta", 1), 0)
        n1b = _lift(nab.specialize_parameter("alpha", 1), 1)
        nab_ok = ((1 + a * na1.integral(1)) * (1 + b * n1b.integral(2))).agrees_with(nab)
        ok = gfn_ok and gfh_ok and nab_ok
        return ok, f"GFN {gfn_ok}, GFH {gfh_ok}, GFN(alpha,beta) {nab_ok}; order {ORDER}"

    criterion("C4a", "closed forms = fixed-point solutions", check)


def test_c4_counts(criterion):
    def check():
        n = sr.closed_form_series("gfn", ORDER)
        h = sr.closed_form_series("gfh", ORDER)
        bad = []
        for w, hh in _sizes(ORDER):
            if n.egf_coefficient(w, hh) != len(enumerate_nats_by_size(w, hh)):
                bad.append(("gfn", w, hh))
            if w >= 1 and hh >= 1 and h.egf_coefficient(w, hh) != len(enumerate_nats_by_size(w - 1, hh - 1)):
                bad.append(("gfh", w, hh))
        one = n.egf_coefficient(1, 1)
        nab11 = sr.closed_form_series("gfnab", 2).parameter_polynomial(1, 1)
        expect11 = {(1, 1): 1, (1, 0): 1, (0, 1): 1}
        ok = not bad and one == 3 and nab11 == expect11
        shown = QPoly2(nab11, names=("alpha", "beta"))
        return ok, f"(1,1): {one} and {shown}" if ok else f"mismatch: {bad[:3]}"

    criterion("C4b", "GFN, GFH coefficients = NAT counts; (1,1) gives 3 and ab+a+b", check)


def _refined_mismatches(weighting):
    nab = sr.closed_form_series("gfnab", ORDER)
    bad = []
    for w, h in _sizes(ORDER):
        scale = math.factorial(w) * math.factorial(h)
        got = {k: v * scale for k, v in nab.parameter_polynomial(w, h).items()}
        if got != refined_count(w, h, weighting=weighting).terms:
            bad.append((w, h))
    return bad


def test_c4_refined_lo_ro(criterion):
    def check():
        bad = _refined_mismatches("lo_ro")
        return not bad, f"alpha^LO beta^RO, all (w,h) with w+h <= {ORDER}" if not bad else f"mismatch at {bad[:3]}"

    criterion("C4c", "GFN(alpha,beta) = NAT counts weighted alpha^LO beta^RO", check)


def test_c4_refined_ro_lo_as_stated(criterion):
    # The weighting as literally stated pairs alpha with RO; the closed form
    # pairs alpha with x, hence with LO. Kept so the discrepancy stays visible.
    def check():
        bad = _refined_mismatches("ro_lo")
        return not bad, "matches" if not bad else f"{len(bad)} mismatching (w,h), first {bad[0]}"

    criterion("C4d", "GFN(alpha,beta) = NAT counts weighted alpha^RO beta^LO", check)


# ---------------------------------------------------------------------------
# 5. Stirling summands


def test_c5_stirling_summands(criterion):
    def check():
        bad = []
        for w, h in _sizes(6):
            by_p = refined_count(w, h, by_hook_number=True)
            formal = bj.stirling_count(w, h)
            numeric = bj.stirling_count(w, h, alpha=1, beta=1)
            for p in set(by_p) | {p for p, t in formal.summands.items() if not t.is_zero()}:
                want = by_p.get(p, QPoly2(names=("alpha", "beta")))
                got = formal.summands.get(p, QPoly2(names=("alpha", "beta")))
                if got.truncate(3) != want.truncate(3) or got != want:
                    bad.append(("formal", w, h, p))
                count = sum(len(enumerate_nats_of_shape(s)) for s in _shapes_of_size(w, h) if hook_number(s) == p)
                if numeric.summands.get(p, 0) != count:
                    bad.append(("alpha=beta=1", w, h, p))
        return not bad, "all w+h <= 6, every p" if not bad else f"mismatch: {bad[:3]}"

    criterion("C5", "per-p Stirling summand = NATs with hook number p", check)


def _shapes_of_size(w, h):
    for shape in enumerate_binary_trees(w + h + 1):
        info = shape_info(shape)
        if len(info.left_vertices) == w and len(info.right_vertices) == h:
            yield shape


# ---------------------------------------------------------------------------
# 6. bijections


def test_c6_round_trips(criterion):
    def check():
        n = 0
        for w, h in _sizes(7):
            for nat in enumerate_nats_by_size(w, h):
                n += 1
                tree = bj.xi(nat)
                wp = bj.omega(tree)
                if bj.xi_inv(tree) != nat or bj.omega_inv(wp) != tree or bj.four_tuple_inv(bj.four_tuple(wp)) != wp:
                    return False, f"round trip fails on {nat!r}"
        return True, f"{n} NATs with at most 8 vertices"

    criterion("C6a", "xi, Omega and 4-tuple round trips", check)


def test_c6_images(criterion):
    def check():
        for m in range(1, 9):
            image = {bj.xi(nat) for w in range(m) for nat in enumerate_nats_by_size(w, m - 1 - w)}
            if image != set(bj.enumerate_not_trees(m)):
                return False, f"NOT tree image differs at {m} vertices"
        for w, h in _sizes(7):
            image = {bj.omega(bj.xi(n)) for n in enumerate_nats_by_size(w, h)}
            if image != set(bj.enumerate_word_pairs(w, h)):
                return False, f"word pair image differs at {(w, h)}"
        return True, "NOT trees and word pairs, up to 8 vertices"

    criterion("C6b", "images are exactly the valid NOT trees and word pairs", check)


def test_c6_example22(criterion):
    def check():
        tree = bj.xi(g.EX22_NAT)
        bj.validate_not(tree)
        wp = bj.omega(tree)
        ft = bj.four_tuple(wp)
        ok_words = wp == g.EX22_WORDS
        ok_tuple = ft.as_tuple() == g.EX22_FOUR_TUPLE
        words = " / ".join(bj.format_word(w) for w in wp)
        return ok_words and ok_tuple, f"words {ok_words}, 4-tuple {ok_tuple}: {words}"

    criterion("C6c", "NOT tree, word pair and 4-tuple of the 22-vertex example", check)


# ---------------------------------------------------------------------------
# 7. A127157


def test_c7_a127157(criterion):
    def check():
        bad = [n for n in range(1, 11) if hook_number_distribution(n) != leaf_parent_distribution(n + 1)]
        three = hook_number_distribution(3)
        ok = not bad and three == {1: 3, 2: 2}
        return ok, f"n = 1..10; n=3 gives {three}" if ok else f"differs at n={bad}"

    criterion("C7", "hook numbers of binary trees = leaf parents of ordered trees", check)


# ---------------------------------------------------------------------------
# 8. (d, k)


def _dk_cases():
    for d, k in ((3, 1), (3, 2)):
        for n in range(1, 5):
            for shape in dk.enumerate_dk_shapes(d, k, n):
                yield d, k, shape


def test_c8_dk_hook(criterion):
    def check():
        def ok(case):
            d, k, shape = case
            brute = dk.enumerate_dk(shape, d, k, "brute_force")
            return dk.count_dk_hook(shape, d) == len(brute) == len(set(brute))

        return _first_bad(_dk_cases(), ok)

    criterion("C8a", "(3,1), (3,2) hook formula = brute force, size <= 4", check)


def test_c8_root_labels(criterion):
    def check():
        got = (g.DK31_EXAMPLE.root_label, g.DK32_EXAMPLE.root_label)
        forced = (
            dk.root_label_sizes(dk.shape_of(g.DK31_EXAMPLE), 3),
            dk.root_label_sizes(dk.shape_of(g.DK32_EXAMPLE), 3),
        )
        for d, k, shape in _dk_cases():
            w = dk.root_label_sizes(shape, d)
            if any(n.root_label != w for n in dk.enumerate_dk(shape, d, k)):
                return False, f"root label not forced for {shape!r}"
        ok = got == forced == ((5, 7, 6), (6, 5, 4))
        return ok, f"examples {got}, forced {forced}"

    criterion("C8b", "root label forced by the shape; (5,7,6) and (6,5,4)", check)


def test_c8_geometric(criterion):
    def check():
        def ok(case):
            d, k, shape = case
            for nat in dk.enumerate_dk(shape, d, k):
                geo = dk.to_geometric(nat)
                if not dk.validate_geometric(geo) or dk.from_geometric(geo) != nat:
                    return False
            return True

        good, detail = _first_bad(_dk_cases(), ok)
        fig = dk.to_geometric(dk.nat_to_dk(g.EX22_NAT))
        fig_ok = {p for p, _ in fig.points} == set(g.EX22_GRID) and dk.dk_to_nat(dk.from_geometric(fig)) == g.EX22_NAT
        return good and fig_ok, f"{detail}; 22-vertex grid {fig_ok}"

    criterion("C8c", "geometric round trip", check)


def test_c8_series(criterion):
    def check():
        parts = {}
        parts["(2,1) = GFN"] = sr.fixed_point_series((2, 1), 10) == sr.closed_form_series("gfn", 10)
        dd = True
        for d in (2, 3, 4):
            want = {(m,) * d: Fraction(1, math.factorial(m) ** d) for m in range(10 // d + 1)}
            dd = dd and dict(sr.fixed_point_series((d, d), 10).items()) == want
        parts["(d,d) closed form"] = dd
        red = True
        for k in (1, 2):
            red = red and sr.restrict_variable(sr.fixed_point_series((3, k), 6), 3) == sr.fixed_point_series((2, k), 6)
        parts["x_3 = 0"] = red
        j0 = sr.fixed_point_series((2, 2), 10).substitute_linear([Fraction(1, 2), Fraction(-1, 2)])
        parts["Bessel J0"] = j0 == sr.bessel_j0(10)
        bad = [k for k, v in parts.items() if not v]
        return not bad, ", ".join(parts) if not bad else f"fails: {bad}"

    criterion("C8d", "(d,k) fixed-point series identities", check)


# ---------------------------------------------------------------------------
# 9. permutation pumping


def test_c9_pump_example(criterion):
    def check():
        got = pm.pump_perm((2, 1), (1, 2))
        terms = "21345 21435 21534 31425 31524 41523 32415 32514 42513 43512".split()
        want = {tuple(int(c) for c in t): 1 for t in terms}
        ok = dict(got) == want and got == pm.pump_perm_brute((2, 1), (1, 2))
        return ok, f"{sum(got.values())} terms"

    criterion("C9a", "B(21,12) is the stated 10-term sum", check)


def test_c9_commutation(criterion):
    def check():
        from itertools import permutations

        by_len = [list(permutations(range(1, n + 1))) for n in range(7)]
        cases = 0
        for a in range(7):
            for b in range(7 - a):
                for c in range(7 - a - b):
                    for d in range(7 - a - b - c):
                        for sl in by_len[a]:
                            for sr_ in by_len[b]:
                                for ml in by_len[c]:
                                    for mr in by_len[d]:
                                        cases += 1
                                        for stat in ("inv", "imaj"):
                                            if not qh.commutes((sl, sr_), (ml, mr), stat):
                                                return False, f"fails on {(sl, sr_)}, {(ml, mr)}, {stat}"
        return True, f"{cases} pairs, inv and imaj"

    criterion("C9b", "Psi commutes with pair pumping, total length <= 6", check)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
