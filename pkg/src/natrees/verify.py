"""Invariant suites run by ``natrees verify``.

Each property is a function of ``max_size`` returning ``(ok, detail)``.
Suites run sequentially in a fixed order so that reports are deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from natrees import bijections as bj
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
    restrict,
    validate_nat,
)
from natrees.trees import (
    enumerate_binary_trees,
    hook_number_distribution,
    leaf_parent_distribution,
    shape_info,
)

__all__ = ["PropertyResult", "SUITES", "run_suite", "run_all"]


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    ok: bool
    detail: str

    def as_dict(self) -> dict:
        return {"suite": self.suite, "property": self.name, "pass": self.ok, "detail": self.detail}


Check = Callable[[int], tuple[bool, str]]


def _shapes(max_size: int):
    for n in range(1, max_size + 1):
        yield from enumerate_binary_trees(n)


def _first_failure(items, pred, what: str) -> tuple[bool, str]:
    count = 0
    for item in items:
        count += 1
        if not pred(item):
            return False, f"fails for {what} {item!r}"
    return True, f"{count} cases"


# ---------------------------------------------------------------------------
# nat

def _nat_catalan(s):
    bad = [n for n in range(s + 1) if len(enumerate_binary_trees(n)) != math.comb(2 * n, n) // (n + 1)]
    return not bad, f"sizes 0..{s}" if not bad else f"wrong Catalan count at n={bad[0]}"


def _nat_hook_vs_enumeration(s):
    def ok(shape):
        rec = enumerate_nats_of_shape(shape, "recursive")
        if len(rec) != count_nats_hook(shape) or len(set(rec)) != len(rec):
            return False
        if len(shape_info(shape).left_vertices) + len(shape_info(shape).right_vertices) <= 7:
            return set(rec) == set(enumerate_nats_of_shape(shape, "brute_force"))
        return True
    return _first_failure(_shapes(s), ok, "shape")


def _nat_valid_and_sizes(s):
    def ok(shape):
        return all(
            validate_nat(n) and n.n == 1 + n.n_left + n.n_right and nat_from_json(nat_to_json(n)) == n
            for n in enumerate_nats_of_shape(shape)
        )
    return _first_failure(_shapes(s), ok, "shape")


def _nat_restriction(s):
    def ok(shape):
        for n in enumerate_nats_of_shape(shape):
            for sub in restrict(n):
                if sub is not None and not validate_nat(sub):
                    return False
        return True
    return _first_failure(_shapes(s), ok, "shape")


def _nat_gfn_coefficients(s):
    gfn = sr.closed_form_series("gfn", s)
    pairs = [(w, h) for w in range(s + 1) for h in range(s + 1 - w)]
    return _first_failure(pairs, lambda p: gfn.egf_coefficient(*p) == len(enumerate_nats_by_size(*p)), "(w,h)")


def _nat_a127157(s):
    ns = range(1, s + 1)
    return _first_failure(ns, lambda n: hook_number_distribution(n) == leaf_parent_distribution(n + 1), "n")


# ---------------------------------------------------------------------------
# qhook / perm

def _q_weight_sums(s):
    def ok(shape):
        target = qh.q_hook_product(shape)
        return qh.q_weight_sum(shape, "inv") == target == qh.q_weight_sum(shape, "imaj")
    return _first_failure(_shapes(min(s, 7)), ok, "shape")


def _q_pump_tree(s):
    def ok(shape):
        info = shape_info(shape)
        key = (len(info.left_vertices) + 1, len(info.right_vertices) + 1)
        return qh.q_pump_tree(shape).terms == {key: qh.q_hook_product(shape)}
    return _first_failure(_shapes(s), ok, "shape")


def _q_specialisation(s):
    return _first_failure(
        _shapes(s), lambda b: qh.q_hook_product(b).evaluate(1, 1) == count_nats_hook(b), "shape"
    )


def _perms_upto(m):
    for n in range(m + 1):
        yield from permutations(range(1, n + 1))


def _pump_perm_oracle(s):
    pairs = [(a, b) for a in _perms_upto(s) for b in _perms_upto(s) if len(a) + len(b) + 1 <= min(s, 7)]
    return _first_failure(pairs, lambda p: pm.pump_perm(*p) == pm.pump_perm_brute(*p), "pair")


def _commutation_cases(total: int):
    by_len = [list(permutations(range(1, n + 1))) for n in range(total + 1)]
    for a in range(total + 1):
        for b in range(total + 1 - a):
            for c in range(total + 1 - a - b):
                for d in range(total + 1 - a - b - c):
                    for sl in by_len[a]:
                        for sr_ in by_len[b]:
                            for ml in by_len[c]:
                                for mr in by_len[d]:
                                    yield (sl, sr_), (ml, mr)


def _pump_commutes(s):
    cases = list(_commutation_cases(s))
    for stat in ("inv", "imaj"):
        for sig, mu in cases:
            if not qh.commutes(sig, mu, stat):
                return False, f"fails for {sig}, {mu} ({stat})"
    return True, f"{len(cases)} pairs x 2 statistics"


def _perm_stats_sanity(s):
    def ok(p):
        inv = pm.statistic(p, "inv")
        brute = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        q = pm.inverse(p)
        imaj = sum(i + 1 for i in range(len(q) - 1) if q[i] > q[i + 1])
        return inv == brute and pm.statistic(p, "imaj") == imaj
    return _first_failure(_perms_upto(min(s, 7)), ok, "permutation")


# ---------------------------------------------------------------------------
# bijections

def _sizes(s):
    return [(w, h) for n in range(s) for w in range(n + 1) for h in [n - w]]


def _bij_round_trips(s):
    def ok(size):
        for nat in enumerate_nats_by_size(*size):
            tree = bj.xi(nat)
            bj.validate_not(tree)
            wp = bj.omega(tree)
            if bj.xi_inv(tree) != nat or bj.omega_inv(wp) != tree:
                return False
            if bj.four_tuple_inv(bj.four_tuple(wp)) != wp:
                return False
        return True
    return _first_failure(_sizes(s), ok, "(w,h)")


def _bij_word_images(s):
    def ok(size):
        image = {bj.omega(bj.xi(n)) for n in enumerate_nats_by_size(*size)}
        return image == set(bj.enumerate_word_pairs(*size))
    return _first_failure(_sizes(min(s, 6)), ok, "(w,h)")


def _bij_not_images(s):
    def ok(n):
        image = {bj.xi(nat) for w in range(n) for nat in enumerate_nats_by_size(w, n - 1 - w)}
        return image == set(bj.enumerate_not_trees(n))
    return _first_failure(range(1, min(s, 6) + 1), ok, "vertex count")


def _bij_q_stirling(s):
    pairs = [(n, p) for n in range(1, s + 2) for p in range(1, n + 1)]
    return _first_failure(pairs, lambda np_: bj.q_stirling(*np_) == bj.q_stirling_brute(*np_), "(n,p)")


def _bij_stirling_sum(s):
    def ok(size):
        got = {p: t for p, t in bj.stirling_count(*size).summands.items() if not t.is_zero()}
        return got == refined_count(*size, by_hook_number=True)
    return _first_failure(_sizes(s + 1), ok, "(w,h)")


# ---------------------------------------------------------------------------
# series

def _ser_gfn_fixed_point(s):
    order = s + 2
    a = sr.closed_form_series("gfn", order)
    ok = a == sr.fixed_point_series("2d", order) == sr.fixed_point_series((2, 1), order)
    return ok, f"order {order}"


def _ser_relations(s):
    order = s + 2
    n = sr.closed_form_series("gfn", order)
    h = sr.closed_form_series("gfh", order)
    x = sr.TruncatedEgf.variable(1, 2, order)
    y = sr.TruncatedEgf.variable(2, 2, order)
    m = h + x + y
    checks = {
        "N = dx dy H": h.derivative(1).derivative(2).agrees_with(n),
        "M = int int N + x + y": sr.m_from_n(n, 2, 1).agrees_with(m),
        "M = x + y + int int dxM dyM": (x + y + (m.derivative(1) * m.derivative(2)).integral(1).integral(2)).agrees_with(m),
        "PDE residual": sr.pde_residual(m, 2, 1).is_zero(),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "; ".join(checks) if not bad else f"fails: {bad}"


def _ser_tree_pumping(s):
    order = s + 1
    total = sr.TruncatedEgf(2, order)
    for n in range(0, s + 1):
        for shape in enumerate_binary_trees(n):
            b = sr.pump_tree_series(shape, order)
            if shape is not None:
                info = shape_info(shape)
                wl, wr = len(info.left_vertices) + 1, len(info.right_vertices) + 1
                if b.egf_coefficient(wl, wr) != count_nats_hook(shape) or len(b.items()) != 1:
                    return False, f"pumping mismatch on {shape!r}"
            total = total + b
    m = sr.closed_form_series("gfh", order) + sr.TruncatedEgf.variable(1, 2, order) + sr.TruncatedEgf.variable(2, 2, order)
    return total.agrees_with(m), f"all shapes of size <= {s}"


def _ser_gfnab(s):
    order = s + 2
    nab = sr.closed_form_series("gfnab", order)
    for w in range(order + 1):
        for h in range(order + 1 - w):
            scale = math.factorial(w) * math.factorial(h)
            got = {k: v * scale for k, v in nab.parameter_polynomial(w, h).items()}
            if got != refined_count(w, h).terms:
                return False, f"refined count mismatch at {(w, h)}"
    params = ("alpha", "beta")
    a = sr.TruncatedEgf.parameter("alpha", 2, order, params)
    b = sr.TruncatedEgf.parameter("beta", 2, order, params)

    def lift(series, slot):
        coeffs = {}
        for k, c in series.items():
            extra = (k[2], 0) if slot == 0 else (0, k[2])
            coeffs[k[:2] + extra] = c
        return sr.TruncatedEgf(2, series.order, coeffs, params)

    na1 = lift(nab.specialize_parameter("beta", 1), 0)
    n1b = lift(nab.specialize_parameter("alpha", 1), 1)
    rhs = (1 + a * na1.integral(1)) * (1 + b * n1b.integral(2))
    return rhs.agrees_with(nab), f"order {order}"


def _ser_integrality(s):
    n = sr.closed_form_series("gfn", s + 2)
    bad = [k for k, c in n.counts() if c < 0 or c.denominator != 1]
    return not bad, "all counts are non-negative integers" if not bad else f"bad coefficient at {bad[0]}"


# ---------------------------------------------------------------------------
# (d, k)

def _dk_cases(s):
    for d, k in ((3, 1), (3, 2)):
        for n in range(1, min(s, 4) + 1):
            for shape in dk.enumerate_dk_shapes(d, k, n):
                yield d, k, shape


def _dk_hook(s):
    def ok(case):
        d, k, shape = case
        rec = dk.enumerate_dk(shape, d, k)
        brute = dk.enumerate_dk(shape, d, k, "brute_force")
        return len(rec) == dk.count_dk_hook(shape, d) == len(set(rec)) and set(rec) == set(brute)
    return _first_failure(_dk_cases(s), ok, "case")


def _dk_root_and_interval(s):
    def ok(case):
        d, k, shape = case
        w = dk.root_label_sizes(shape, d)
        for nat in dk.enumerate_dk(shape, d, k):
            if nat.root_label != w or not dk.validate_dk(nat):
                return False
            for i in range(d):
                vals = sorted(v.label[i] for pi, v in nat.root.preorder() if pi is not None and (i + 1) in pi)
                if vals != list(range(1, w[i])):
                    return False
        return True
    return _first_failure(_dk_cases(s), ok, "case")


def _dk_geometric(s):
    def ok(case):
        d, k, shape = case
        for nat in dk.enumerate_dk(shape, d, k):
            geo = dk.to_geometric(nat)
            if not dk.validate_geometric(geo) or dk.from_geometric(geo) != nat:
                return False
        return True
    return _first_failure(_dk_cases(s), ok, "case")


def _dk_two_one(s):
    def ok(shape):
        dshape = dk.binary_to_dk_shape(shape)
        ours = set(dk.enumerate_dk(dshape, 2, 1))
        theirs = {dk.nat_to_dk(n) for n in enumerate_nats_of_shape(shape)}
        return ours == theirs and dk.count_dk_hook(dshape, 2) == count_nats_hook(shape)
    return _first_failure(_shapes(s), ok, "shape")


def _dk_dimension_reduction(s):
    def ok(case):
        d, k, shape = case
        if any(d in pi for pi, _ in shape.preorder() if pi is not None):
            return True
        return len(dk.enumerate_dk(shape, d, k)) == len(dk.enumerate_dk(shape, d - 1, k))
    return _first_failure(_dk_cases(s), ok, "case")


def _dk_series(s):
    order = min(s, 6)
    for d, k in ((3, 1), (3, 2)):
        n = sr.fixed_point_series((d, k), order)
        for key, c in n.counts():
            widths = tuple(e + 1 for e in key)
            if sum(e for e in key) > 4:
                continue
            if c != len(dk.enumerate_dk_by_size(d, k, widths)):
                return False, f"({d},{k}) count mismatch at widths {widths}"
        if not sr.restrict_variable(n, 3).agrees_with(sr.fixed_point_series((2, k), order)):
            return False, f"restriction of ({d},{k}) fails"
        if not sr.pde_residual(sr.m_from_n(n, d, k), d, k).is_zero():
            return False, f"({d},{k}) PDE residual is non-zero"
    for d in (2, 3, 4):
        got = sr.fixed_point_series((d, d), 10)
        want = {(m,) * d: Fraction(1, math.factorial(m) ** d) for m in range(10 // d + 1)}
        if dict(got.items()) != want:
            return False, f"({d},{d}) closed form fails"
    j0 = sr.fixed_point_series((2, 2), 10).substitute_linear([Fraction(1, 2), Fraction(-1, 2)])
    if j0 != sr.bessel_j0(10):
        return False, "Bessel identity fails"
    return True, "counts, restriction, PDE, (d,d) closed form, Bessel"


SUITES: dict[str, list[tuple[str, Check]]] = {
    "nat": [
        ("Catalan shape counts", _nat_catalan),
        ("hook formula = recursive = brute force", _nat_hook_vs_enumeration),
        ("validity, size identity, JSON round trip", _nat_valid_and_sizes),
        ("restriction to subtrees is a NAT", _nat_restriction),
        ("GFN coefficients = counts", _nat_gfn_coefficients),
        ("hook numbers vs leaf parents (A127157)", _nat_a127157),
    ],
    "qhook": [
        ("inv/imaj weight sums = q-hook product", _q_weight_sums),
        ("q-pumping over a tree = q-hook product", _q_pump_tree),
        ("q = 1 gives the hook count", _q_specialisation),
        ("inv and imaj kernels", _perm_stats_sanity),
        ("constructive pumping = filtered pumping", _pump_perm_oracle),
        ("Psi commutes with pumping", _pump_commutes),
    ],
    "bijections": [
        ("xi, Omega, 4-tuple round trips", _bij_round_trips),
        ("word pair image characterization", _bij_word_images),
        ("NOT tree image characterization", _bij_not_images),
        ("q-Stirling recurrence = partition count", _bij_q_stirling),
        ("Stirling summands = counts by hook number", _bij_stirling_sum),
    ],
    "series": [
        ("GFN closed form = fixed points", _ser_gfn_fixed_point),
        ("N, H, M relations", _ser_relations),
        ("tree pumping sums to M", _ser_tree_pumping),
        ("GFN(alpha, beta): counts and differential identity", _ser_gfnab),
        ("GFN coefficients are non-negative integers", _ser_integrality),
    ],
    "dk": [
        ("(d,k) hook formula = recursive = brute force", _dk_hook),
        ("root label forcing and interval clause", _dk_root_and_interval),
        ("geometric round trip and clauses", _dk_geometric),
        ("(2,1) matches binary NATs", _dk_two_one),
        ("dimension reduction", _dk_dimension_reduction),
        ("fixed-point series, restriction, Bessel", _dk_series),
    ],
}


def run_suite(name: str, max_size: int) -> list[PropertyResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    out = []
    for prop, check in SUITES[name]:
        try:
            ok, detail = check(max_size)
        except Exception as exc:  # report, do not abort the remaining checks
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(PropertyResult(name, prop, bool(ok), detail))
    return out


def run_all(max_size: int) -> list[PropertyResult]:
    return [r for name in SUITES for r in run_suite(name, max_size)]
