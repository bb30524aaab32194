"""q-analogues of the hook formula in the two variables ``(q_L, q_R)``.

The q-pumping map is computed in the q-divided-power basis
``X^(a) Y^(b) = x^a / [a]_{q_L}! * y^b / [b]_{q_R}!``, where q-derivatives
and q-integrals only shift exponents and products of basis elements pick up
q-binomial coefficients. All coefficients therefore stay polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from natrees.nat import Nat, enumerate_nats_of_shape
from natrees.perm import PermSum, extract_sigma, pump_pair, statistic
from natrees.poly import QPoly2, udivexact, umul
from natrees.trees import BinaryTree, vertex_stats

__all__ = [
    "QPoly2",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_hook_product",
    "q_weight",
    "q_weight_sum",
    "QDivSeries",
    "q_pump",
    "q_pump_tree",
    "psi",
    "psi_sum",
    "commutes",
    "match_display_variables",
]

_VARS = {"L": 0, "R": 1, "qL": 0, "qR": 1, 0: 0, 1: 1}


def _var(var) -> int:
    try:
        return _VARS[var]
    except KeyError:
        raise ValueError(f"unknown q variable {var!r}") from None


@lru_cache(maxsize=None)
def _uint(n: int) -> tuple[int, ...]:
    if n < 0:
        raise ValueError("q-integers need n >= 0")
    return (1,) * n


@lru_cache(maxsize=None)
def _ufact(n: int) -> tuple[int, ...]:
    if n < 0:
        raise ValueError("q-factorials need n >= 0")
    out = [1]
    for i in range(1, n + 1):
        out = umul(out, list(_uint(i)))
    return tuple(out)


@lru_cache(maxsize=None)
def _ubinom(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or k > n:
        return ()
    return tuple(udivexact(udivexact(list(_ufact(n)), list(_ufact(k))), list(_ufact(n - k))))


def q_int(n: int, var="L") -> QPoly2:
    """``[n]_q = 1 + q + ... + q^(n-1)`` in ``q_L`` or ``q_R``."""
    return QPoly2.from_univariate(_uint(n), _var(var))


def q_factorial(n: int, var="L") -> QPoly2:
    return QPoly2.from_univariate(_ufact(n), _var(var))


def q_binomial(n: int, k: int, var="L") -> QPoly2:
    return QPoly2.from_univariate(_ubinom(n, k), _var(var))


def _hook_quotient(n: int, divisors) -> list[int]:
    poly = list(_ufact(n))
    for e in sorted(divisors):
        poly = udivexact(poly, list(_uint(e)))
    return poly


def q_hook_product(shape: BinaryTree) -> QPoly2:
    """``[|LV|]_{q_L}! [|RV|]_{q_R}!`` over the q-integers of all EL and ER."""
    if shape is None:
        raise ValueError("the q-hook product needs a non-empty shape")
    st = vertex_stats(shape)
    left = _hook_quotient(st.n_left, st.el.values())
    right = _hook_quotient(st.n_right, st.er.values())
    return QPoly2.from_univariate(left, 0) * QPoly2.from_univariate(right, 1)


def q_weight(nat: Nat, stat: str) -> QPoly2:
    sl, sr = extract_sigma(nat)
    return QPoly2.monomial(statistic(sl, stat), statistic(sr, stat))


def q_weight_sum(shape: BinaryTree, stat: str, mode: str = "recursive") -> QPoly2:
    """Sum of ``q_L^S(sigma_L) q_R^S(sigma_R)`` over all NATs of the shape."""
    total: dict[tuple[int, int], int] = {}
    for nat in enumerate_nats_of_shape(shape, mode):
        sl, sr = extract_sigma(nat)
        key = (statistic(sl, stat), statistic(sr, stat))
        total[key] = total.get(key, 0) + 1
    return QPoly2(total)


class QDivSeries:
    """Finite sum ``sum c_ab X^(a) Y^(b)`` with :class:`QPoly2` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[tuple[int, int], QPoly2]] = None):
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    def __add__(self, other: "QDivSeries") -> "QDivSeries":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return QDivSeries(out)

    def __mul__(self, other: "QDivSeries") -> "QDivSeries":
        out: dict[tuple[int, int], QPoly2] = {}
        for (a, b), c in self.terms.items():
            for (e, f), d in other.terms.items():
                coeff = c * d * q_binomial(a + e, a, "L") * q_binomial(b + f, b, "R")
                key = (a + e, b + f)
                out[key] = out[key] + coeff if key in out else coeff
        return QDivSeries(out)

    def scale(self, c: QPoly2) -> "QDivSeries":
        return QDivSeries({k: v * c for k, v in self.terms.items()})

    def shift(self, da: int, db: int) -> "QDivSeries":
        """q-derivative (negative shift) or q-integral (positive shift)."""
        return QDivSeries({
            (a + da, b + db): c for (a, b), c in self.terms.items() if a + da >= 0 and b + db >= 0
        })

    def __eq__(self, other):
        return isinstance(other, QDivSeries) and self.terms == other.terms

    def __repr__(self):
        return " + ".join(f"({c})X^({a})Y^({b})" for (a, b), c in sorted(self.terms.items())) or "0"


def q_pump(u: QDivSeries, v: QDivSeries) -> QDivSeries:
    """q-pumping of a left-subtree series ``u`` with a right-subtree series ``v``.

    ``u`` is q-differentiated in ``y`` and ``v`` in ``x``: the root of the
    left subtree becomes a new left vertex, so ``u`` keeps its x-degree.
    """
    return (u.shift(0, -1) * v.shift(-1, 0)).shift(1, 1)


_EMPTY_SERIES = QDivSeries({(1, 0): QPoly2.constant(1), (0, 1): QPoly2.constant(1)})


def q_pump_tree(shape: Optional[BinaryTree]) -> QDivSeries:
    """Recursive q-pumping over a binary tree, starting from ``x + y`` at the empty tree."""
    if shape is None:
        return _EMPTY_SERIES
    return q_pump(q_pump_tree(shape.left), q_pump_tree(shape.right))


def psi(pair: tuple[tuple[int, ...], tuple[int, ...]], stat: str) -> QDivSeries:
    """``q_L^S(s_L) X^(m+1) q_R^S(s_R) Y^(n+1)`` for a pair in S_m x S_n."""
    sl, sr = pair
    mono = QPoly2.monomial(statistic(sl, stat), statistic(sr, stat))
    return QDivSeries({(len(sl) + 1, len(sr) + 1): mono})


def psi_sum(pair_sum: tuple[PermSum, PermSum], stat: str) -> QDivSeries:
    """Bilinear extension of :func:`psi` to a pair of formal sums."""
    left_sum, right_sum = pair_sum
    out = QDivSeries()
    for sl, ml in left_sum.items():
        for sr, mr in right_sum.items():
            out = out + psi((sl, sr), stat).scale(QPoly2.constant(ml * mr))
    return out


def commutes(sigma, mu, stat: str) -> bool:
    """Check that ``psi`` intertwines pair pumping with ``q_pump``."""
    return psi_sum(pump_pair(sigma, mu), stat) == q_pump(psi(sigma, stat), psi(mu, stat))


def _display_poly(factors) -> QPoly2:
    out = QPoly2.constant(1)
    for var, n in factors:
        out = out * q_int(n, var)
    return out


def match_display_variables(shape: BinaryTree, factors) -> list[dict[str, str]]:
    """Assignments of display variables ``qx``/``qy`` to ``q_L``/``q_R`` that reproduce the q-hook product.

    ``factors`` lists ``(display_var, n)`` pairs standing for ``[n]_{display_var}``.
    """
    target = q_hook_product(shape)
    matches = []
    for qx, qy in (("L", "R"), ("R", "L")):
        mapping = {"qx": qx, "qy": qy}
        if _display_poly([(mapping[v], n) for v, n in factors]) == target:
            matches.append({"qx": "q" + qx, "qy": "q" + qy})
    return matches
