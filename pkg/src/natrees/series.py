"""Exact truncated exponential generating functions in several variables.

A :class:`TruncatedEgf` stores ordinary monomial coefficients as
:class:`fractions.Fraction` values, keyed by exponent tuples. The first
``nvars`` slots are the series variables ``x_1..x_d`` and are truncated by
total degree; any further slots hold formal parameters (``alpha``, ``beta``)
that appear polynomially and never count towards truncation.

The ``order`` attribute is the precision: all coefficients of total degree
``<= order`` are exact. Differentiation lowers it by one, integration raises
it by one, and binary operations take the minimum.

Variable indices in the public API are 1-based, matching directions.
"""

from __future__ import annotations

import csv
import io
import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from natrees.trees import BinaryTree

__all__ = [
    "TruncatedEgf",
    "directions",
    "pump_series",
    "pump_tree_series",
    "closed_form_series",
    "fixed_point_series",
    "m_from_n",
    "pde_residual",
    "restrict_variable",
    "bessel_j0",
    "SeriesError",
]

Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    pass


def _key_degree(key: tuple[int, ...], nvars: int) -> int:
    return sum(key[:nvars])


class TruncatedEgf:
    __slots__ = ("nvars", "params", "order", "_c")

    def __init__(self, nvars: int, order: int, coeffs=None, params: Sequence[str] = ()):
        if nvars < 0:
            raise SeriesError("nvars must be non-negative")
        if order < 0:
            raise SeriesError("order must be non-negative")
        self.nvars = nvars
        self.params = tuple(params)
        self.order = order
        width = nvars + len(self.params)
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != width:
                raise SeriesError(f"exponent {key} has wrong length (expected {width})")
            if c and sum(key[:nvars]) <= order:
                clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
                if not clean[key]:
                    del clean[key]
        self._c = clean

    # -- constructors -----------------------------------------------------
    def _like(self, coeffs, order: Optional[int] = None) -> "TruncatedEgf":
        return TruncatedEgf(self.nvars, self.order if order is None else order, coeffs, self.params)

    @classmethod
    def constant(cls, c: Scalar, nvars: int, order: int, params=()) -> "TruncatedEgf":
        return cls(nvars, order, {(0,) * (nvars + len(params)): c}, params)

    @classmethod
    def variable(cls, i: int, nvars: int, order: int, params=()) -> "TruncatedEgf":
        """The series ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise SeriesError(f"variable index {i} out of range 1..{nvars}")
        key = [0] * (nvars + len(params))
        key[i - 1] = 1
        return cls(nvars, order, {tuple(key): 1}, params)

    @classmethod
    def parameter(cls, name: str, nvars: int, order: int, params) -> "TruncatedEgf":
        params = tuple(params)
        key = [0] * (nvars + len(params))
        key[nvars + params.index(name)] = 1
        return cls(nvars, order, {tuple(key): 1}, params)

    # -- inspection -------------------------------------------------------
    def coefficient(self, *exponents: int) -> Fraction:
        """Monomial coefficient; missing parameter exponents default to 0."""
        key = tuple(exponents) + (0,) * (self.nvars + len(self.params) - len(exponents))
        if _key_degree(key, self.nvars) > self.order:
            raise SeriesError(f"degree {_key_degree(key, self.nvars)} exceeds precision {self.order}")
        return self._c.get(key, Fraction(0))

    def egf_coefficient(self, *exponents: int) -> Fraction:
        """Coefficient times the factorials of the variable exponents."""
        c = self.coefficient(*exponents)
        for e in exponents[: self.nvars]:
            c *= math.factorial(e)
        return c

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (_key_degree(kv[0], self.nvars), kv[0]))

    def parameter_polynomial(self, *exponents: int) -> dict[tuple[int, ...], Fraction]:
        """Coefficient of a variable monomial as ``{parameter exponents: value}``."""
        n = self.nvars
        return {k[n:]: c for k, c in self._c.items() if k[:n] == tuple(exponents)}

    def is_zero(self) -> bool:
        return not self._c

    def valuation(self) -> Optional[int]:
        return min((_key_degree(k, self.nvars) for k in self._c), default=None)

    def truncate(self, order: int) -> "TruncatedEgf":
        if order > self.order:
            raise SeriesError(f"cannot raise precision from {self.order} to {order}")
        return self._like(self._c, order)

    def agrees_with(self, other: "TruncatedEgf", order: Optional[int] = None) -> bool:
        self._check(other)
        top = min(self.order, other.order) if order is None else order
        if top > min(self.order, other.order):
            raise SeriesError("comparison beyond available precision")
        return self.truncate(top)._c == other.truncate(top)._c

    def __eq__(self, other):
        if not isinstance(other, TruncatedEgf):
            return NotImplemented
        return (self.nvars, self.params, self.order, self._c) == (other.nvars, other.params, other.order, other._c)

    def __hash__(self):
        return hash((self.nvars, self.params, self.order, frozenset(self._c.items())))

    def __repr__(self):
        return f"TruncatedEgf(nvars={self.nvars}, order={self.order}, params={self.params}, terms={len(self._c)})"

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "TruncatedEgf"):
        if self.nvars != other.nvars or self.params != other.params:
            raise SeriesError("series live on different variable sets")

    def _coerce(self, other):
        if isinstance(other, TruncatedEgf):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedEgf.constant(other, self.nvars, self.order, self.params)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return self._like(out, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like({k: c * other for k, c in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        n = self.nvars
        left = [(k, _key_degree(k, n), c) for k, c in self._c.items()]
        right = [(k, _key_degree(k, n), c) for k, c in other._c.items()]
        out: dict[tuple[int, ...], Fraction] = {}
        for ka, da, ca in left:
            budget = order - da
            if budget < 0:
                continue
            for kb, db, cb in right:
                if db <= budget:
                    key = tuple(a + b for a, b in zip(ka, kb))
                    out[key] = out.get(key, 0) + ca * cb
        return self._like(out, order)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        out = TruncatedEgf.constant(1, self.nvars, self.order, self.params)
        for _ in range(m):
            out = out * self
        return out

    # -- calculus ---------------------------------------------------------
    def _index(self, i: int) -> int:
        if not 1 <= i <= self.nvars:
            raise SeriesError(f"variable index {i} out of range 1..{self.nvars}")
        return i - 1

    def derivative(self, i: int) -> "TruncatedEgf":
        j = self._index(i)
        if self.order == 0:
            raise SeriesError("differentiation needs precision at least 1")
        out = {}
        for k, c in self._c.items():
            if k[j]:
                key = list(k)
                key[j] -= 1
                out[tuple(key)] = c * k[j]
        return self._like(out, self.order - 1)

    def integral(self, i: int) -> "TruncatedEgf":
        j = self._index(i)
        out = {}
        for k, c in self._c.items():
            key = list(k)
            key[j] += 1
            out[tuple(key)] = c / key[j]
        return self._like(out, self.order + 1)

    def derivative_along(self, direction: Iterable[int]) -> "TruncatedEgf":
        s = self
        for i in direction:
            s = s.derivative(i)
        return s

    def integral_along(self, direction: Iterable[int]) -> "TruncatedEgf":
        s = self
        for i in direction:
            s = s.integral(i)
        return s

    # -- exp / log via the Euler operator --------------------------------
    def _components(self) -> list[dict[tuple[int, ...], Fraction]]:
        comps: list[dict] = [dict() for _ in range(self.order + 1)]
        for k, c in self._c.items():
            comps[_key_degree(k, self.nvars)][k] = c
        return comps

    @staticmethod
    def _hmul(a: dict, b: dict) -> dict:
        out: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                out[key] = out.get(key, 0) + ca * cb
        return out

    def exp(self) -> "TruncatedEgf":
        """``exp(g)`` for ``g`` without a degree-0 part, via ``n f_n = sum k g_k f_(n-k)``."""
        g = self._components()
        if g[0]:
            raise SeriesError("exp needs a series without constant term")
        f = [{(0,) * (self.nvars + len(self.params)): Fraction(1)}]
        for n in range(1, self.order + 1):
            acc: dict = {}
            for k in range(1, n + 1):
                for key, c in self._hmul(g[k], f[n - k]).items():
                    acc[key] = acc.get(key, 0) + k * c
            f.append({key: c / n for key, c in acc.items() if c})
        return self._like({k: c for comp in f for k, c in comp.items()})

    def log(self) -> "TruncatedEgf":
        """``log(v)`` for ``v`` with degree-0 part exactly 1, via ``n h_n = n v_n - sum k h_k v_(n-k)``."""
        v = self._components()
        one = (0,) * (self.nvars + len(self.params))
        if v[0] != {one: 1}:
            raise SeriesError("log needs a series with constant term 1")
        h: list[dict] = [{}]
        for n in range(1, self.order + 1):
            acc = {key: n * c for key, c in v[n].items()}
            for k in range(1, n):
                for key, c in self._hmul(h[k], v[n - k]).items():
                    acc[key] = acc.get(key, 0) - k * c
            h.append({key: c / n for key, c in acc.items() if c})
        return self._like({k: c for comp in h for k, c in comp.items()})

    def neg_power(self, s: Union[Scalar, "TruncatedEgf"]) -> "TruncatedEgf":
        """``(1 - self)^(-s)`` by the binomial series ``sum rising(s, m)/m! self^m``.

        ``self`` must have positive valuation; ``s`` may be a number or a
        series constant in the variables (e.g. ``alpha + beta``).
        """
        val = self.valuation()
        if val == 0:
            raise SeriesError("neg_power needs a series without constant term")
        one = TruncatedEgf.constant(1, self.nvars, self.order, self.params)
        total, power, rising = one, one, one
        m = 0
        while True:
            m += 1
            power = power * self
            if power.is_zero():
                break
            rising = rising * (s + (m - 1)) * Fraction(1, m)
            total = total + rising * power
        return total

    # -- specialisation ---------------------------------------------------
    def specialize_parameter(self, name: str, value: Scalar) -> "TruncatedEgf":
        """Substitute a number for a formal parameter, dropping its slot."""
        j = self.nvars + self.params.index(name)
        out: dict = {}
        for k, c in self._c.items():
            key = k[:j] + k[j + 1:]
            out[key] = out.get(key, 0) + c * Fraction(value) ** k[j]
        params = self.params[: j - self.nvars] + self.params[j - self.nvars + 1:]
        return TruncatedEgf(self.nvars, self.order, out, params)

    def substitute_linear(self, scales: Sequence[Scalar]) -> "TruncatedEgf":
        """Univariate series ``f(c_1 t, ..., c_d t)``."""
        if len(scales) != self.nvars:
            raise SeriesError("one scale per variable is required")
        n = self.nvars
        out: dict = {}
        for k, c in self._c.items():
            term = Fraction(c)
            for e, s in zip(k[:n], scales):
                term *= Fraction(s) ** e
            key = (sum(k[:n]),) + k[n:]
            out[key] = out.get(key, 0) + term
        return TruncatedEgf(1, self.order, out, self.params)

    # -- export -----------------------------------------------------------
    def variable_names(self) -> list[str]:
        if self.nvars == 2:
            base = ["x", "y"]
        elif self.nvars == 1:
            base = ["x"]
        else:
            base = [f"x{i}" for i in range(1, self.nvars + 1)]
        return base + list(self.params)

    def counts(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Rows ``(exponents, coefficient * prod of variable-exponent factorials)``."""
        out = []
        for k, c in self.items():
            for e in k[: self.nvars]:
                c *= math.factorial(e)
            out.append((k, c))
        return out

    def to_csv(self, counts: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        rows = self.counts() if counts else self.items()
        writer.writerow(self.variable_names() + ["numerator", "denominator"])
        for k, c in rows:
            writer.writerow(list(k) + [c.numerator, c.denominator])
        return buf.getvalue()


# ---------------------------------------------------------------------------

def directions(d: int, k: int) -> list[tuple[int, ...]]:
    """All ``k``-subsets of ``{1..d}`` as sorted tuples, lexicographic order."""
    if not 1 <= k <= d:
        raise SeriesError(f"need 1 <= k <= d, got d={d}, k={k}")
    return [tuple(i + 1 for i in c) for c in combinations(range(d), k)]


def pump_series(u: TruncatedEgf, v: TruncatedEgf, x_vars: Iterable[int] = (1,), y_vars: Iterable[int] = (2,)) -> TruncatedEgf:
    """``B(u, v) = int_x int_y d_x(u) d_y(v)`` along two directions."""
    u._check(v)
    if u.order != v.order:
        raise SeriesError(f"order mismatch: {u.order} != {v.order}")
    x_vars, y_vars = tuple(x_vars), tuple(y_vars)
    prod = u.derivative_along(x_vars) * v.derivative_along(y_vars)
    out = prod.integral_along(x_vars).integral_along(y_vars)
    return out.truncate(min(out.order, u.order))


def pump_tree_series(shape: Optional[BinaryTree], order: int) -> TruncatedEgf:
    """Recursive pumping over a binary tree from ``B(empty) = x + y``.

    The right subtree's series is differentiated in ``x`` and the left one
    in ``y``, so that ``x`` keeps counting left vertices.
    """
    if shape is None:
        return TruncatedEgf.variable(1, 2, order) + TruncatedEgf.variable(2, 2, order)
    return pump_series(pump_tree_series(shape.right, order), pump_tree_series(shape.left, order))


def _u_series(order: int, params=()) -> TruncatedEgf:
    x = TruncatedEgf.variable(1, 2, order, params)
    y = TruncatedEgf.variable(2, 2, order, params)
    return (x.exp() - 1) * (y.exp() - 1)


def closed_form_series(which: str, order: int) -> TruncatedEgf:
    """``gfn``, ``gfh`` or ``gfnab`` (with formal ``alpha``, ``beta``) expanded to ``order``.

    ``gfn = e^(x+y) / (1-u)^2``, ``gfh = -log(1-u)`` and
    ``gfnab = e^(alpha x + beta y) / (1-u)^(alpha+beta)`` with
    ``u = (e^x - 1)(e^y - 1)``.
    """
    which = which.lower().replace("_", "")
    if order < 0:
        raise SeriesError("order must be non-negative")
    if which == "gfn":
        u = _u_series(order)
        x, y = TruncatedEgf.variable(1, 2, order), TruncatedEgf.variable(2, 2, order)
        return (x + y).exp() * u.neg_power(2)
    if which == "gfh":
        return -((1 - _u_series(order)).log())
    if which in ("gfnab", "gfnalphabeta"):
        params = ("alpha", "beta")
        u = _u_series(order, params)
        x = TruncatedEgf.variable(1, 2, order, params)
        y = TruncatedEgf.variable(2, 2, order, params)
        a = TruncatedEgf.parameter("alpha", 2, order, params)
        b = TruncatedEgf.parameter("beta", 2, order, params)
        return (a * x + b * y).exp() * u.neg_power(a + b)
    raise SeriesError(f"unknown closed form {which!r}")


def fixed_point_series(spec, order: int) -> TruncatedEgf:
    """Unique solution of ``N = prod_pi (1 + int_pi N)`` over ``pi`` in ``D(d, k)``.

    ``spec`` is ``"2d"`` (``N = (1 + int_x N)(1 + int_y N)``) or a pair
    ``(d, k)``. Iterates from zero; each pass fixes one more total degree.
    """
    if spec == "2d":
        d, k = 2, 1
    else:
        d, k = spec
    dirs = directions(d, k)
    current = TruncatedEgf(d, order)
    for _ in range(order + 1):
        nxt = TruncatedEgf.constant(1, d, order + 1)
        for pi in dirs:
            nxt = nxt * (1 + current.integral_along(pi))
        current = nxt.truncate(order)
    check = TruncatedEgf.constant(1, d, order + 1)
    for pi in dirs:
        check = check * (1 + current.integral_along(pi))
    if check.truncate(order) != current:
        raise RuntimeError("fixed point iteration did not stabilise")
    return current


def m_from_n(n_series: TruncatedEgf, d: int, k: int) -> TruncatedEgf:
    """``M = int_(1..d) N + sum of x_pi`` over ``pi`` in ``D(d, d-k)``."""
    if n_series.nvars != d:
        raise SeriesError("series dimension does not match d")
    m = n_series.integral_along(range(1, d + 1))
    if k < d:
        for pi in directions(d, d - k):
            mono = TruncatedEgf.constant(1, d, m.order, n_series.params)
            for i in pi:
                mono = mono * TruncatedEgf.variable(i, d, m.order, n_series.params)
            m = m + mono
    return m


def pde_residual(candidate: TruncatedEgf, d: int, k: int, order: Optional[int] = None) -> TruncatedEgf:
    """``d_1...d_d M - prod_pi d_pi M`` over ``pi`` in ``D(d, d-k)`` for a candidate ``M``.

    For ``k = d`` the product is empty and equals 1. The result is exact to
    ``min(order, candidate.order - d)``.
    """
    if candidate.nvars != d:
        raise SeriesError("candidate dimension does not match d")
    if not 1 <= k <= d:
        raise SeriesError(f"need 1 <= k <= d, got d={d}, k={k}")
    lhs = candidate.derivative_along(range(1, d + 1))
    rhs = TruncatedEgf.constant(1, d, lhs.order, candidate.params)
    if k < d:
        for pi in directions(d, d - k):
            rhs = rhs * candidate.derivative_along(pi)
    res = lhs - rhs
    if order is not None:
        if order > res.order:
            raise SeriesError(f"residual only exact to order {res.order}")
        res = res.truncate(order)
    return res


def restrict_variable(s: TruncatedEgf, i: int) -> TruncatedEgf:
    """Set ``x_i = 0`` and drop that variable."""
    j = s._index(i)
    out = {k[:j] + k[j + 1:]: c for k, c in s._c.items() if k[j] == 0}
    return TruncatedEgf(s.nvars - 1, s.order, out, s.params)


def bessel_j0(order: int) -> TruncatedEgf:
    """``J_0(x)`` from ``a_0 = 1`` and ``a_(n+2) = -a_n / (n+2)^2``."""
    a = {0: Fraction(1)}
    for n in range(0, order - 1, 2):
        a[n + 2] = -a[n] / (n + 2) ** 2
    return TruncatedEgf(1, order, {(n,): c for n, c in a.items()})
