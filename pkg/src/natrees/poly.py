"""Sparse bivariate polynomials with integer (or rational) coefficients.

Used for q-analogues in ``(q_L, q_R)`` and for the ``(alpha, beta)``
refinements. Univariate helpers operate on dense coefficient lists.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class QPoly2:
    """Immutable polynomial in two variables, stored as ``{(e1, e2): c}``.

    Zero coefficients are never stored. The variable names only affect
    printing.
    """

    __slots__ = ("_terms", "names")

    def __init__(self, terms=None, names: tuple[str, str] = ("qL", "qR")):
        clean: dict[tuple[int, int], Number] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (a, b), c in items:
                if a < 0 or b < 0:
                    raise ValueError("negative exponent")
                if c:
                    c = clean.get((a, b), 0) + c
                    if c:
                        clean[(a, b)] = c
                    else:
                        clean.pop((a, b), None)
        self._terms = clean
        self.names = names

    # construction helpers
    @classmethod
    def constant(cls, c: Number, names=("qL", "qR")) -> "QPoly2":
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, a: int, b: int, c: Number = 1, names=("qL", "qR")) -> "QPoly2":
        return cls({(a, b): c}, names)

    @classmethod
    def from_univariate(cls, coeffs: Iterable[Number], var: int, names=("qL", "qR")) -> "QPoly2":
        """Embed ``sum c_i t^i`` as a polynomial in variable 0 or 1."""
        if var == 0:
            return cls({(i, 0): c for i, c in enumerate(coeffs)}, names)
        return cls({(0, i): c for i, c in enumerate(coeffs)}, names)

    @property
    def terms(self) -> dict[tuple[int, int], Number]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def coefficient(self, a: int, b: int) -> Number:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    def evaluate(self, u: Number, v: Number) -> Number:
        return sum(c * u**a * v**b for (a, b), c in self._terms.items())

    def specialize(self, var: int, value: Number) -> "QPoly2":
        """Substitute ``value`` for one variable, keeping the other."""
        out: dict[tuple[int, int], Number] = {}
        for (a, b), c in self._terms.items():
            if var == 0:
                key, c = (0, b), c * value**a
            else:
                key, c = (a, 0), c * value**b
            out[key] = out.get(key, 0) + c
        return QPoly2(out, self.names)

    def truncate(self, max_degree: int) -> "QPoly2":
        return QPoly2({k: c for k, c in self._terms.items() if sum(k) <= max_degree}, self.names)

    def swap(self) -> "QPoly2":
        return QPoly2({(b, a): c for (a, b), c in self._terms.items()}, self.names)

    # arithmetic
    def _coerce(self, other) -> "QPoly2":
        if isinstance(other, QPoly2):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly2.constant(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QPoly2(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return QPoly2({k: -c for k, c in self._terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Number] = {}
        for (a, b), c in self._terms.items():
            for (e, f), d in other._terms.items():
                key = (a + e, b + f)
                out[key] = out.get(key, 0) + c * d
        return QPoly2(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = QPoly2.constant(1, self.names)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly2.constant(other)
        if not isinstance(other, QPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # serialization
    def to_triples(self) -> list[list[Number]]:
        """``[e1, e2, coeff]`` triples in graded-lex order."""
        keys = sorted(self._terms, key=lambda k: (k[0] + k[1], k))
        return [[a, b, self._terms[(a, b)]] for a, b in keys]

    @classmethod
    def from_triples(cls, triples, names=("qL", "qR")) -> "QPoly2":
        return cls({(int(a), int(b)): c for a, b, c in triples}, names)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = []
            for name, e in zip(self.names, (a, b)):
                if e == 1:
                    mono.append(name)
                elif e > 1:
                    mono.append(f"{name}^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            elif c == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = __repr__


# ---------------------------------------------------------------------------
# dense univariate helpers

def umul(p: list[Number], q: list[Number]) -> list[Number]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def udivexact(p: list[Number], d: list[Number]) -> list[Number]:
    """Exact quotient ``p / d``; raises ``ArithmeticError`` on a remainder.

    ``d`` must have leading coefficient dividing the dividend's coefficients
    at each step (true for the monic q-integers used here).
    """
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    d = list(d)
    while d and d[-1] == 0:
        d.pop()
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return []
    if len(p) < len(d):
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (len(p) - len(d) + 1)
    lead = d[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = p[i + len(d) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        quot[i] = c
        if c:
            for j, dj in enumerate(d):
                p[i + j] -= c * dj
    if any(p[: len(d) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return quot
