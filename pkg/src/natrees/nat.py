"""Non-ambiguous trees: validation, enumeration, hook-formula counting.

A :class:`Nat` stores its shape and two label arrays: ``left[j]`` is the
label of the ``j``-th left child in pre-order, likewise ``right``.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from natrees import kernels
from natrees.poly import QPoly2
from natrees.trees import (
    BinaryTree,
    enumerate_binary_trees,
    format_tree,
    hook_number,
    parse_tree,
    shape_info,
    tree_from_json,
    tree_to_json,
    vertex_stats,
)

__all__ = [
    "Nat",
    "NatStats",
    "ValidityReport",
    "BruteForceBudgetError",
    "validate_nat",
    "enumerate_nats_of_shape",
    "count_nats_hook",
    "count_nats_recursive",
    "shapes_by_size",
    "nat_key",
    "enumerate_nats_by_size",
    "nat_stats",
    "refined_count",
    "restrict",
    "bnat",
    "nat_to_json",
    "nat_from_json",
    "brute_force_budget",
]

DEFAULT_BRUTE_FORCE_BUDGET = 10**7


class BruteForceBudgetError(ValueError):
    """The brute-force oracle would visit more candidates than allowed."""


def brute_force_budget() -> int:
    """Candidate budget for brute-force oracles (``NATREES_BRUTE_BUDGET``)."""
    return int(os.environ.get("NATREES_BRUTE_BUDGET", DEFAULT_BRUTE_FORCE_BUDGET))


@dataclass(frozen=True)
class Nat:
    shape: BinaryTree
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def n(self) -> int:
        return shape_info(self.shape).n

    @property
    def n_left(self) -> int:
        return len(shape_info(self.shape).left_vertices)

    @property
    def n_right(self) -> int:
        return len(shape_info(self.shape).right_vertices)

    @property
    def widths(self) -> tuple[int, int]:
        return self.n_left + 1, self.n_right + 1

    root_label = widths

    def label(self, v: int) -> Optional[int]:
        """Label of pre-order vertex ``v`` (``None`` for the root)."""
        info = shape_info(self.shape)
        if info.side[v] == "L":
            return self.left[info.left_vertices.index(v)]
        if info.side[v] == "R":
            return self.right[info.right_vertices.index(v)]
        return None

    def labels_by_vertex(self) -> list[Optional[int]]:
        info = shape_info(self.shape)
        out: list[Optional[int]] = [None] * info.n
        for v, lab in zip(info.left_vertices, self.left):
            out[v] = lab
        for v, lab in zip(info.right_vertices, self.right):
            out[v] = lab
        return out


@dataclass(frozen=True)
class NatStats:
    n: int
    w_left: int
    w_right: int
    lo: int
    ro: int
    hook_number: int


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    kind: Optional[str] = None  # "structure" | "order" | "interval"
    vertex: Optional[int] = None
    message: str = "valid"

    def __bool__(self) -> bool:
        return self.ok


def _check_labels(labels, count, what):
    if len(labels) != count:
        return ValidityReport(False, "structure", None, f"expected {count} {what} labels, got {len(labels)}")
    return None


def validate_nat(nat: Nat) -> ValidityReport:
    """Check both conditions of the definition; report the first failure.

    Structural failures (wrong count, out of range, duplicate) are reported
    before ordering failures. Vertices are pre-order indices.
    """
    if nat.shape is None:
        return ValidityReport(False, "structure", None, "empty shape")
    info = shape_info(nat.shape)
    for verts, labels, what in (
        (info.left_vertices, nat.left, "left"),
        (info.right_vertices, nat.right, "right"),
    ):
        bad = _check_labels(labels, len(verts), what)
        if bad is not None:
            return bad
        seen = set()
        for v, lab in zip(verts, labels):
            if not isinstance(lab, int) or not 1 <= lab <= len(verts):
                return ValidityReport(False, "structure", v, f"{what} label {lab!r} out of range 1..{len(verts)}")
            if lab in seen:
                return ValidityReport(False, "structure", v, f"duplicate {what} label {lab}")
            seen.add(lab)
    labels = nat.labels_by_vertex()
    for v in range(1, info.n):
        anc = info.left_ancestor(v) if info.side[v] == "L" else info.right_ancestor(v)
        if anc >= 0 and labels[anc] <= labels[v]:
            return ValidityReport(
                False, "order", v,
                f"vertex {v} has label {labels[v]} not smaller than ancestor {anc} label {labels[anc]}",
            )
    return ValidityReport(True)


# ---------------------------------------------------------------------------
# recursive enumeration by label splitting

def _embed(block: list[int], sub: tuple[int, ...]) -> list[int]:
    return [block[x - 1] for x in sub]


def _split(total: int, k: int):
    """Yield ``(chosen, rest)`` sorted label lists for every k-subset."""
    universe = range(1, total + 1)
    for chosen in combinations(universe, k):
        cs = set(chosen)
        yield list(chosen), [x for x in universe if x not in cs]


def _combine(lshape, rshape, lnats, rnats):
    """All label pairs of ``node(lshape, rshape)`` restricting to the given sub-NAT labels."""
    al = (0 if lshape is None else len(shape_info(lshape).left_vertices) + 1)
    ar = 0 if rshape is None else len(shape_info(rshape).left_vertices)
    bl = 0 if lshape is None else len(shape_info(lshape).right_vertices)
    br = (0 if rshape is None else len(shape_info(rshape).right_vertices) + 1)
    out = []
    for la, lb in _split(al + ar, al):
        for ra, rb in _split(bl + br, bl):
            for (ll, lr) in lnats:
                for (rl, rr) in rnats:
                    left = ([la[-1]] if lshape is not None else []) + _embed(la, ll) + _embed(lb, rl)
                    right = _embed(ra, lr) + ([rb[-1]] if rshape is not None else []) + _embed(rb, rr)
                    out.append((tuple(left), tuple(right)))
    return out


@lru_cache(maxsize=None)
def _recursive_labels(shape: Optional[BinaryTree]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    if shape is None:
        return (((), ()),)
    return tuple(_combine(shape.left, shape.right,
                          _recursive_labels(shape.left), _recursive_labels(shape.right)))


def _ancestor_positions(shape: BinaryTree) -> tuple[list[int], list[int]]:
    info = shape_info(shape)
    lpos = {v: j for j, v in enumerate(info.left_vertices)}
    rpos = {v: j for j, v in enumerate(info.right_vertices)}
    left_anc = [lpos.get(info.left_ancestor(v), -1) for v in info.left_vertices]
    right_anc = [rpos.get(info.right_ancestor(v), -1) for v in info.right_vertices]
    return left_anc, right_anc


def _brute_force_labels(shape: BinaryTree):
    info = shape_info(shape)
    candidates = math.factorial(len(info.left_vertices)) * math.factorial(len(info.right_vertices))
    if candidates > brute_force_budget():
        raise BruteForceBudgetError(f"{candidates} candidate labellings exceed the brute-force budget")
    left_anc, right_anc = _ancestor_positions(shape)
    accepted = kernels.brute_force_labellings(left_anc, right_anc)
    for lab in accepted:
        if not validate_nat(Nat(shape, *lab)):
            raise AssertionError("kernel accepted an invalid labelling")
    return accepted


def enumerate_nats_of_shape(shape: BinaryTree, mode: str = "recursive") -> list[Nat]:
    """All NATs of a non-empty shape.

    ``mode="recursive"`` distributes label sets binomially between the two
    subtrees; ``mode="brute_force"`` filters every pair of label
    permutations and serves as the oracle.
    """
    if shape is None:
        raise ValueError("NATs have a non-empty shape")
    if mode == "recursive":
        labels = _recursive_labels(shape)
    elif mode == "brute_force":
        labels = _brute_force_labels(shape)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return [Nat(shape, l, r) for l, r in labels]


def count_nats_hook(shape: BinaryTree) -> int:
    """|LV|! |RV|! divided by the product of all EL and ER values."""
    if shape is None:
        raise ValueError("the hook formula needs a non-empty shape")
    st = vertex_stats(shape)
    num = math.factorial(st.n_left) * math.factorial(st.n_right)
    den = math.prod(st.el.values()) * math.prod(st.er.values())
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("hook formula produced a non-integer")
    return q


def count_nats_recursive(shape: Optional[BinaryTree]) -> int:
    """Binomial recursion on (left, right) subtrees, without enumeration."""
    if shape is None:
        return 1
    lv = len(shape_info(shape).left_vertices)
    rv = len(shape_info(shape).right_vertices)
    lr = 0 if shape.right is None else len(shape_info(shape.right).left_vertices)
    rl = 0 if shape.left is None else len(shape_info(shape.left).right_vertices)
    return (math.comb(lv, lr) * math.comb(rv, rl)
            * count_nats_recursive(shape.left) * count_nats_recursive(shape.right))


def shapes_by_size(w: int, h: int) -> list[BinaryTree]:
    """Shapes with ``w`` left and ``h`` right vertices, canonical order."""
    return [
        t for t in enumerate_binary_trees(w + h + 1)
        if len(shape_info(t).left_vertices) == w
    ]


def enumerate_nats_by_size(w: int, h: int, mode: str = "recursive") -> list[Nat]:
    """All NATs with ``w`` left and ``h`` right vertices, grouped by shape."""
    if w < 0 or h < 0:
        raise ValueError("sizes must be non-negative")
    out: list[Nat] = []
    for shape in shapes_by_size(w, h):
        out.extend(enumerate_nats_of_shape(shape, mode))
    return out


def nat_stats(nat: Nat) -> NatStats:
    st = vertex_stats(nat.shape)
    return NatStats(nat.n, st.n_left + 1, st.n_right + 1, st.lo, st.ro, hook_number(nat.shape))


def refined_count(w: int, h: int, by_hook_number: bool = False, weighting: str = "lo_ro"):
    """Sum of ``alpha^LO beta^RO`` over NATs of size ``(w, h)``.

    ``LO`` counts left vertices on the leftmost branch and ``RO`` right
    vertices on the rightmost branch, so ``alpha`` rides along ``x``. This is
    the weighting that the closed form and the differential equation for the
    refined series satisfy. ``weighting="ro_lo"`` gives ``alpha^RO beta^LO``,
    which is the same polynomial with ``alpha`` and ``beta`` exchanged.

    With ``by_hook_number`` a dict ``{p: polynomial}`` is returned instead.
    """
    if weighting not in ("lo_ro", "ro_lo"):
        raise ValueError(f"unknown weighting {weighting!r}")
    names = ("alpha", "beta")
    totals: dict[int, QPoly2] = {}
    for shape in shapes_by_size(w, h):
        st = vertex_stats(shape)
        p = hook_number(shape) if by_hook_number else 0
        a, b = (st.lo, st.ro) if weighting == "lo_ro" else (st.ro, st.lo)
        mono = QPoly2.monomial(a, b, count_nats_hook(shape), names=names)
        totals[p] = totals.get(p, QPoly2(names=names)) + mono
    if by_hook_number:
        return dict(sorted(totals.items()))
    return totals.get(0, QPoly2(names=names))


# ---------------------------------------------------------------------------
# restriction to subtrees and the tree-level pumping map

def _std(values):
    order = sorted(values)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in values)


def restrict(nat: Nat) -> tuple[Optional[Nat], Optional[Nat]]:
    """Renumbered restrictions ``(T_L, T_R)`` to the two root subtrees."""
    shape = nat.shape
    lshape, rshape = shape.left, shape.right
    al = 0 if lshape is None else len(shape_info(lshape).left_vertices) + 1
    bl = 0 if lshape is None else len(shape_info(lshape).right_vertices)
    left_part, left_rest = nat.left[:al], nat.left[al:]
    right_part, right_rest = nat.right[:bl], nat.right[bl:]
    tl = tr = None
    if lshape is not None:
        # the root of the left subtree comes first in pre-order; drop it
        tl = Nat(lshape, _std(left_part)[1:], _std(right_part))
    if rshape is not None:
        rr = _std(right_rest)
        tr = Nat(rshape, _std(left_rest), rr[1:])
    return tl, tr


def bnat(c: Optional[Nat], d: Optional[Nat]) -> list[Nat]:
    """NATs whose restrictions to the left/right subtrees are ``c`` and ``d``."""
    lshape = None if c is None else c.shape
    rshape = None if d is None else d.shape
    lnats = [((), ())] if c is None else [(c.left, c.right)]
    rnats = [((), ())] if d is None else [(d.left, d.right)]
    shape = BinaryTree(lshape, rshape)
    return [Nat(shape, l, r) for l, r in _combine(lshape, rshape, lnats, rnats)]


# ---------------------------------------------------------------------------
# JSON

def nat_to_json(nat: Nat) -> dict:
    return {"shape": tree_to_json(nat.shape), "left": list(nat.left), "right": list(nat.right)}


def nat_from_json(obj) -> Nat:
    """Inverse of :func:`nat_to_json`; ``shape`` may also be a tree string."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        raw = obj["shape"]
        shape = parse_tree(raw) if isinstance(raw, str) else tree_from_json(raw)
        return Nat(shape, tuple(int(x) for x in obj["left"]), tuple(int(x) for x in obj["right"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"not a NAT JSON object: {exc}") from exc


def nat_key(nat: Nat) -> tuple[str, tuple[int, ...], tuple[int, ...]]:
    return format_tree(nat.shape), nat.left, nat.right
