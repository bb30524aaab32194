"""Permutation statistics and the permutation pumping map.

Permutations are tuples in one-line notation on ``1..n``; the empty tuple
is the permutation of length 0. Formal sums of permutations are
:class:`collections.Counter` objects mapping a permutation to its
multiplicity.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from typing import Sequence

from natrees import kernels
from natrees.nat import Nat
from natrees.trees import shape_info

Perm = tuple[int, ...]
PermSum = Counter

__all__ = [
    "Perm",
    "PermSum",
    "extract_sigma",
    "statistic",
    "inverse",
    "std",
    "append_max",
    "pump_perm",
    "pump_perm_brute",
    "pump_pair",
    "is_perm",
]


def is_perm(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def extract_sigma(nat: Nat) -> tuple[Perm, Perm]:
    """Postfix readings ``(sigma_L, sigma_R)`` of a NAT.

    ``sigma_L`` reads left labels in the order left subtree, right subtree,
    vertex; ``sigma_R`` reads right labels in the order right subtree, left
    subtree, vertex.
    """
    info = shape_info(nat.shape)
    labels = nat.labels_by_vertex()
    sl: list[int] = []
    sr: list[int] = []
    # iterative post-order to keep deep trees off the recursion limit
    stack = [(0, False)]
    while stack:
        v, done = stack.pop()
        if done:
            if info.side[v] == "L":
                sl.append(labels[v])
            continue
        stack.append((v, True))
        for c in (info.right[v], info.left[v]):
            if c >= 0:
                stack.append((c, False))
    stack = [(0, False)]
    while stack:
        v, done = stack.pop()
        if done:
            if info.side[v] == "R":
                sr.append(labels[v])
            continue
        stack.append((v, True))
        for c in (info.left[v], info.right[v]):
            if c >= 0:
                stack.append((c, False))
    return tuple(sl), tuple(sr)


def statistic(sigma: Sequence[int], which: str) -> int:
    """``inv`` (inversion count) or ``imaj`` (major index of the inverse)."""
    if which == "inv":
        return kernels.inversions(tuple(sigma))
    if which == "imaj":
        return kernels.imaj(tuple(sigma))
    raise ValueError(f"unknown statistic {which!r}")


def inverse(sigma: Sequence[int]) -> Perm:
    out = [0] * len(sigma)
    for i, v in enumerate(sigma):
        out[v - 1] = i + 1
    return tuple(out)


def std(word: Sequence[int]) -> Perm:
    """Order-preserving renumbering of a repetition-free word onto ``1..l``."""
    if len(set(word)) != len(word):
        raise ValueError("std needs a repetition-free word")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def append_max(sigma: Sequence[int]) -> Perm:
    return tuple(sigma) + (len(sigma) + 1,)


def pump_perm(sigma: Sequence[int], mu: Sequence[int]) -> PermSum:
    """Sum of all ``uv`` with ``std(u) = append_max(sigma)`` and ``std(v) = mu``.

    Built by choosing which values go into ``u``.
    """
    u_pat = append_max(sigma)
    total = len(u_pat) + len(mu)
    out: PermSum = Counter()
    for chosen in combinations(range(1, total + 1), len(u_pat)):
        cs = set(chosen)
        rest = [x for x in range(1, total + 1) if x not in cs]
        u = tuple(chosen[i - 1] for i in u_pat)
        v = tuple(rest[i - 1] for i in mu)
        out[u + v] += 1
    return out


def pump_perm_brute(sigma: Sequence[int], mu: Sequence[int]) -> PermSum:
    """Oracle for :func:`pump_perm`: filter every permutation of the right length."""
    u_pat = append_max(sigma)
    mu = tuple(mu)
    m = len(u_pat)
    out: PermSum = Counter()
    for w in permutations(range(1, m + len(mu) + 1)):
        if std(w[:m]) == u_pat and std(w[m:]) == mu:
            out[w] += 1
    return out


def pump_pair(sigma: tuple[Perm, Perm], mu: tuple[Perm, Perm]) -> tuple[PermSum, PermSum]:
    """Pair version: left components pumped as ``(sigma, mu)``, right as ``(mu, sigma)``."""
    return pump_perm(sigma[0], mu[0]), pump_perm(mu[1], sigma[1])
