"""Pure-Python versions of the hot kernels; API mirrors ``_kernels.pyx``.

``anc`` arrays encode a forest on positions ``0..m-1``: ``anc[j]`` is the
position of the nearest constrained ancestor of ``j`` or -1. A labelling
``p`` (a permutation of ``1..m``) is valid iff ``p[anc[j]] > p[j]`` for all
constrained ``j``.
"""

from itertools import permutations


def _is_valid(p, pairs):
    for j, a in pairs:
        if p[a] <= p[j]:
            return False
    return True


def valid_labellings(anc):
    """Valid permutations of ``1..len(anc)`` in lexicographic order."""
    pairs = [(j, a) for j, a in enumerate(anc) if a >= 0]
    return [p for p in permutations(range(1, len(anc) + 1)) if _is_valid(p, pairs)]


def count_valid(anc):
    pairs = [(j, a) for j, a in enumerate(anc) if a >= 0]
    return sum(1 for p in permutations(range(1, len(anc) + 1)) if _is_valid(p, pairs))


def brute_force_labellings(left_anc, right_anc):
    """Filter every (left, right) pair of label permutations.

    Pairs are visited with the left permutation as the outer loop, both in
    lexicographic order; accepted pairs are returned in visiting order.
    """
    lpairs = [(j, a) for j, a in enumerate(left_anc) if a >= 0]
    rpairs = [(j, a) for j, a in enumerate(right_anc) if a >= 0]
    rights = list(permutations(range(1, len(right_anc) + 1)))
    out = []
    for lp in permutations(range(1, len(left_anc) + 1)):
        for rp in rights:
            if _is_valid(lp, lpairs) and _is_valid(rp, rpairs):
                out.append((lp, rp))
    return out


def inversions(seq):
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


def imaj(seq):
    """Sum of descent positions (1-based) of the inverse of ``seq``."""
    n = len(seq)
    pos = [0] * (n + 1)
    for i, v in enumerate(seq):
        pos[v] = i
    return sum(i for i in range(1, n) if pos[i] > pos[i + 1])
