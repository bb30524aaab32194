"""Worked examples shared by the tests, the verifier and the documentation.

Tree strings use the ``(L R)`` format of :mod:`natrees.trees`; label arrays
follow pre-order of left (resp. right) children.
"""

from natrees.bijections import parse_word
from natrees.nat import Nat
from natrees.trees import parse_tree

#: 22-vertex NAT with root label (11, 12); also the tree of the hook example.
EX22_SHAPE = parse_tree(
    "(((. .) (((. .) ((. .) ((. .) .))) (. .))) "
    "(. ((. ((. .) .)) (. (((. (. .)) .) (. .))))))"
)
EX22_NAT = Nat(EX22_SHAPE, (10, 2, 6, 1, 4, 3, 9, 8, 7, 5), (10, 8, 6, 9, 11, 7, 5, 4, 3, 2, 1))
EX22_SIGMA_L = (2, 1, 4, 3, 6, 10, 8, 9, 5, 7)
EX22_SIGMA_R = (1, 2, 3, 4, 5, 7, 11, 9, 6, 8, 10)
EX22_HOOK_NUMBER = 8

#: Grid picture of EX22_NAT as (red, blue) = (axis 1, axis 2) coordinates.
EX22_GRID = frozenset({
    (11, 12), (11, 11), (10, 10), (10, 9), (6, 8), (11, 7), (6, 6), (9, 5), (11, 4),
    (11, 3), (5, 2), (11, 1), (10, 12), (9, 7), (8, 5), (7, 3), (6, 10), (5, 3),
    (4, 8), (3, 6), (2, 12), (1, 10),
})

#: 8-vertex shape of the q-hook example and its two witnesses of weight q_L q_R^2 (imaj).
QHOOK_SHAPE = parse_tree("(((. .) (. .)) ((. (. .)) (. .)))")
QHOOK_DISPLAY = (("qx", 4), ("qy", 3), ("qx", 2))
QHOOK_WITNESSES = (
    Nat(QHOOK_SHAPE, (3, 2, 1), (2, 4, 3, 1)),
    Nat(QHOOK_SHAPE, (3, 2, 1), (2, 4, 1, 3)),
)
QHOOK_WITNESS_SIGMAS = (((2, 3, 1), (1, 3, 4, 2)), ((2, 3, 1), (3, 1, 4, 2)))

#: Word pair of EX22_NAT.
EX22_WORDS = (
    parse_word("r4 b8 r3 b6 r6 r1 b10 b9 r10 r2"),
    parse_word("b11 r8 b5 r9 b7 b4 r7 b2 r5 b3 b1"),
)

#: Associated 4-tuple: red singletons, blue singletons, red cycles, blue cycles;
#: each cycle is a sequence of (red set, blue set) pairs.
EX22_FOUR_TUPLE = (
    frozenset({2}),
    frozenset({1, 4, 11}),
    ((((10, 4), (8,)), ((3,), (6,)), ((6, 1), (10, 9))),),
    ((((8,), (5,)), ((9,), (7,))), (((7,), (2,)), ((5,), (3,)))),
)


def _dk(d, k, root, children):
    """Build a DkNat from nested ``(direction, label, children)`` triples."""
    from natrees.natdk import DkNat, DkTree

    def node(label, kids):
        return DkTree(tuple(label), tuple((tuple(pi), node(lab, sub)) for pi, lab, sub in kids))

    return DkNat(d, k, node(root, children))


_ = None

#: A (3,1)-NAT on 16 vertices; axis 3 uses the labels 1..5.
DK31_EXAMPLE = _dk(3, 1, (5, 7, 6), [
    ((1,), (4, _, _), [
        ((1,), (1, _, _), []),
        ((3,), (_, _, 5), [
            ((2,), (_, 5, _), [
                ((2,), (_, 3, _), []),
                ((3,), (_, _, 3), []),
            ]),
            ((3,), (_, _, 2), []),
        ]),
    ]),
    ((2,), (_, 4, _), [((3,), (_, _, 1), [])]),
    ((3,), (_, _, 4), [
        ((1,), (2, _, _), []),
        ((2,), (_, 6, _), [
            ((1,), (3, _, _), [((2,), (_, 2, _), [])]),
            ((2,), (_, 1, _), []),
        ]),
    ]),
])

#: The same tree with the axis-3 label below (_, 5, _) changed to 4, so 4 appears twice.
DK31_REPEATED_LABEL = _dk(3, 1, (5, 7, 6), [
    ((1,), (4, _, _), [
        ((1,), (1, _, _), []),
        ((3,), (_, _, 5), [
            ((2,), (_, 5, _), [
                ((2,), (_, 3, _), []),
                ((3,), (_, _, 4), []),
            ]),
            ((3,), (_, _, 2), []),
        ]),
    ]),
    ((2,), (_, 4, _), [((3,), (_, _, 1), [])]),
    ((3,), (_, _, 4), [
        ((1,), (2, _, _), []),
        ((2,), (_, 6, _), [
            ((1,), (3, _, _), [((2,), (_, 2, _), [])]),
            ((2,), (_, 1, _), []),
        ]),
    ]),
])

DK32_EXAMPLE = _dk(3, 2, (6, 5, 4), [
    ((1, 2), (5, 3, _), [
        ((1, 2), (3, 1, _), []),
        ((1, 3), (2, _, 2), []),
    ]),
    ((1, 3), (1, _, 1), []),
    ((2, 3), (_, 4, 3), [((1, 2), (4, 2, _), [])]),
])

del _
