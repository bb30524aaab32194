"""Bijections from NATs to labelled ordered trees, word pairs and 4-tuples.

Colours are ``"red"`` (left vertices of the NAT) and ``"blue"`` (right
vertices). Also hosts the q-Stirling numbers and the positive summation
formula counting NATs by hook number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from natrees.nat import Nat
from natrees.poly import QPoly2
from natrees.trees import BinaryTree, OrderedTree, shape_info

__all__ = [
    "RED",
    "BLUE",
    "Letter",
    "WordPair",
    "FourTuple",
    "NotTreeError",
    "WordPairError",
    "xi",
    "xi_inv",
    "validate_not",
    "omega",
    "omega_inv",
    "validate_word_pair",
    "four_tuple",
    "four_tuple_inv",
    "set_partitions",
    "q_stirling",
    "q_stirling_brute",
    "rising_factorial",
    "stirling_count",
    "enumerate_not_trees",
    "enumerate_word_pairs",
    "parse_word",
    "format_word",
    "not_to_json",
    "not_from_json",
    "word_pair_to_json",
    "word_pair_from_json",
    "four_tuple_to_json",
    "four_tuple_from_json",
]

RED = "red"
BLUE = "blue"
_OTHER = {RED: BLUE, BLUE: RED}

Letter = tuple[str, int]
WordPair = tuple[tuple[Letter, ...], tuple[Letter, ...]]


class NotTreeError(ValueError):
    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class WordPairError(ValueError):
    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


def parse_word(text: str) -> tuple[Letter, ...]:
    """Parse ``"r4 b8 r3"`` into coloured letters."""
    out = []
    for tok in text.split():
        colour = {"r": RED, "b": BLUE}.get(tok[0])
        if colour is None:
            raise ValueError(f"bad letter {tok!r}")
        out.append((colour, int(tok[1:])))
    return tuple(out)


def format_word(word: Sequence[Letter]) -> str:
    return " ".join(f"{c[0]}{v}" for c, v in word)


# ---------------------------------------------------------------------------
# xi: NAT -> NOT tree

def _branch(info, v: int, side: str) -> list[int]:
    out = []
    step = info.left if side == "L" else info.right
    u = step[v]
    while u >= 0:
        out.append(u)
        u = step[u]
    return out


def xi(nat: Nat) -> OrderedTree:
    """The NOT tree of a NAT.

    Children of the root are its leftmost branch (red) followed by its
    rightmost branch (blue); children of a left (right) vertex are its
    rightmost (leftmost) branch, all listed top-down.
    """
    info = shape_info(nat.shape)
    labels = nat.labels_by_vertex()

    def build(v: int) -> OrderedTree:
        if info.side[v] == "L":
            return OrderedTree(tuple(build(u) for u in _branch(info, v, "R")), RED, labels[v])
        return OrderedTree(tuple(build(u) for u in _branch(info, v, "L")), BLUE, labels[v])

    kids = [build(u) for u in _branch(info, 0, "L")] + [build(u) for u in _branch(info, 0, "R")]
    return OrderedTree(tuple(kids), None, nat.widths)


def _descendants(node: OrderedTree) -> Iterator[OrderedTree]:
    for c in node.children:
        yield c
        yield from _descendants(c)


def validate_not(tree: OrderedTree) -> None:
    """Raise :class:`NotTreeError` naming the first violated NOT clause."""
    if tree.colour is not None or not (isinstance(tree.label, tuple) and len(tree.label) == 2):
        raise NotTreeError("root", "root must be uncoloured with a (red, blue) label pair")
    nodes = list(_descendants(tree))
    for v in nodes:
        if v.colour not in (RED, BLUE) or not isinstance(v.label, int):
            raise NotTreeError("colouring", f"vertex {v.label!r} needs a colour and an integer label")
    for colour, root_label in ((RED, tree.label[0]), (BLUE, tree.label[1])):
        labs = sorted(v.label for v in nodes if v.colour == colour)
        if labs != list(range(1, len(labs) + 1)):
            raise NotTreeError("labels", f"{colour} labels are not a permutation of 1..{len(labs)}")
        if root_label != len(labs) + 1:
            raise NotTreeError("root", f"root {colour} label must be maximal ({len(labs) + 1})")
    seen_blue = False
    for c in tree.children:
        if c.colour == BLUE:
            seen_blue = True
        elif seen_blue:
            raise NotTreeError("root-order", "red children of the root must precede blue children")
    for v in nodes:
        for c in v.children:
            if c.colour == v.colour:
                raise NotTreeError("alternation", f"{v.colour} vertex {v.label} has a {c.colour} child")
    for parent in [tree] + nodes:
        kids = parent.children
        for i, v in enumerate(kids):
            for w in kids[i + 1:]:
                if w.colour == v.colour and w.label >= v.label:
                    raise NotTreeError("decreasing", f"right sibling {w.label} of {v.colour} {v.label} is not smaller")
            for w in _descendants(v):
                if w.colour == v.colour and w.label >= v.label:
                    raise NotTreeError("decreasing", f"descendant {w.label} of {v.colour} {v.label} is not smaller")


def xi_inv(tree: OrderedTree) -> Nat:
    """Rebuild the NAT of a NOT tree; rejects trees outside NOT."""
    validate_not(tree)

    def chain(nodes: Sequence[OrderedTree]):
        """Binary tree of a same-colour sibling chain, with pre-order (side, label) list."""
        if not nodes:
            return None, []
        head, rest = nodes[0], nodes[1:]
        rest_tree, rest_seq = chain(rest)
        kid_tree, kid_seq = chain(head.children)
        if head.colour == RED:
            return BinaryTree(rest_tree, kid_tree), [("L", head.label)] + rest_seq + kid_seq
        return BinaryTree(kid_tree, rest_tree), [("R", head.label)] + kid_seq + rest_seq

    reds = [c for c in tree.children if c.colour == RED]
    blues = [c for c in tree.children if c.colour == BLUE]
    lt, lseq = chain(reds)
    rt, rseq = chain(blues)
    seq = lseq + rseq
    return Nat(
        BinaryTree(lt, rt),
        tuple(lab for s, lab in seq if s == "L"),
        tuple(lab for s, lab in seq if s == "R"),
    )


# ---------------------------------------------------------------------------
# Omega: NOT tree -> pair of coloured words

def _postorder(node: OrderedTree) -> list[Letter]:
    out: list[Letter] = []
    for c in node.children:
        out.extend(_postorder(c))
    out.append((node.colour, node.label))
    return out


def omega(tree: OrderedTree) -> WordPair:
    """Post-order readings of the red and of the blue root-children subtrees."""
    w1: list[Letter] = []
    w2: list[Letter] = []
    for c in tree.children:
        (w1 if c.colour == RED else w2).extend(_postorder(c))
    return tuple(w1), tuple(w2)


def validate_word_pair(wp: WordPair) -> tuple[int, int]:
    """Check the image characterization; return ``(#red, #blue)``."""
    if len(wp) != 2:
        raise WordPairError("shape", "a word pair has exactly two words")
    letters = [l for w in wp for l in w]
    for c, v in letters:
        if c not in (RED, BLUE) or not isinstance(v, int):
            raise WordPairError("letters", f"bad letter {(c, v)!r}")
    counts = []
    for colour in (RED, BLUE):
        vals = sorted(v for c, v in letters if c == colour)
        if vals != list(range(1, len(vals) + 1)):
            raise WordPairError("letters", f"{colour} letters must be 1..{len(vals)}, each exactly once")
        counts.append(len(vals))
    for word in wp:
        for a, b in zip(word, word[1:]):
            if a[0] == b[0] and a[1] <= b[1]:
                raise WordPairError("blocks", f"block {format_word([a, b])} is not decreasing")
    if wp[0] and wp[0][-1][0] != RED:
        raise WordPairError("ends", "the first word must end with a red letter")
    if wp[1] and wp[1][-1][0] != BLUE:
        raise WordPairError("ends", "the second word must end with a blue letter")
    return counts[0], counts[1]


def omega_inv(wp: WordPair) -> OrderedTree:
    """Rebuild the NOT tree by reading each word from right to left.

    Each new letter becomes the left sibling of the highest vertex on the
    current root path that has its colour and a smaller label, or else the
    first child of the current vertex.
    """
    n_red, n_blue = validate_word_pair(wp)
    tops = []
    for word, top_colour in ((wp[0], RED), (wp[1], BLUE)):
        root = {"colour": None, "label": None, "children": []}
        tops.append(root)
        path = [root]
        for colour, value in reversed(word):
            node = {"colour": colour, "label": value, "children": []}
            idx = next(
                (i for i in range(1, len(path)) if path[i]["colour"] == colour and path[i]["label"] < value),
                None,
            )
            if idx is None:
                parent = path[-1]
                if parent["colour"] == colour or (parent is root and colour != top_colour):
                    raise WordPairError("reconstruction", f"no place for letter {colour[0]}{value}")
            else:
                parent = path[idx - 1]
                if parent is root and colour != top_colour:
                    raise WordPairError("reconstruction", f"no place for letter {colour[0]}{value}")
                del path[idx:]
            parent["children"].insert(0, node)
            path.append(node)

    def freeze(d) -> OrderedTree:
        return OrderedTree(tuple(freeze(c) for c in d["children"]), d["colour"], d["label"])

    tree = OrderedTree(
        tuple(freeze(c) for top in tops for c in top["children"]), None, (n_red + 1, n_blue + 1)
    )
    try:
        validate_not(tree)
    except NotTreeError as exc:
        raise WordPairError("reconstruction", str(exc)) from exc
    if omega(tree) != (tuple(wp[0]), tuple(wp[1])):
        raise WordPairError("reconstruction", "word pair is not in the image of omega")
    return tree


# ---------------------------------------------------------------------------
# 4-tuples

Cycle = tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


@dataclass(frozen=True)
class FourTuple:
    """Root leaves of each colour, then red and blue cycles.

    A cycle is a sequence of ``(red values, blue values)`` pairs, each value
    block decreasing. Red cycles start with their largest red value; blue
    cycles end with the pair holding their largest blue value.
    """

    red_set: frozenset[int]
    blue_set: frozenset[int]
    red_cycles: tuple[Cycle, ...]
    blue_cycles: tuple[Cycle, ...]

    def as_tuple(self):
        return self.red_set, self.blue_set, self.red_cycles, self.blue_cycles


def _blocks(seq: Sequence[Letter]) -> list[list[Letter]]:
    out: list[list[Letter]] = []
    for letter in seq:
        if out and out[-1][0][0] == letter[0]:
            out[-1].append(letter)
        else:
            out.append([letter])
    return out


def _pairs(seq: Sequence[Letter]) -> Cycle:
    blocks = _blocks(seq)
    if len(blocks) % 2 or blocks[0][0][0] != RED:
        raise AssertionError("cycle must alternate red/blue blocks starting with red")
    return tuple(
        (tuple(v for _, v in blocks[i]), tuple(v for _, v in blocks[i + 1]))
        for i in range(0, len(blocks), 2)
    )


def four_tuple(wp: WordPair) -> FourTuple:
    tree = omega_inv(wp)
    red_set, blue_set, red_cycles, blue_cycles = set(), set(), [], []
    segments = {RED: [], BLUE: []}
    for child in tree.children:
        segments[child.colour].append(_postorder(child))
    for seg in segments[RED]:
        if len(seg) == 1:
            red_set.add(seg[0][1])
        else:
            red_cycles.append(_pairs([seg[-1]] + seg[:-1]))
    for seg in segments[BLUE]:
        if len(seg) == 1:
            blue_set.add(seg[0][1])
        else:
            k = 0
            while seg[k][0] == BLUE:
                k += 1
            blue_cycles.append(_pairs(seg[k:] + seg[:k]))
    return FourTuple(frozenset(red_set), frozenset(blue_set), tuple(red_cycles), tuple(blue_cycles))


def _flatten(cycle: Cycle) -> list[Letter]:
    out: list[Letter] = []
    for reds, blues in cycle:
        out.extend((RED, v) for v in reds)
        out.extend((BLUE, v) for v in blues)
    return out


def four_tuple_inv(ft: FourTuple) -> WordPair:
    red_segs = [[(RED, v)] for v in ft.red_set]
    for cyc in ft.red_cycles:
        seq = _flatten(cyc)
        red_segs.append(seq[1:] + seq[:1])
    blue_segs = [[(BLUE, v)] for v in ft.blue_set]
    for cyc in ft.blue_cycles:
        seq = _flatten(cyc)
        top = max(range(len(seq)), key=lambda i: seq[i][1] if seq[i][0] == BLUE else -1)
        blue_segs.append(seq[top + 1:] + seq[: top + 1])
    w1 = [l for seg in sorted(red_segs, key=lambda s: -s[-1][1]) for l in seg]
    w2 = [l for seg in sorted(blue_segs, key=lambda s: -s[-1][1]) for l in seg]
    wp = (tuple(w1), tuple(w2))
    try:
        ok = four_tuple(wp) == ft
    except (ValueError, AssertionError):
        ok = False
    if not ok:
        raise WordPairError("reconstruction", "4-tuple is not in the image of the word-pair map")
    return wp


# ---------------------------------------------------------------------------
# exhaustive images, used as oracles for surjectivity

def _colourings(tree: OrderedTree, colour: str) -> Iterator[OrderedTree]:
    """Colour a subtree whose root has ``colour``, alternating below."""
    def kids(children, c):
        if not children:
            yield ()
            return
        for first in _colourings(children[0], c):
            for rest in kids(children[1:], c):
                yield (first,) + rest
    for ch in kids(tree.children, _OTHER[colour]):
        yield OrderedTree(ch, colour, None)


def _label(tree: OrderedTree, reds: Iterator[int], blues: Iterator[int]) -> OrderedTree:
    lab = next(reds) if tree.colour == RED else next(blues)
    return OrderedTree(tuple(_label(c, reds, blues) for c in tree.children), tree.colour, lab)


def enumerate_not_trees(n: int) -> Iterator[OrderedTree]:
    """Every NOT tree on ``n`` vertices (root included), by filtering labelled colourings.

    Red and blue labellings are filtered independently since the NOT clauses
    never compare labels of different colours.
    """
    from itertools import permutations

    from natrees.trees import enumerate_ordered_trees

    for shape in enumerate_ordered_trees(n):
        k = len(shape.children)
        for split in range(k + 1):
            heads = []
            for i, c in enumerate(shape.children):
                heads.append(list(_colourings(c, RED if i < split else BLUE)))
            for combo in _product(heads):
                nodes = [v for c in combo for v in [c] + list(_descendants(c))]
                nr = sum(1 for v in nodes if v.colour == RED)
                nb = len(nodes) - nr
                skeleton = OrderedTree(combo, None, (nr + 1, nb + 1))
                red_ok = _filter_colour(skeleton, RED, nr, nb, permutations)
                blue_ok = _filter_colour(skeleton, BLUE, nr, nb, permutations)
                for rl in red_ok:
                    for bl in blue_ok:
                        ri, bi = iter(rl), iter(bl)
                        kids = tuple(_label(c, ri, bi) for c in combo)
                        yield OrderedTree(kids, None, (nr + 1, nb + 1))


def _product(lists):
    if not lists:
        yield ()
        return
    for first in lists[0]:
        for rest in _product(lists[1:]):
            yield (first,) + rest


def _filter_colour(skeleton, colour, nr, nb, permutations):
    """Label permutations of one colour (pre-order) that satisfy the NOT clauses."""
    ok = []
    count = nr if colour == RED else nb
    for perm in permutations(range(1, count + 1)):
        mine, filler = iter(perm), _counter()
        pair = (mine, filler) if colour == RED else (filler, mine)
        labelled = tuple(_label(c, *pair) for c in skeleton.children)
        if _colour_clauses_hold(OrderedTree(labelled, None, skeleton.label), colour):
            ok.append(perm)
    return ok


def _counter():
    i = 0
    while True:
        i += 1
        yield i


def _colour_clauses_hold(tree: OrderedTree, colour: str) -> bool:
    for parent in [tree] + list(_descendants(tree)):
        kids = parent.children
        for i, v in enumerate(kids):
            if v.colour != colour:
                continue
            for w in kids[i + 1:]:
                if w.colour == colour and w.label >= v.label:
                    return False
            for w in _descendants(v):
                if w.colour == colour and w.label >= v.label:
                    return False
    return True


def enumerate_word_pairs(n_red: int, n_blue: int) -> Iterator[WordPair]:
    """Every word pair satisfying the characterization, by filtering."""
    from itertools import permutations

    letters = [(RED, v) for v in range(1, n_red + 1)] + [(BLUE, v) for v in range(1, n_blue + 1)]
    total = len(letters)
    for arrangement in permutations(letters):
        for cut in range(total + 1):
            wp = (tuple(arrangement[:cut]), tuple(arrangement[cut:]))
            try:
                validate_word_pair(wp)
            except WordPairError:
                continue
            yield wp


# ---------------------------------------------------------------------------
# q-Stirling numbers and the positive summation formula

def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """Set partitions of ``{1..n}`` as lists of blocks."""
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n]] + part[i + 1:]
        yield part + [[n]]


def q_stirling_brute(n: int, p: int, var: int = 0, names=("alpha", "beta")) -> QPoly2:
    """Sum over partitions of ``{1..n}`` into ``p`` blocks of ``q^(|block of 1| - 1)``."""
    terms: dict[tuple[int, int], int] = {}
    for part in set_partitions(n):
        if len(part) == p:
            e = len(next(b for b in part if 1 in b)) - 1
            key = (e, 0) if var == 0 else (0, e)
            terms[key] = terms.get(key, 0) + 1
    return QPoly2(terms, names)


def q_stirling(n: int, p: int, var: int = 0, names=("alpha", "beta")) -> QPoly2:
    """q-Stirling number of the second kind via ``S(n,p) = S(n-1,p-1) + (p-1+q) S(n-1,p)``."""
    if n < 1 or p < 1:
        if n == 0 and p == 0:
            return QPoly2.constant(1, names)
        return QPoly2(names=names)
    q = QPoly2.monomial(1, 0, names=names) if var == 0 else QPoly2.monomial(0, 1, names=names)
    table = {(1, 1): QPoly2.constant(1, names)}
    for m in range(2, n + 1):
        for k in range(1, min(m, p) + 1):
            prev = table.get((m - 1, k - 1), QPoly2(names=names))
            same = table.get((m - 1, k), QPoly2(names=names))
            table[(m, k)] = prev + same * (q + (k - 1))
    return table.get((n, p), QPoly2(names=names))


def rising_factorial(base: QPoly2, m: int) -> QPoly2:
    """``base (base + 1) ... (base + m - 1)``; 1 when ``m = 0``."""
    out = QPoly2.constant(1, base.names)
    for i in range(m):
        out = out * (base + i)
    return out


@dataclass(frozen=True)
class StirlingSum:
    summands: dict[int, QPoly2]
    total: QPoly2


def stirling_count(w: int, h: int, alpha=None, beta=None) -> StirlingSum:
    """Positive sum over the hook number ``p`` for NATs with ``w`` left and ``h`` right vertices.

    The ``p``-th summand is ``(p-1)! (alpha+beta)^(rising p-1) S_alpha(w+1,p) S_beta(h+1,p)``.
    Numeric ``alpha``/``beta`` specialize the result (as constant polynomials).
    """
    if w < 0 or h < 0:
        raise ValueError("sizes must be non-negative")
    names = ("alpha", "beta")
    a_plus_b = QPoly2({(1, 0): 1, (0, 1): 1}, names)
    top = min(w, h) + 1
    summands = {}
    for p in range(1, top + 1):
        term = (
            rising_factorial(a_plus_b, p - 1)
            * q_stirling(w + 1, p, 0)
            * q_stirling(h + 1, p, 1)
            * math.factorial(p - 1)
        )
        summands[p] = term
    for p in (top + 1, top + 2):
        if not (q_stirling(w + 1, p, 0) * q_stirling(h + 1, p, 1)).is_zero():
            raise AssertionError("summands beyond min(w, h) + 1 must vanish")
    if alpha is not None or beta is not None:
        a = 1 if alpha is None else alpha
        b = 1 if beta is None else beta
        summands = {p: QPoly2.constant(t.evaluate(a, b), names) for p, t in summands.items()}
    total = QPoly2(names=names)
    for t in summands.values():
        total = total + t
    return StirlingSum(summands, total)


# ---------------------------------------------------------------------------
# JSON

def not_to_json(tree: OrderedTree) -> dict:
    label = list(tree.label) if tree.colour is None else tree.label
    return {"colour": tree.colour, "label": label, "children": [not_to_json(c) for c in tree.children]}


def not_from_json(data) -> OrderedTree:
    try:
        colour = data.get("colour")
        label = tuple(data["label"]) if colour is None else data["label"]
        return OrderedTree(tuple(not_from_json(c) for c in data.get("children", [])), colour, label)
    except (KeyError, TypeError, AttributeError) as exc:
        raise NotTreeError("format", f"malformed NOT tree JSON: {exc}") from None


def word_pair_to_json(wp: WordPair) -> dict:
    return {"w1": format_word(wp[0]), "w2": format_word(wp[1])}


def word_pair_from_json(data) -> WordPair:
    try:
        return parse_word(data["w1"]), parse_word(data["w2"])
    except (KeyError, TypeError, ValueError) as exc:
        raise WordPairError("format", f"malformed word pair JSON: {exc}") from None


def four_tuple_to_json(ft: FourTuple) -> dict:
    def cycles(cs):
        return [[[list(r), list(b)] for r, b in cyc] for cyc in cs]

    return {
        "red_leaves": sorted(ft.red_set),
        "blue_leaves": sorted(ft.blue_set),
        "red_cycles": cycles(ft.red_cycles),
        "blue_cycles": cycles(ft.blue_cycles),
    }


def four_tuple_from_json(data) -> FourTuple:
    def cycles(cs):
        return tuple(tuple((tuple(r), tuple(b)) for r, b in cyc) for cyc in cs)

    try:
        return FourTuple(
            frozenset(data["red_leaves"]),
            frozenset(data["blue_leaves"]),
            cycles(data["red_cycles"]),
            cycles(data["blue_cycles"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise WordPairError("format", f"malformed 4-tuple JSON: {exc}") from None
