"""Non-ambiguous trees of dimension (d, k) and their geometric form.

Directions are sorted tuples of distinct axes in ``1..d``. A vertex label is
a ``d``-tuple with ``None`` in place of the placeholder; children are stored
as ``(direction, subtree)`` pairs in lexicographic direction order, so absent
directions (half edges in drawings) simply do not appear. Vertices are
numbered in pre-order, root 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

from natrees import kernels
from natrees.nat import BruteForceBudgetError, Nat, ValidityReport, brute_force_budget
from natrees.trees import BinaryTree, shape_info

__all__ = [
    "Direction",
    "DkTree",
    "DkNat",
    "GeoNat",
    "DkFormatError",
    "directions",
    "validate_dk",
    "root_label_sizes",
    "count_dk_hook",
    "enumerate_dk",
    "enumerate_dk_shapes",
    "enumerate_dk_by_size",
    "shape_of",
    "to_geometric",
    "from_geometric",
    "validate_geometric",
    "nat_to_dk",
    "dk_to_nat",
    "binary_to_dk_shape",
    "dk_to_json",
    "dk_from_json",
    "geo_to_json",
    "geo_from_json",
]

Direction = tuple[int, ...]


class DkFormatError(ValueError):
    pass


@lru_cache(maxsize=None)
def directions(d: int, k: int) -> tuple[Direction, ...]:
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= d, got d={d}, k={k}")
    return tuple(tuple(i + 1 for i in c) for c in combinations(range(d), k))


@dataclass(frozen=True)
class DkTree:
    """A vertex with an optional label tuple (``None`` for bare shapes)."""

    label: Optional[tuple[Optional[int], ...]] = None
    children: tuple[tuple[Direction, "DkTree"], ...] = ()

    def size(self) -> int:
        return 1 + sum(c.size() for _, c in self.children)

    def preorder(self, direction: Optional[Direction] = None):
        """Yield ``(direction, vertex)`` pairs; the root's direction is ``None``."""
        stack = [(direction, self)]
        while stack:
            dirn, v = stack.pop()
            yield dirn, v
            for pi, c in reversed(v.children):
                stack.append((pi, c))

    def shape(self) -> "DkTree":
        return DkTree(None, tuple((pi, c.shape()) for pi, c in self.children))


@dataclass(frozen=True)
class DkNat:
    d: int
    k: int
    root: DkTree

    @property
    def root_label(self):
        return self.root.label

    def size(self) -> int:
        return self.root.size()


def shape_of(nat: DkNat) -> DkTree:
    return nat.root.shape()


# ---------------------------------------------------------------------------
# validation

def _structure(d: int, k: int, root: DkTree, labelled: bool) -> Optional[ValidityReport]:
    dirs = set(directions(d, k))
    for idx, (pi, v) in enumerate(root.preorder()):
        seen = []
        for cpi, _ in v.children:
            if cpi not in dirs:
                return ValidityReport(False, "structure", idx, f"{cpi} is not a ({d},{k})-direction")
            seen.append(cpi)
        if seen != sorted(set(seen)):
            return ValidityReport(False, "structure", idx, "children must use distinct directions in lexicographic order")
        if not labelled:
            continue
        lab = v.label
        if not isinstance(lab, tuple) or len(lab) != d:
            return ValidityReport(False, "structure", idx, f"label must be a {d}-tuple")
        support = tuple(i + 1 for i, e in enumerate(lab) if e is not None)
        want = tuple(range(1, d + 1)) if pi is None else pi
        if support != want:
            what = "root" if pi is None else f"child of direction {pi}"
            return ValidityReport(False, "structure", idx, f"{what} must carry a tuple of direction {want}")
        for e in lab:
            if e is not None and (not isinstance(e, int) or isinstance(e, bool) or e < 1):
                return ValidityReport(False, "structure", idx, f"component {e!r} is not a positive integer")
    return None


def validate_dk(nat: DkNat) -> ValidityReport:
    """Check the three defining conditions; the first failure is reported.

    Structural failures come first, then ancestor monotonicity, then
    per-axis distinctness and the interval clause.
    """
    bad = _structure(nat.d, nat.k, nat.root, True)
    if bad is not None:
        return bad
    d = nat.d
    # ancestor monotonicity: compare each vertex to the nearest ancestor carrying each axis
    stack = [(nat.root, 0, (None,) * d)]
    counter = 0
    while stack:
        v, idx, above = stack.pop()
        for i, e in enumerate(v.label):
            if e is not None and above[i] is not None and above[i] <= e:
                return ValidityReport(False, "order", idx, f"axis {i + 1} component {e} is not below its ancestor's {above[i]}")
        nearest = tuple(e if e is not None else a for e, a in zip(v.label, above))
        kids = []
        for _, c in v.children:
            counter += 1
            kids.append((c, counter, nearest))
            counter += c.size() - 1
        stack.extend(reversed(kids))
    for i in range(d):
        values: dict[int, int] = {}
        for idx, (_, v) in enumerate(nat.root.preorder()):
            e = v.label[i]
            if e is None:
                continue
            if e in values:
                return ValidityReport(False, "interval", idx, f"axis {i + 1} component {e} repeated")
            values[e] = idx
        if sorted(values) != list(range(1, len(values) + 1)):
            return ValidityReport(False, "interval", None, f"axis {i + 1} components do not form 1..{len(values)}")
    return ValidityReport(True)


def root_label_sizes(shape: DkTree, d: int) -> tuple[int, ...]:
    """The forced root label ``w_i = 1 + #{non-root vertices whose direction contains i}``."""
    w = [1] * d
    for pi, _ in shape.preorder():
        if pi is not None:
            for i in pi:
                w[i - 1] += 1
    return tuple(w)


def _e_counts(shape: DkTree, d: int, acc: list) -> list[int]:
    """Per-axis counts in the subtree; appends ``(direction, counts)`` for children."""
    tot = [0] * d
    for pi, c in shape.children:
        sub = _e_counts(c, d, acc)
        for i in pi:
            sub[i - 1] += 1
        acc.append((pi, sub))
        tot = [a + b for a, b in zip(tot, sub)]
    return tot


def count_dk_hook(shape: DkTree, d: int) -> int:
    """``prod (w_i - 1)!`` over the product of ``E_i(U)`` for children ``U`` with ``i`` in their direction."""
    w = root_label_sizes(shape, d)
    acc: list = []
    _e_counts(shape, d, acc)
    num = math.prod(math.factorial(x - 1) for x in w)
    den = 1
    for pi, counts in acc:
        for i in pi:
            den *= counts[i - 1]
    q, r = divmod(num, den)
    assert r == 0, "hook quotient must be an integer"
    return q


# ---------------------------------------------------------------------------
# enumeration

def _axis_counts(shape: DkTree, d: int) -> list[int]:
    """Per-axis number of vertices of the subtree whose direction contains the axis (root excluded)."""
    acc: list = []
    return _e_counts(shape, d, acc)


def _splits(values: tuple[int, ...], sizes: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered splits of a sorted tuple into blocks of the given sizes."""
    if not sizes:
        yield ()
        return
    for chosen in combinations(values, sizes[0]):
        cs = set(chosen)
        rest = tuple(v for v in values if v not in cs)
        for tail in _splits(rest, sizes[1:]):
            yield (chosen,) + tail


def _label_subtree(shape: DkTree, pi: Optional[Direction], pools: tuple[tuple[int, ...], ...], d: int) -> Iterator[DkTree]:
    """All labellings of ``shape`` using exactly the per-axis value pools.

    For axes in the vertex's own direction the vertex takes the pool's
    maximum; the remaining values are split among the children.
    """
    own = [None] * d
    rest = list(pools)
    if pi is not None:
        for i in pi:
            pool = pools[i - 1]
            own[i - 1] = pool[-1]
            rest[i - 1] = pool[:-1]
    label = tuple(own) if pi is not None else None
    if not shape.children:
        yield DkTree(label, ())
        return
    need = []
    for cpi, c in shape.children:
        counts = _axis_counts(c, d)
        for i in cpi:
            counts[i - 1] += 1
        need.append(counts)
    per_axis = [list(_splits(tuple(rest[i]), [n[i] for n in need])) for i in range(d)]
    for choice in product(*per_axis):
        child_iters = []
        for j, (cpi, c) in enumerate(shape.children):
            child_pools = tuple(choice[i][j] for i in range(d))
            child_iters.append(list(_label_subtree(c, cpi, child_pools, d)))
        for kids in product(*child_iters):
            yield DkTree(label, tuple((cpi, kid) for (cpi, _), kid in zip(shape.children, kids)))


def _recursive(shape: DkTree, d: int, k: int) -> list[DkNat]:
    w = root_label_sizes(shape, d)
    pools = tuple(tuple(range(1, x)) for x in w)
    out = []
    for t in _label_subtree(shape, None, pools, d):
        out.append(DkNat(d, k, DkTree(w, t.children)))
    return out


def _brute_force(shape: DkTree, d: int, k: int) -> list[DkNat]:
    w = root_label_sizes(shape, d)
    candidates = math.prod(math.factorial(x) for x in w)
    budget = brute_force_budget()
    if candidates > budget:
        raise BruteForceBudgetError(f"{candidates} label candidates exceed the brute-force budget {budget}")
    verts = list(shape.preorder())
    parents: list[Optional[int]] = []
    stack = [(shape, None)]
    while stack:
        v, par = stack.pop()
        me = len(parents)
        parents.append(par)
        for _, c in reversed(v.children):
            stack.append((c, me))
    # per axis: the vertices carrying it, and each one's nearest carrying ancestor
    axis_lists: list[list[int]] = [[] for _ in range(d)]
    anc: list[list[int]] = [[] for _ in range(d)]
    for idx, (pi, _) in enumerate(verts):
        if pi is None:
            continue
        for i in pi:
            a = parents[idx]
            while a is not None and (verts[a][0] is None or i not in verts[a][0]):
                a = parents[a]
            anc[i - 1].append(-1 if a is None else axis_lists[i - 1].index(a))
            axis_lists[i - 1].append(idx)
    per_axis = [kernels.valid_labellings(tuple(a)) if a else [()] for a in anc]
    out = []
    for combo in product(*per_axis):
        labels = [[None] * d for _ in verts]
        for i in range(d):
            for pos_i, vidx in enumerate(axis_lists[i]):
                labels[vidx][i] = combo[i][pos_i]
        labels[0] = list(w)
        it = iter(labels)

        def build(v: DkTree) -> DkTree:
            lab = tuple(next(it))
            return DkTree(lab, tuple((pi, build(c)) for pi, c in v.children))

        nat = DkNat(d, k, build(shape))
        if validate_dk(nat):
            out.append(nat)
    return out


def enumerate_dk(shape: DkTree, d: int, k: int, mode: str = "recursive") -> list[DkNat]:
    """All (d, k)-NATs on ``shape``; ``mode`` is ``recursive`` or ``brute_force``."""
    bad = _structure(d, k, shape, False)
    if bad is not None:
        raise DkFormatError(bad.message)
    if mode == "recursive":
        return _recursive(shape, d, k)
    if mode in ("brute_force", "brute"):
        return _brute_force(shape, d, k)
    raise ValueError(f"unknown mode {mode!r}")


@lru_cache(maxsize=None)
def enumerate_dk_shapes(d: int, k: int, n: int) -> tuple[DkTree, ...]:
    """All ``C(d,k)``-ary trees with ``n`` vertices."""
    if n < 1:
        return ()
    dirs = directions(d, k)
    return tuple(_forests(dirs, n - 1))


def _forests(dirs: tuple[Direction, ...], m: int) -> Iterator[DkTree]:
    """Trees whose root has ``m`` descendants, children drawn from ``dirs``."""
    def fill(j: int, left: int):
        if j == len(dirs):
            if left == 0:
                yield ()
            return
        yield from fill(j + 1, left)
        for s in range(1, left + 1):
            for sub in enumerate_dk_shapes_from(dirs, s):
                for tail in fill(j + 1, left - s):
                    yield ((dirs[j], sub),) + tail

    for kids in fill(0, m):
        yield DkTree(None, kids)


@lru_cache(maxsize=None)
def enumerate_dk_shapes_from(dirs: tuple[Direction, ...], n: int) -> tuple[DkTree, ...]:
    return tuple(_forests(dirs, n - 1))


def enumerate_dk_by_size(d: int, k: int, widths: Sequence[int], mode: str = "recursive") -> list[DkNat]:
    """All (d, k)-NATs with root label ``widths`` (their geometric size)."""
    widths = tuple(widths)
    extra = sum(w - 1 for w in widths)
    if len(widths) != d or any(w < 1 for w in widths):
        raise ValueError("widths must be d positive integers")
    if extra % k:
        return []
    out = []
    for shape in enumerate_dk_shapes(d, k, extra // k + 1):
        if root_label_sizes(shape, d) == widths:
            out.extend(enumerate_dk(shape, d, k, mode))
    return out


# ---------------------------------------------------------------------------
# (2,1) dictionary: left child <-> direction (1,), right child <-> (2,)

def binary_to_dk_shape(tree: BinaryTree) -> DkTree:
    kids = []
    if tree.left is not None:
        kids.append(((1,), binary_to_dk_shape(tree.left)))
    if tree.right is not None:
        kids.append(((2,), binary_to_dk_shape(tree.right)))
    return DkTree(None, tuple(kids))


def nat_to_dk(nat: Nat) -> DkNat:
    labels = nat.labels_by_vertex()
    it = iter(range(len(labels)))

    def build(t: BinaryTree, side: Optional[str]) -> DkTree:
        lab = labels[next(it)]
        tup = nat.widths if side is None else ((lab, None) if side == "L" else (None, lab))
        kids = []
        if t.left is not None:
            kids.append(((1,), build(t.left, "L")))
        if t.right is not None:
            kids.append(((2,), build(t.right, "R")))
        return DkTree(tuple(tup), tuple(kids))

    return DkNat(2, 1, build(nat.shape, None))


def dk_to_nat(nat: DkNat) -> Nat:
    if (nat.d, nat.k) != (2, 1):
        raise ValueError("only (2,1)-NATs correspond to binary NATs")
    left: list[int] = []
    right: list[int] = []

    # pre-order: a vertex's label is recorded before its subtrees
    def walk(v: DkTree) -> BinaryTree:
        kids = dict(v.children)
        l = r = None
        if (1,) in kids:
            left.append(kids[(1,)].label[0])
            l = walk(kids[(1,)])
        if (2,) in kids:
            right.append(kids[(2,)].label[1])
            r = walk(kids[(2,)])
        return BinaryTree(l, r)

    shape = walk(nat.root)
    return Nat(shape, tuple(left), tuple(right))


# ---------------------------------------------------------------------------
# geometric form

@dataclass(frozen=True)
class GeoNat:
    """Point set in a box; ``points`` maps coordinates to a type (``None`` for the root)."""

    d: int
    k: int
    box: tuple[int, ...]
    points: tuple[tuple[tuple[int, ...], Optional[Direction]], ...]

    def point_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p for p, _ in self.points)


def to_geometric(nat: DkNat) -> GeoNat:
    """Root at ``w``; a child of direction ``pi`` takes its labels on ``pi`` and its parent's other coordinates."""
    pts = []

    def walk(v: DkTree, pi: Optional[Direction], parent_pt: tuple[int, ...]):
        if pi is None:
            pt = tuple(v.label)
        else:
            pt = tuple(v.label[i] if (i + 1) in pi else parent_pt[i] for i in range(nat.d))
        pts.append((pt, pi))
        for cpi, c in v.children:
            walk(c, cpi, pt)

    walk(nat.root, None, ())
    return GeoNat(nat.d, nat.k, tuple(nat.root.label), tuple(sorted(pts)))


def _in_cone(p, q, pi) -> bool:
    """``q`` in ``C(p, pi)`` and ``q != p``."""
    if q == p:
        return False
    for i in range(len(p)):
        if (i + 1) in pi:
            if q[i] < p[i]:
                return False
        elif q[i] != p[i]:
            return False
    return True


def _derived_types(d: int, k: int, pts: Sequence[tuple[int, ...]], root) -> tuple[dict, Optional[ValidityReport]]:
    types = {}
    dirs = directions(d, k)
    for p in pts:
        if p == root:
            continue
        hits = [pi for pi in dirs if any(_in_cone(p, q, pi) for q in pts)]
        if len(hits) != 1:
            return types, ValidityReport(False, "cone", None, f"point {p} has {len(hits)} directions with a non-trivial cone")
        types[p] = hits[0]
    return types, None


def validate_geometric(geo: GeoNat) -> ValidityReport:
    """Check the five clauses of the geometric definition, reporting the first failure by name."""
    d, k = geo.d, geo.k
    pts = [p for p, _ in geo.points]
    if not pts:
        return ValidityReport(False, "box", None, "empty point set")
    if len(set(pts)) != len(pts):
        return ValidityReport(False, "box", None, "repeated point")
    if any(len(p) != d for p in pts) or len(geo.box) != d:
        return ValidityReport(False, "box", None, f"points and box need {d} coordinates")
    for i in range(d):
        coords = [p[i] for p in pts]
        if min(coords) != 1 or max(coords) != geo.box[i]:
            return ValidityReport(False, "box", None, f"axis {i + 1} is not spanned exactly by 1..{geo.box[i]}")
    root = tuple(geo.box)
    if root not in pts:
        return ValidityReport(False, "root", None, f"root {root} missing")
    types, bad = _derived_types(d, k, pts, root)
    if bad is not None:
        return bad
    for p, declared in geo.points:
        if p == root:
            if declared is not None:
                return ValidityReport(False, "root", None, "the root has no type")
        elif declared is not None and tuple(declared) != types[p]:
            return ValidityReport(False, "cone", None, f"point {p} declared {tuple(declared)} but is of type {types[p]}")
    for pi in directions(d, k):
        off = [i for i in range(d) if (i + 1) not in pi]
        on = [i for i in range(d) if (i + 1) in pi]
        groups: dict = {}
        for p in pts:
            groups.setdefault(tuple(p[i] for i in off), []).append(p)
        for grp in groups.values():
            for a, b in combinations(grp, 2):
                if not (all(a[i] > b[i] for i in on) or all(b[i] > a[i] for i in on)):
                    return ValidityReport(False, "affine", None, f"points {a} and {b} are not comparable along {pi}")
    for i in range(d):
        for level in range(1, geo.box[i]):
            hits = [p for p in pts if p != root and p[i] == level and (i + 1) in types[p]]
            if len(hits) != 1:
                return ValidityReport(False, "hyperplane", None, f"hyperplane x{i + 1}={level} holds {len(hits)} points of a type containing {i + 1}")
    return ValidityReport(True)


def from_geometric(geo: GeoNat) -> DkNat:
    """Inverse of :func:`to_geometric`; each point hangs below the least point of its cone."""
    report = validate_geometric(geo)
    if not report:
        raise DkFormatError(f"{report.kind}: {report.message}")
    d, k = geo.d, geo.k
    pts = [p for p, _ in geo.points]
    root = tuple(geo.box)
    types, _ = _derived_types(d, k, pts, root)
    children: dict = {p: [] for p in pts}
    for p, pi in types.items():
        cone = [q for q in pts if _in_cone(p, q, pi)]
        parent = min(cone, key=lambda q: tuple(q[i - 1] for i in pi))
        children[parent].append((pi, p))
    seen = set()

    def build(p, pi) -> DkTree:
        if p in seen:
            raise DkFormatError("point set does not describe a tree")
        seen.add(p)
        lab = tuple(p) if pi is None else tuple(p[i] if (i + 1) in pi else None for i in range(d))
        kids = sorted(children[p])
        dirs = [c[0] for c in kids]
        if len(set(dirs)) != len(dirs):
            raise DkFormatError(f"point {p} has two children of the same direction")
        return DkTree(lab, tuple((cpi, build(q, cpi)) for cpi, q in kids))

    nat = DkNat(d, k, build(root, None))
    if len(seen) != len(pts):
        raise DkFormatError("point set is not connected to the root")
    check = validate_dk(nat)
    if not check:
        raise DkFormatError(f"{check.kind}: {check.message}")
    if to_geometric(nat).point_set() != frozenset(pts):
        raise DkFormatError("point set is not the image of a tree")
    return nat


# ---------------------------------------------------------------------------
# JSON

def _dir_key(pi: Direction) -> str:
    return ",".join(map(str, pi))


def _parse_dir(key: str) -> Direction:
    try:
        return tuple(int(x) for x in key.split(","))
    except ValueError:
        raise DkFormatError(f"bad direction key {key!r}") from None


def dk_to_json(nat: DkNat) -> dict:
    def node(v: DkTree) -> dict:
        return {"tuple": list(v.label), "children": {_dir_key(pi): node(c) for pi, c in v.children}}

    return {
        "d": nat.d,
        "k": nat.k,
        "root": list(nat.root.label),
        "children": {_dir_key(pi): node(c) for pi, c in nat.root.children},
    }


def dk_from_json(data) -> DkNat:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        d, k = int(data["d"]), int(data["k"])

        def node(obj, label) -> DkTree:
            kids = sorted((_parse_dir(key), val) for key, val in obj.get("children", {}).items())
            return DkTree(label, tuple((pi, node(val, tuple(val["tuple"]))) for pi, val in kids))

        return DkNat(d, k, node(data, tuple(data["root"])))
    except (KeyError, TypeError) as exc:
        raise DkFormatError(f"malformed (d,k) NAT JSON: {exc}") from None


def geo_to_json(geo: GeoNat) -> dict:
    return {
        "d": geo.d,
        "k": geo.k,
        "box": list(geo.box),
        "points": [{"coords": list(p), "type": "root" if t is None else list(t)} for p, t in geo.points],
    }


def geo_from_json(data) -> GeoNat:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        box = tuple(int(x) for x in data["box"])
        d = int(data.get("d", len(box)))
        k = int(data["k"])
        pts = []
        for item in data["points"]:
            t = item.get("type")
            t = None if t in (None, "root") else tuple(int(x) for x in t)
            pts.append((tuple(int(x) for x in item["coords"]), t))
        # a point listed without a type is typed by the cone clause
        return GeoNat(d, k, box, tuple(sorted(pts, key=lambda pt: pt[0])))
    except (KeyError, TypeError, ValueError) as exc:
        raise DkFormatError(f"malformed geometric NAT JSON: {exc}") from None
