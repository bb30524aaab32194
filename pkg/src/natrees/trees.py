"""Unlabelled tree shapes: binary trees, ordered trees and their statistics.

A binary tree is either ``None`` (the empty tree) or a :class:`BinaryTree`
node. Vertices are identified by their pre-order index, the root being 0.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

__all__ = [
    "BinaryTree",
    "EMPTY",
    "ShapeInfo",
    "VertexStats",
    "HookPartition",
    "OrderedTree",
    "TreeFormatError",
    "size",
    "parse_tree",
    "format_tree",
    "tree_to_json",
    "tree_from_json",
    "enumerate_binary_trees",
    "shape_info",
    "vertex_stats",
    "hook_partition",
    "hook_number",
    "enumerate_ordered_trees",
    "leaf_parent_count",
    "hook_number_distribution",
    "leaf_parent_distribution",
]


class TreeFormatError(ValueError):
    """Raised on a malformed tree string or JSON value."""


@dataclass(frozen=True)
class BinaryTree:
    """A non-empty binary tree node; ``None`` children are empty subtrees."""

    left: Optional["BinaryTree"] = None
    right: Optional["BinaryTree"] = None
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_tree(self)


EMPTY: Optional[BinaryTree] = None


def size(tree: Optional[BinaryTree]) -> int:
    return shape_info(tree).n if tree is not None else 0


# ---------------------------------------------------------------------------
# serialization

def format_tree(tree: Optional[BinaryTree]) -> str:
    """Render as ``.`` for the empty tree and ``(L R)`` for a node."""
    if tree is None:
        return "."
    return f"({format_tree(tree.left)} {format_tree(tree.right)})"


def parse_tree(text: str) -> Optional[BinaryTree]:
    """Parse the parenthesized format produced by :func:`format_tree`."""
    tokens = [c for c in text if not c.isspace()]
    for c in tokens:
        if c not in "().":
            raise TreeFormatError(f"unexpected character {c!r} in tree string")
    pos = 0

    def parse() -> Optional[BinaryTree]:
        nonlocal pos
        if pos >= len(tokens):
            raise TreeFormatError("unexpected end of tree string")
        tok = tokens[pos]
        pos += 1
        if tok == ".":
            return None
        if tok != "(":
            raise TreeFormatError(f"expected '(' or '.' at token {pos - 1}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise TreeFormatError(f"expected ')' at token {pos}")
        pos += 1
        return BinaryTree(left, right)

    tree = parse()
    if pos != len(tokens):
        raise TreeFormatError("trailing characters after tree")
    return tree


def tree_to_json(tree: Optional[BinaryTree]):
    if tree is None:
        return None
    return {"l": tree_to_json(tree.left), "r": tree_to_json(tree.right)}


def tree_from_json(obj) -> Optional[BinaryTree]:
    if obj is None:
        return None
    if isinstance(obj, str):
        obj = json.loads(obj)
        if obj is None:
            return None
    if not isinstance(obj, dict) or set(obj) - {"l", "r"}:
        raise TreeFormatError(f"not a tree JSON value: {obj!r}")
    return BinaryTree(tree_from_json(obj.get("l")), tree_from_json(obj.get("r")))


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def enumerate_binary_trees(n: int) -> tuple[Optional[BinaryTree], ...]:
    """All binary trees with ``n`` vertices, in canonical order.

    The order is by left-subtree size ascending, then lexicographic on the
    (left, right) pair using the same order recursively.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in enumerate_binary_trees(k):
            for right in enumerate_binary_trees(n - 1 - k):
                out.append(BinaryTree(left, right))
    return tuple(out)


# ---------------------------------------------------------------------------
# per-vertex structure

@dataclass(frozen=True)
class ShapeInfo:
    """Pre-order adjacency tables of a non-empty binary tree.

    ``left[v]``/``right[v]``/``parent[v]`` hold vertex indices or -1;
    ``side[v]`` is ``"L"``, ``"R"`` or ``None`` for the root.
    """

    n: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    parent: tuple[int, ...]
    side: tuple[Optional[str], ...]
    end: tuple[int, ...]  # subtree of v is the index range [v, end[v])
    left_vertices: tuple[int, ...]
    right_vertices: tuple[int, ...]

    def left_ancestor(self, v: int) -> int:
        """Nearest strict ancestor of ``v`` that is itself a left child, or -1."""
        u = self.parent[v]
        while u > 0 and self.side[u] != "L":
            u = self.parent[u]
        return u if u > 0 else -1

    def right_ancestor(self, v: int) -> int:
        u = self.parent[v]
        while u > 0 and self.side[u] != "R":
            u = self.parent[u]
        return u if u > 0 else -1


@lru_cache(maxsize=4096)
def shape_info(tree: BinaryTree) -> ShapeInfo:
    if tree is None:
        raise ValueError("the empty tree has no vertices")
    left: list[int] = []
    right: list[int] = []
    parent: list[int] = []
    side: list[Optional[str]] = []
    end: list[int] = []

    def visit(node: BinaryTree, par: int, s: Optional[str]) -> int:
        v = len(left)
        left.append(-1)
        right.append(-1)
        parent.append(par)
        side.append(s)
        end.append(-1)
        if node.left is not None:
            left[v] = visit(node.left, v, "L")
        if node.right is not None:
            right[v] = visit(node.right, v, "R")
        end[v] = len(left)
        return v

    visit(tree, -1, None)
    return ShapeInfo(
        n=len(left),
        left=tuple(left),
        right=tuple(right),
        parent=tuple(parent),
        side=tuple(side),
        end=tuple(end),
        left_vertices=tuple(v for v, s in enumerate(side) if s == "L"),
        right_vertices=tuple(v for v, s in enumerate(side) if s == "R"),
    )


@dataclass(frozen=True)
class VertexStats:
    """Subtree counts ``el``/``er`` keyed by vertex, and branch statistics."""

    el: dict[int, int]
    er: dict[int, int]
    lo: int
    ro: int
    n_left: int
    n_right: int


def vertex_stats(tree: Optional[BinaryTree]) -> VertexStats:
    """EL/ER for every left/right child plus LO, RO, |LV| and |RV|."""
    if tree is None:
        raise ValueError("vertex statistics are undefined on the empty tree")
    info = shape_info(tree)
    el: dict[int, int] = {}
    er: dict[int, int] = {}
    for v in range(info.n):
        if info.side[v] == "L":
            el[v] = sum(1 for u in range(v, info.end[v]) if info.side[u] == "L")
        elif info.side[v] == "R":
            er[v] = sum(1 for u in range(v, info.end[v]) if info.side[u] == "R")
    lo = 0
    v = info.left[0]
    while v >= 0:
        lo += 1
        v = info.left[v]
    ro = 0
    v = info.right[0]
    while v >= 0:
        ro += 1
        v = info.right[v]
    return VertexStats(el, er, lo, ro, len(info.left_vertices), len(info.right_vertices))


# ---------------------------------------------------------------------------
# hooks

@dataclass(frozen=True)
class HookPartition:
    hooks: tuple[frozenset[int], ...]

    @property
    def hook_number(self) -> int:
        return len(self.hooks)

    def hook_of(self, v: int) -> frozenset[int]:
        for h in self.hooks:
            if v in h:
                return h
        raise KeyError(v)


def hook_partition(tree: Optional[BinaryTree]) -> HookPartition:
    """Partition into hooks by repeatedly extracting the root's hook.

    Hooks are listed by their top vertex, in pre-order.
    """
    if tree is None:
        raise ValueError("hooks are undefined on the empty tree")
    info = shape_info(tree)
    hooks = []
    pending = [0]
    while pending:
        top = pending.pop()
        hook = [top]
        v = info.left[top]
        while v >= 0:
            hook.append(v)
            if info.right[v] >= 0:
                pending.append(info.right[v])
            v = info.left[v]
        v = info.right[top]
        while v >= 0:
            hook.append(v)
            if info.left[v] >= 0:
                pending.append(info.left[v])
            v = info.right[v]
        hooks.append(frozenset(hook))
    hooks.sort(key=min)
    return HookPartition(tuple(hooks))


def hook_number(tree: Optional[BinaryTree]) -> int:
    return hook_partition(tree).hook_number


# ---------------------------------------------------------------------------
# ordered trees

@dataclass(frozen=True)
class OrderedTree:
    """Rooted plane tree; ``colour`` and ``label`` are used by NOT trees."""

    children: tuple["OrderedTree", ...] = ()
    colour: Optional[str] = None
    label: object = None

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def iter_preorder(self) -> Iterator["OrderedTree"]:
        yield self
        for c in self.children:
            yield from c.iter_preorder()


@lru_cache(maxsize=None)
def _forests(m: int) -> tuple[tuple[OrderedTree, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    for s in range(1, m + 1):
        for first in enumerate_ordered_trees(s):
            for rest in _forests(m - s):
                out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_ordered_trees(n: int) -> tuple[OrderedTree, ...]:
    """All unlabelled ordered trees on ``n >= 1`` vertices."""
    if n < 1:
        raise ValueError("ordered trees have at least one vertex")
    return tuple(OrderedTree(children) for children in _forests(n - 1))


def leaf_parent_count(tree: OrderedTree) -> int:
    """Number of vertices having at least one leaf among their children."""
    return sum(
        1 for v in tree.iter_preorder() if any(not c.children for c in v.children)
    )


def hook_number_distribution(n: int) -> dict[int, int]:
    return dict(sorted(Counter(hook_number(t) for t in enumerate_binary_trees(n)).items()))


def leaf_parent_distribution(n: int) -> dict[int, int]:
    return dict(sorted(Counter(leaf_parent_count(t) for t in enumerate_ordered_trees(n)).items()))
