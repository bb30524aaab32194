"""DOT and plain-text renderings of NATs, NOT trees and (d, k)-NATs."""

from __future__ import annotations

from typing import Optional

from natrees.nat import Nat
from natrees.natdk import DkNat, DkTree
from natrees.trees import OrderedTree, shape_info

__all__ = ["nat_to_dot", "nat_to_text", "not_to_dot", "not_to_text", "dk_to_dot", "dk_to_text"]

_COLOURS = {"L": "red", "R": "blue", "red": "red", "blue": "blue"}


def _root_html(pair) -> str:
    a, b = pair
    return f'<(<font color="red">{a}</font>,<font color="blue">{b}</font>)>'


def nat_to_dot(nat: Nat, name: str = "nat") -> str:
    """Left edges leave south-west, right edges south-east."""
    info = shape_info(nat.shape)
    labels = nat.labels_by_vertex()
    lines = [f"digraph {name} {{", "  node [shape=plaintext];", "  edge [arrowhead=none];"]
    lines.append(f"  v0 [label={_root_html(nat.widths)}];")
    for v in range(1, info.n):
        colour = _COLOURS[info.side[v]]
        lines.append(f'  v{v} [label="{labels[v]}", fontcolor={colour}];')
    for v in range(info.n):
        if info.left[v] >= 0:
            lines.append(f"  v{v}:sw -> v{info.left[v]};")
        if info.right[v] >= 0:
            lines.append(f"  v{v}:se -> v{info.right[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def nat_to_text(nat: Nat) -> str:
    """One line per vertex, indented by depth; ``L``/``R`` marks the side."""
    info = shape_info(nat.shape)
    labels = nat.labels_by_vertex()
    out = []

    def walk(v: int, depth: int):
        if v == 0:
            text = f"({nat.widths[0]},{nat.widths[1]})"
        else:
            text = f"{info.side[v]} {labels[v]}"
        out.append("  " * depth + text)
        for c in (info.left[v], info.right[v]):
            if c >= 0:
                walk(c, depth + 1)

    walk(0, 0)
    return "\n".join(out) + "\n"


def not_to_dot(tree: OrderedTree, name: str = "not") -> str:
    lines = [f"digraph {name} {{", "  node [shape=plaintext];", "  edge [arrowhead=none];", "  ordering=out;"]
    counter = [0]

    def walk(node: OrderedTree) -> str:
        me = f"v{counter[0]}"
        counter[0] += 1
        if node.colour is None:
            lines.append(f"  {me} [label={_root_html(node.label)}];")
        else:
            lines.append(f'  {me} [label="{node.label}", fontcolor={node.colour}];')
        for c in node.children:
            lines.append(f"  {me} -> {walk(c)};")
        return me

    walk(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def not_to_text(tree: OrderedTree) -> str:
    out = []

    def walk(node: OrderedTree, depth: int):
        if node.colour is None:
            text = f"({node.label[0]},{node.label[1]})"
        else:
            text = f"{node.colour[0]}{node.label}"
        out.append("  " * depth + text)
        for c in node.children:
            walk(c, depth + 1)

    walk(tree, 0)
    return "\n".join(out) + "\n"


def _tuple_text(label) -> str:
    return "(" + ",".join("." if e is None else str(e) for e in label) + ")"


def dk_to_dot(nat: DkNat, name: str = "dknat") -> str:
    """Children are drawn left to right in lexicographic direction order."""
    lines = [f"digraph {name} {{", "  node [shape=plaintext];", "  edge [arrowhead=none];", "  ordering=out;"]
    counter = [0]

    def walk(v: DkTree, pi: Optional[tuple]) -> str:
        me = f"v{counter[0]}"
        counter[0] += 1
        lines.append(f'  {me} [label="{_tuple_text(v.label)}"];')
        for cpi, c in v.children:
            lines.append(f'  {me} -> {walk(c, cpi)} [label="{",".join(map(str, cpi))}"];')
        return me

    walk(nat.root, None)
    lines.append("}")
    return "\n".join(lines) + "\n"


def dk_to_text(nat: DkNat) -> str:
    out = []

    def walk(v: DkTree, pi, depth: int):
        prefix = "" if pi is None else "{" + ",".join(map(str, pi)) + "} "
        out.append("  " * depth + prefix + _tuple_text(v.label))
        for cpi, c in v.children:
            walk(c, cpi, depth + 1)

    walk(nat.root, None, 0)
    return "\n".join(out) + "\n"
