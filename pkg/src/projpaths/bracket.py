"""Bracket notation for projection trees: ``4(1(2),3(2))``.

Grammar::

    tree   := vertex [ "(" tree { "," tree } ")" ]
    vertex := positive decimal integer

Whitespace between tokens is ignored.
"""

from __future__ import annotations

from .projection import DEFAULT_NODE_CAP, ProjectionSizeError, ProjectionTree, RefinedProjection

__all__ = [
    "BracketSyntaxError",
    "parse_bracket",
    "projection_to_tree",
    "to_bracket",
    "to_bracket_pretty",
]


class BracketSyntaxError(ValueError):
    """Malformed bracket text; ``offset`` is the 0-based character index."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


def _sorted_children(t: ProjectionTree):
    return sorted(t.children, key=lambda c: c.vertex)


def to_bracket(t: ProjectionTree) -> str:
    out = []
    # items are either nodes to emit or literal strings
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(str(item.vertex))
        kids = _sorted_children(item)
        if kids:
            seq: list = ["("]
            for i, c in enumerate(kids):
                if i:
                    seq.append(",")
                seq.append(c)
            seq.append(")")
            stack.extend(reversed(seq))
    return "".join(out)


def to_bracket_pretty(t: ProjectionTree, indent: str = "  ") -> str:
    """One node per line, indented by depth; parses back with :func:`parse_bracket`."""
    lines: list[str] = []
    stack = [(t, 0, "")]
    while stack:
        node, depth, tail = stack.pop()
        kids = _sorted_children(node)
        if not kids:
            lines.append(f"{indent * depth}{node.vertex}{tail}")
            continue
        lines.append(f"{indent * depth}{node.vertex}(")
        last = len(kids) - 1
        for i in range(last, -1, -1):
            stack.append((kids[i], depth + 1, ")" + tail if i == last else ","))
    return "\n".join(lines) + "\n"


def parse_bracket(s: str) -> ProjectionTree:
    """Parse bracket text into a tree.

    >>> to_bracket(parse_bracket("1( 2 , 4 )"))
    '1(2,4)'
    >>> parse_bracket("1(2,)")
    Traceback (most recent call last):
    ...
    projpaths.bracket.BracketSyntaxError: expected vertex at offset 4
    """
    pos = 0
    end = len(s)

    def peek() -> str:
        nonlocal pos
        while pos < end and s[pos].isspace():
            pos += 1
        return s[pos] if pos < end else ""

    def vertex() -> list:
        nonlocal pos
        peek()
        start = pos
        while pos < end and s[pos] in "0123456789":
            pos += 1
        if start == pos:
            raise BracketSyntaxError("expected vertex", start)
        value = int(s[start:pos])
        if value < 1:
            raise BracketSyntaxError(f"vertex must be positive, got {value}", start)
        return [value, []]

    root = current = vertex()
    opened: list[list] = []  # nodes whose "(" is consumed but not yet ")"
    while True:
        if peek() == "(":
            pos += 1
            opened.append(current)
            current = vertex()
            opened[-1][1].append(current)
            continue
        while opened:
            c = peek()
            if c == ",":
                pos += 1
                current = vertex()
                opened[-1][1].append(current)
                break
            if c == ")":
                pos += 1
                opened.pop()
                continue
            if not c:
                raise BracketSyntaxError("unbalanced parentheses: expected ',' or ')'", pos)
            raise BracketSyntaxError(f"unexpected {c!r}", pos)
        else:
            break
    if peek():
        raise BracketSyntaxError(f"trailing input {s[pos]!r}", pos)
    return _build(root)


def _build(root) -> ProjectionTree:
    order = []
    stack = [root]
    while stack:
        frame = stack.pop()
        order.append(frame)
        stack.extend(frame[1])
    built = {}
    for v, kids in reversed(order):
        built[id(kids)] = ProjectionTree(v, tuple(built[id(k[1])] for k in kids))
    return built[id(root[1])]


def projection_to_tree(p: RefinedProjection, node_cap: int = DEFAULT_NODE_CAP
                       ) -> ProjectionTree:
    """Expand the predecessor DAG of ``p`` forwards into an explicit tree.

    Children of ``x`` are the vertices listing ``x`` as a predecessor.
    Shared sub-DAGs are copied, so the tree can be exponentially larger than
    the projection; :class:`ProjectionSizeError` is raised past ``node_cap``.
    """
    succ: dict[int, list[int]] = {v: [] for v in range(1, p.n + 1)}
    for v in range(1, p.n + 1):
        for q in p.pred[v]:
            succ[q].append(v)
    # children of a vertex are identical wherever it appears: memoize subtrees
    sizes: dict[int, int] = {}
    for frontier in reversed(p.frontier_history):
        for v in frontier:
            sizes[v] = 1 + sum(sizes[c] for c in succ[v])
            if sizes[v] > node_cap:
                raise ProjectionSizeError(
                    f"tree expansion of projection from {p.source} exceeds node cap {node_cap}")
    subtrees: dict[int, ProjectionTree] = {}
    for frontier in reversed(p.frontier_history):
        for v in frontier:
            subtrees[v] = ProjectionTree(v, tuple(subtrees[c] for c in succ[v]))
    return subtrees[p.source]
