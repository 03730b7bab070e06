"""Increasing 1-2 trees, ordered 1-2 trees, traversals and exhaustive generation.

Both tree kinds are built from ``Node`` objects with a left and a right slot.
Labeled trees are always kept in canonical form: a vertex with two children has
the larger child on the left, a lone child sits on the right. Ordered (unlabeled)
trees follow the same lone-child convention, so the vertices of an ordered tree
can be named by their rank in right-to-left preorder.

Tree text format: ``label`` followed, when the vertex has children, by
``(left,right)`` with an absent child written as the empty string. Ordered trees
write ``*`` for every label, e.g. ``*(,*(*,*))``.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Union

from core.errors import DomainError, ParseError


@dataclass
class Node:
    label: Optional[int] = None
    left: Optional["Node"] = None
    right: Optional["Node"] = None

    def children(self) -> List["Node"]:
        return [child for child in (self.left, self.right) if child is not None]

    def is_leaf(self) -> bool:
        return self.left is None and self.right is None

    def copy(self) -> "Node":
        return Node(
            self.label,
            self.left.copy() if self.left is not None else None,
            self.right.copy() if self.right is not None else None,
        )


def preorder_nodes(node: Node) -> Iterator[Node]:
    # left-to-right depth-first order
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        if current.right is not None:
            stack.append(current.right)
        if current.left is not None:
            stack.append(current.left)


def rtl_preorder_nodes(node: Node) -> Iterator[Node]:
    # root, right subtree, left subtree
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        if current.left is not None:
            stack.append(current.left)
        if current.right is not None:
            stack.append(current.right)


def _serialize(node: Optional[Node]) -> str:
    if node is None:
        return ""
    head = "*" if node.label is None else str(node.label)
    if node.is_leaf():
        return head
    return f"{head}({_serialize(node.left)},{_serialize(node.right)})"


class IncreasingTree:
    """Increasing 1-2 tree on {0..n} in canonical form."""

    def __init__(self, root: Node):
        self.root = root

    @property
    def n(self) -> int:
        return sum(1 for _ in preorder_nodes(self.root)) - 1

    def nodes(self) -> Dict[int, Node]:
        return {node.label: node for node in preorder_nodes(self.root)}

    def copy(self) -> "IncreasingTree":
        return IncreasingTree(self.root.copy())

    def serialize(self) -> str:
        return _serialize(self.root)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IncreasingTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.serialize())

    def __repr__(self) -> str:
        return f"IncreasingTree({self.serialize()!r})"


class OrderedTree:
    """Unlabeled ordered 1-2 tree (plane tree shape)."""

    def __init__(self, root: Node):
        self.root = _normalize_shape(root)

    @property
    def n(self) -> int:
        return sum(1 for _ in preorder_nodes(self.root)) - 1

    def serialize(self) -> str:
        return _serialize(self.root)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderedTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.serialize())

    def __repr__(self) -> str:
        return f"OrderedTree({self.serialize()!r})"


AnyTree = Union[IncreasingTree, OrderedTree, Node]


def _normalize_shape(node: Node) -> Node:
    out = Node(None)
    left = _normalize_shape(node.left) if node.left is not None else None
    right = _normalize_shape(node.right) if node.right is not None else None
    if right is None:
        left, right = None, left
    out.left, out.right = left, right
    return out


def _labeled_root(tree: AnyTree) -> Node:
    if isinstance(tree, OrderedTree):
        return rtl_preorder_label(tree).root
    if isinstance(tree, IncreasingTree):
        return tree.root
    return tree


# ---------- construction ----------

def canonicalize(root: Node) -> IncreasingTree:
    """Validate an increasing 1-2 tree with arbitrary slots and put it in canonical form."""
    if root.label != 0:
        raise DomainError("root of an increasing tree must be labeled 0", {"root": root.label})
    seen: List[int] = []

    def build(node: Node) -> Node:
        seen.append(node.label)
        kids = [build(child) for child in node.children()]
        for child in kids:
            if child.label is None or child.label <= node.label:
                raise DomainError(
                    "labels must increase away from the root",
                    {"parent": node.label, "child": child.label},
                )
        out = Node(node.label)
        if len(kids) == 1:
            out.right = kids[0]
        elif len(kids) == 2:
            out.left, out.right = sorted(kids, key=lambda child: child.label, reverse=True)
        return out

    canonical = build(root)
    if sorted(seen) != list(range(len(seen))):
        raise DomainError("vertex labels must be exactly 0..n", {"labels": sorted(seen)})
    return IncreasingTree(canonical)


def is_canonical(tree: IncreasingTree) -> bool:
    for node in preorder_nodes(tree.root):
        if node.left is not None and node.right is None:
            return False
        for child in node.children():
            if child.label <= node.label:
                return False
        if node.left is not None and node.right is not None and node.left.label < node.right.label:
            return False
    return sorted(node.label for node in preorder_nodes(tree.root)) == list(range(tree.n + 1))


def shape(tree: IncreasingTree) -> OrderedTree:
    """Erase the labels."""
    return OrderedTree(tree.root)


def from_parents(parents: List[int]) -> IncreasingTree:
    """Tree whose vertex j (1-based) hangs below ``parents[j - 1]``."""
    nodes = [Node(label) for label in range(len(parents) + 1)]
    kids: Dict[int, List[int]] = {}
    for child, parent in enumerate(parents, start=1):
        kids.setdefault(parent, []).append(child)
    for parent, children in kids.items():
        if len(children) == 1:
            nodes[parent].right = nodes[children[0]]
        else:
            nodes[parent].left, nodes[parent].right = nodes[children[1]], nodes[children[0]]
    return IncreasingTree(nodes[0])


# ---------- traversals ----------

def inorder(tree: AnyTree) -> List[int]:
    """Left subtree, root, right subtree; ordered trees report right-to-left preorder ranks."""
    out: List[int] = []

    def walk(node: Optional[Node]) -> None:
        if node is None:
            return
        walk(node.left)
        out.append(node.label)
        walk(node.right)

    walk(_labeled_root(tree))
    return out


def rtl_preorder(tree: AnyTree) -> List[int]:
    return [node.label for node in rtl_preorder_nodes(_labeled_root(tree))]


def leaves(tree: AnyTree) -> List[int]:
    return sorted(node.label for node in preorder_nodes(_labeled_root(tree)) if node.is_leaf())


def rightmost_path(tree: AnyTree) -> List[int]:
    """Root to the last vertex in depth-first order (follows right slots in canonical form)."""
    node = _labeled_root(tree)
    path = [node.label]
    while not node.is_leaf():
        node = node.right if node.right is not None else node.left
        path.append(node.label)
    return path


def leftmost_path(tree: AnyTree) -> List[int]:
    """Root, then left children for as long as they exist."""
    node = _labeled_root(tree)
    path = [node.label]
    while node.left is not None:
        node = node.left
        path.append(node.label)
    return path


def left_child_vertices(tree: AnyTree) -> List[int]:
    return [
        node.left.label for node in preorder_nodes(_labeled_root(tree)) if node.left is not None
    ]


def all_left_children_leaves(tree: AnyTree) -> bool:
    return all(
        node.left.is_leaf() for node in preorder_nodes(_labeled_root(tree)) if node.left is not None
    )


def rtl_preorder_label(tree: OrderedTree) -> IncreasingTree:
    """Label the vertices 0..n in right-to-left preorder."""
    counter = iter(range(tree.n + 1))

    def label(node: Node) -> Node:
        out = Node(next(counter))
        if node.right is not None:
            out.right = label(node.right)
        if node.left is not None:
            out.left = label(node.left)
        return out

    return IncreasingTree(label(tree.root))


def is_rtl_increasing(tree: IncreasingTree) -> bool:
    return rtl_preorder(tree) == list(range(tree.n + 1))


# ---------- generation ----------

def enumerate_increasing_trees(n: int) -> Iterator[IncreasingTree]:
    """Every canonical tree in T_n; vertex j tries parents in ascending label order."""
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    parents: List[int] = []
    degree = [0] * (n + 1)

    def extend(j: int) -> Iterator[IncreasingTree]:
        if j > n:
            yield from_parents(parents)
            return
        for parent in range(j):
            if degree[parent] < 2:
                degree[parent] += 1
                parents.append(parent)
                yield from extend(j + 1)
                parents.pop()
                degree[parent] -= 1

    yield from extend(1)


Shape = Tuple[Optional[tuple], Optional[tuple]]


@lru_cache(maxsize=None)
def _shapes(vertices: int) -> Tuple[Shape, ...]:
    if vertices == 1:
        return ((None, None),)
    out: List[Shape] = [(None, sub) for sub in _shapes(vertices - 1)]
    for right_size in range(1, vertices - 1):
        for right in _shapes(right_size):
            for left in _shapes(vertices - 1 - right_size):
                out.append((left, right))
    return tuple(out)


def _node_from_shape(spec: Optional[Shape]) -> Optional[Node]:
    if spec is None:
        return None
    return Node(None, _node_from_shape(spec[0]), _node_from_shape(spec[1]))


def enumerate_ordered_trees(n: int) -> Iterator[OrderedTree]:
    """Every ordered 1-2 tree with n+1 vertices: lone child first, then right sizes ascending."""
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    for spec in _shapes(n + 1):
        yield OrderedTree(_node_from_shape(spec))


# ---------- text format ----------

class _TreeParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(f"{message} at offset {self.pos} in {self.text!r}", {"offset": self.pos})

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def node(self) -> Node:
        start = self.pos
        if self.peek() == "*":
            self.pos += 1
            label = None
        else:
            while self.peek().isdigit():
                self.pos += 1
            if start == self.pos:
                raise self.error("expected a label")
            label = int(self.text[start:self.pos])
        out = Node(label)
        if self.peek() == "(":
            self.pos += 1
            if self.peek() != ",":
                out.left = self.node()
            if self.peek() != ",":
                raise self.error("expected ','")
            self.pos += 1
            if self.peek() != ")":
                out.right = self.node()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            if out.is_leaf():
                raise self.error("empty child list")
        return out

    def parse(self) -> Node:
        root = self.node()
        if self.pos != len(self.text):
            raise self.error("trailing characters")
        return root


def serialize(tree: AnyTree) -> str:
    if isinstance(tree, (IncreasingTree, OrderedTree)):
        return tree.serialize()
    return _serialize(tree)


def parse_increasing_tree(text: str) -> IncreasingTree:
    root = _TreeParser(text.strip()).parse()
    if any(node.label is None for node in preorder_nodes(root)):
        raise ParseError("labeled tree expected, found '*'", {"text": text})
    return canonicalize(root)


def parse_ordered_tree(text: str) -> OrderedTree:
    root = _TreeParser(text.strip()).parse()
    if any(node.label is not None for node in preorder_nodes(root)):
        raise ParseError("ordered tree expected, labels must be '*'", {"text": text})
    return OrderedTree(root)
