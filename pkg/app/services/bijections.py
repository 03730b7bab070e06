# services/bijections.py
"""Maps between simsun permutations, increasing trees, ordered trees, Motzkin paths
and compositions.

Every map with a restricted domain takes ``check``. With ``check=True`` the input
is validated and a DomainError with a witness is raised when it lies outside the
domain; with ``check=False`` the input is trusted (used by the exhaustive
harness). Outputs agree on valid input.
"""
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from core.errors import DomainError
from services import motzkin as paths
from services.permutations import (
    Permutation,
    Word,
    avoids,
    inverse,
    is_simsun,
    restrict,
    simsun_witness,
    validate,
)
from services.trees import (
    IncreasingTree,
    Node,
    OrderedTree,
    inorder,
    is_canonical,
    is_rtl_increasing,
    preorder_nodes,
    rightmost_path,
    rtl_preorder_label,
    rtl_preorder_nodes,
)

logger = logging.getLogger(__name__)

Composition = Tuple[int, ...]


# ---------- compositions ----------

def validate_composition(parts: Sequence[int], n: Optional[int] = None) -> Composition:
    parts = tuple(parts)
    if any(part < 1 for part in parts):
        raise DomainError("composition parts must be positive", {"parts": list(parts)})
    if n is not None and sum(parts) != n:
        raise DomainError(f"parts sum to {sum(parts)}, expected {n}", {"parts": list(parts), "n": n})
    return parts


def compositions(n: int) -> List[Composition]:
    """All 2^(n-1) compositions of n, lexicographic; n = 0 has only ()."""
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    if n == 0:
        return [()]
    out: List[Composition] = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def _blocks(parts: Composition) -> Iterator[List[int]]:
    start = 1
    for part in parts:
        yield list(range(start, start + part))
        start += part


# ---------- increasing trees <-> simsun permutations ----------

def phi(tree: IncreasingTree, check: bool = True) -> Permutation:
    """Word of a canonical increasing 1-2 tree."""
    if check and not is_canonical(tree):
        raise DomainError("phi needs a canonical increasing 1-2 tree", {"tree": tree.serialize()})
    word: List[int] = []
    node = tree.root
    while not node.is_leaf():
        if node.left is not None and node.right is not None:
            # emit the left subtree and cut it off; the remaining child is next
            word.extend(inorder(node.left))
        child = node.right if node.right is not None else node.left
        word.append(child.label)
        node = child
    return tuple(word)


def _attach(parent: Node, label: int) -> Node:
    child = Node(label)
    if parent.right is None and parent.left is None:
        parent.right = child
    elif parent.left is None:
        parent.left = child  # newest label is the largest, so it goes left
    else:
        raise DomainError(
            f"vertex {parent.label} already has two children",
            {"parent": parent.label, "label": label},
        )
    return child


def phi_inverse(sigma: Word, check: bool = True) -> IncreasingTree:
    """Increasing 1-2 tree T with phi(T) = sigma."""
    if check:
        sigma = validate(sigma)
        witness = simsun_witness(sigma)
        if witness is not None:
            k, triple = witness
            raise DomainError(
                f"not simsun: restriction to 1..{k} has the double descent {triple}",
                {"k": k, "triple": list(triple)},
            )
    root = Node(0)
    tree = IncreasingTree(root)
    n = len(sigma)
    if n == 0:
        return tree
    vertex: Dict[int, Node] = {0: root, 1: _attach(root, 1)}
    for j in range(2, n + 1):
        word = restrict(sigma, j)
        i = word.index(j)
        if i == j - 1:
            last = root
            while not last.is_leaf():
                last = last.right if last.right is not None else last.left
            parent = last
        elif i == 0:
            parent = root if len(root.children()) == 1 else vertex[word[1]]
        else:
            before, after = word[i - 1], word[i + 1]
            if before > after or after in rightmost_path(tree):
                parent = vertex[before]
            else:
                parent = vertex[after]
        vertex[j] = _attach(parent, j)
    return tree


# ---------- ordered trees <-> Motzkin paths ----------

def _chi(node: Node) -> str:
    if node.is_leaf():
        return ""
    if node.left is None or node.right is None:
        child = node.right if node.right is not None else node.left
        return "L" + _chi(child)
    return "U" + _chi(node.right) + "D" + _chi(node.left)


def chi(tree: Union[OrderedTree, IncreasingTree]) -> paths.MotzkinPath:
    """Motzkin path of an ordered 1-2 tree; labels are ignored."""
    return _chi(tree.root)


def _chi_inverse(path: str, start: int, end: int) -> Node:
    node = Node(None)
    if start == end:
        return node
    if path[start] == "L":
        node.right = _chi_inverse(path, start + 1, end)
        return node
    # first down step that returns to the starting level splits U pi1 D pi2
    level = 0
    for k in range(start, end):
        level += 1 if path[k] == "U" else -1 if path[k] == "D" else 0
        if level == 0:
            break
    node.right = _chi_inverse(path, start + 1, k)
    node.left = _chi_inverse(path, k + 1, end)
    return node


def chi_inverse(path: str) -> OrderedTree:
    """Ordered 1-2 tree whose chi-path is ``path``."""
    path = paths.validate(path)
    return OrderedTree(_chi_inverse(path, 0, len(path)))


# ---------- subtree switching ----------

def in_f(tree: IncreasingTree) -> bool:
    """Trees whose word avoids 231, i.e. the domain of psi."""
    return is_canonical(tree) and avoids(phi(tree, check=False), [(2, 3, 1)])


def psi(tree: IncreasingTree, check: bool = True) -> IncreasingTree:
    """Switch subtrees until the labels run 0..n in right-to-left preorder.

    Works on a copy. Each round rescans from the root for the first consecutive
    pair (v, z) with z >= v + 2; z must be the right child of v and z - 1 a leaf.
    """
    if check and not in_f(tree):
        raise DomainError("psi needs phi^-1 of a 231-avoiding simsun permutation",
                          {"tree": tree.serialize()})
    out = tree.copy()
    vertex = out.nodes()
    for _ in range(out.n * out.n + 1):
        order = list(rtl_preorder_nodes(out.root))
        pair = next(
            ((v, z) for v, z in zip(order, order[1:]) if z.label >= v.label + 2),
            None,
        )
        if pair is None:
            return out
        v, z = pair
        x = vertex[z.label - 1]
        if v.right is not z or not x.is_leaf():
            raise DomainError(
                f"cannot switch the subtrees of {v.label} onto {x.label}",
                {"v": v.label, "z": z.label, "tree": out.serialize()},
            )
        x.left, x.right = v.left, z
        v.left = v.right = None
        logger.debug("psi: moved subtrees of %d to leaf %d", v.label, x.label)
    raise DomainError("psi did not terminate", {"tree": tree.serialize()})


def psi_inverse(tree: IncreasingTree, check: bool = True) -> IncreasingTree:
    """Undo psi: push subtrees of non-leaf left children back onto the
    greatest leaf of their sibling's subtree."""
    if check and not (is_canonical(tree) and is_rtl_increasing(tree)):
        raise DomainError("psi_inverse needs a canonical rtl-increasing tree",
                          {"tree": tree.serialize()})
    out = tree.copy()
    for _ in range(out.n * out.n + 1):
        parent = next(
            (node for node in preorder_nodes(out.root)
             if node.left is not None and not node.left.is_leaf()),
            None,
        )
        if parent is None:
            return out
        x, w = parent.left, parent.right
        target = max((node for node in preorder_nodes(w) if node.is_leaf()),
                     key=lambda node: node.label)
        target.left, target.right = x.left, x.right
        x.left = x.right = None
    raise DomainError("psi_inverse did not terminate", {"tree": tree.serialize()})


# ---------- permutation maps ----------

def gamma(sigma: Word) -> Permutation:
    """omega_i = n + 1 - inverse(sigma)_{n+1-i}; an involution."""
    n = len(sigma)
    tau = inverse(sigma)
    return tuple(n + 1 - tau[n - i] for i in range(1, n + 1))


def rho(parts: Sequence[int]) -> Permutation:
    """Rotate every block of 1..n left by one."""
    parts = validate_composition(parts)
    word: List[int] = []
    for block in _blocks(parts):
        word.extend(block[1:] + block[:1])
    return tuple(word)


def rho_inverse(sigma: Word, check: bool = True) -> Composition:
    """Cut right after the letter k whenever k is last in the restriction to 1..k."""
    if check:
        sigma = validate(sigma)
        if not (is_simsun(sigma) and avoids(sigma, [(3, 1, 2)])):
            raise DomainError("rho_inverse needs a 312-avoiding simsun permutation",
                              {"word": list(sigma)})
    positions = inverse(sigma)
    cuts = sorted(
        positions[k - 1] for k in range(1, len(sigma) + 1) if restrict(sigma, k)[-1] == k
    )
    parts: List[int] = []
    cut = 0
    for position in cuts:
        parts.append(position - cut)
        cut = position
    if check and rho(parts) != tuple(sigma):
        raise DomainError("permutation is not in the image of rho", {"word": list(sigma)})
    return tuple(parts)


def varrho(parts: Sequence[int]) -> Permutation:
    """Rotate every block right by one; the inverse permutation of rho(parts)."""
    parts = validate_composition(parts)
    word: List[int] = []
    for block in _blocks(parts):
        word.extend(block[-1:] + block[:-1])
    return tuple(word)


def varrho_inverse(sigma: Word, check: bool = True) -> Composition:
    if check:
        sigma = validate(sigma)
        if not (is_simsun(sigma) and is_simsun(inverse(sigma)) and avoids(sigma, [(2, 3, 1)])):
            raise DomainError("varrho_inverse needs a 231-avoiding double simsun permutation",
                              {"word": list(sigma)})
    return rho_inverse(inverse(sigma), check=check)


def is_zeta_admissible(parts: Sequence[int]) -> bool:
    return all(part >= 1 for part in parts) and all(part >= 2 for part in parts[1:-1])


def zeta_compositions(n: int) -> List[Composition]:
    return [parts for parts in compositions(n) if is_zeta_admissible(parts)]


def zeta(parts: Sequence[int], check: bool = True) -> Permutation:
    """Cut n, n-1, ..., 1 into blocks of the given sizes and reverse each block."""
    parts = validate_composition(parts)
    if check and not is_zeta_admissible(parts):
        raise DomainError("interior parts must be at least 2", {"parts": list(parts)})
    beta = list(range(sum(parts), 0, -1))
    word: List[int] = []
    start = 0
    for part in parts:
        word.extend(reversed(beta[start:start + part]))
        start += part
    return tuple(word)


def zeta_inverse(sigma: Word, check: bool = True) -> Composition:
    """Lengths of the maximal increasing runs."""
    if check:
        sigma = validate(sigma)
    parts: List[int] = []
    run = 0
    for i, value in enumerate(sigma):
        if i > 0 and value < sigma[i - 1]:
            parts.append(run)
            run = 0
        run += 1
    if run:
        parts.append(run)
    parts = tuple(parts)
    if check and (not is_zeta_admissible(parts) or zeta(parts, check=False) != tuple(sigma)):
        raise DomainError("permutation is not in the image of zeta", {"word": list(sigma)})
    return parts


def extend_rs123(sigma: Word) -> Permutation:
    """Insert n+1 between the first two letters after a descent, else in front."""
    sigma = tuple(sigma)
    if len(sigma) < 2:
        raise DomainError("extend_rs123 needs n >= 2", {"word": list(sigma)})
    top = len(sigma) + 1
    if sigma[0] > sigma[1]:
        return (sigma[0], top) + sigma[1:]
    return (top,) + sigma


# ---------- composites ----------

def rs213_to_motzkin(sigma: Word, check: bool = True) -> paths.MotzkinPath:
    if check and not avoids(validate(sigma), [(2, 1, 3)]):
        raise DomainError("permutation contains 213", {"word": list(sigma)})
    return chi(phi_inverse(sigma, check=check))


def motzkin_to_rs213(path: str) -> Permutation:
    return phi(rtl_preorder_label(chi_inverse(path)), check=False)


def rs231_to_motzkin(sigma: Word, check: bool = True) -> paths.MotzkinPath:
    if check and not avoids(validate(sigma), [(2, 3, 1)]):
        raise DomainError("permutation contains 231", {"word": list(sigma)})
    return chi(psi(phi_inverse(sigma, check=check), check=False))


def rs231_to_rs213(sigma: Word, check: bool = True) -> Permutation:
    if check and not avoids(validate(sigma), [(2, 3, 1)]):
        raise DomainError("permutation contains 231", {"word": list(sigma)})
    return phi(psi(phi_inverse(sigma, check=check), check=False), check=False)
