# utils/formats.py
"""Text formats shared by the CLI and the HTTP layer.

permutation  "5 3 4 1 8 6 7 2" (spaces or commas); "53418672" is accepted when n <= 9
composition  "3,2,1,3"
path         "UUDLDULD"
tree         "0(3(5,4),1(6(8,7),2))" labeled, "*(,*)" ordered
The empty string is the empty permutation, composition and path.
"""
import re
from typing import List, Sequence, Union

from core.errors import DomainError, ParseError
from services import motzkin
from services.permutations import Permutation, is_permutation
from services.trees import IncreasingTree, OrderedTree, parse_increasing_tree, parse_ordered_tree

_SEPARATORS = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if not text:
        return ()
    if _SEPARATORS.search(text):
        tokens = [token for token in _SEPARATORS.split(text) if token]
    elif text.isdigit() and len(text) <= 9:
        tokens = list(text)
    else:
        tokens = [text]
    if not all(token.isdigit() for token in tokens):
        raise ParseError(f"permutation letters must be integers: {text!r}", {"input": text})
    word = tuple(int(token) for token in tokens)
    if not is_permutation(word):
        raise ParseError(f"not a permutation of 1..{len(word)}: {text!r}", {"input": text})
    return word


def format_permutation(sigma: Sequence[int]) -> str:
    return " ".join(str(value) for value in sigma)


def parse_patterns(text: str) -> List[Permutation]:
    """Comma-separated compact patterns, e.g. ``"123,231"``."""
    return [parse_permutation(token) for token in text.split(",") if token.strip()]


def format_pattern(pattern: Sequence[int]) -> str:
    return "".join(str(value) for value in pattern)


def parse_composition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    tokens = [token.strip() for token in text.split(",")]
    if not all(token.isdigit() for token in tokens):
        raise ParseError(f"composition parts must be integers: {text!r}", {"input": text})
    parts = tuple(int(token) for token in tokens)
    if any(part < 1 for part in parts):
        raise DomainError("composition parts must be positive", {"parts": list(parts)})
    return parts


def format_composition(parts: Sequence[int]) -> str:
    return ",".join(str(part) for part in parts)


def parse_path(text: str) -> str:
    return motzkin.validate(text.strip())


def parse_tree(text: str) -> Union[IncreasingTree, OrderedTree]:
    """Ordered when the labels are ``*``, labeled otherwise."""
    text = text.strip()
    if "*" in text:
        return parse_ordered_tree(text)
    return parse_increasing_tree(text)


def format_tree(tree: Union[IncreasingTree, OrderedTree]) -> str:
    return tree.serialize()
