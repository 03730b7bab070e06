"""Motzkin paths and the subfamilies used by the simsun bijections.

A path is a string over ``U`` (up), ``L`` (level) and ``D`` (down) that never
goes below the axis and ends on it.
"""
from typing import Iterator, List, Sequence

from core.errors import DomainError, ParseError

MotzkinPath = str

STEPS = "DLU"  # enumeration order
_DELTA = {"U": 1, "L": 0, "D": -1}


def is_motzkin(path: str) -> bool:
    level = 0
    for step in path:
        if step not in _DELTA:
            return False
        level += _DELTA[step]
        if level < 0:
            return False
    return level == 0


def validate(path: str) -> MotzkinPath:
    if any(step not in _DELTA for step in path):
        raise ParseError(f"path steps must be U, L or D: {path!r}", {"path": path})
    if not is_motzkin(path):
        raise DomainError(f"not a Motzkin path: {path!r}", {"path": path})
    return path


def heights(path: str) -> List[int]:
    """Heights before the first step and after every step."""
    out = [0]
    for step in path:
        out.append(out[-1] + _DELTA[step])
    return out


def height(path: str) -> int:
    return max(heights(path))


def area(path: str) -> int:
    """Trapezoid sum under the path; equals the sum of the interior heights."""
    levels = heights(path)
    return sum(levels[1:-1]) if len(levels) > 2 else 0


def enumerate_motzkin(n: int) -> Iterator[MotzkinPath]:
    """All paths of length n, lexicographic with D < L < U."""
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    steps: List[str] = []

    def extend(level: int) -> Iterator[MotzkinPath]:
        remaining = n - len(steps)
        if remaining == 0:
            yield "".join(steps)
            return
        for step in STEPS:
            nxt = level + _DELTA[step]
            if nxt < 0 or nxt > remaining - 1:
                continue
            steps.append(step)
            yield from extend(nxt)
            steps.pop()

    yield from extend(0)


def is_dd_free(path: str) -> bool:
    return "DD" not in path


def blocks(path: str) -> List[str]:
    """Factor into minimal returns to the axis; a level step on the axis is its own block."""
    out: List[str] = []
    start, level = 0, 0
    for i, step in enumerate(path):
        level += _DELTA[step]
        if level == 0:
            out.append(path[start:i + 1])
            start = i + 1
    return out


def in_R(path: str) -> bool:
    """Height exactly 1 and no level step on the axis."""
    if not path:
        return False
    level = 0
    for step in path:
        if step == "L" and level == 0:
            return False
        level += _DELTA[step]
        if level > 1:
            return False
    return True


def r_from_composition(parts: Sequence[int]) -> MotzkinPath:
    """Path of R_n whose block sizes are ``parts`` (every part at least 2)."""
    if any(part < 2 for part in parts):
        raise DomainError("R-path blocks have size at least 2", {"parts": list(parts)})
    return "".join("U" + "L" * (part - 2) + "D" for part in parts)


def r_paths(n: int) -> List[MotzkinPath]:
    return [path for path in enumerate_motzkin(n) if in_R(path)]


def q_from_r(path: str) -> MotzkinPath:
    """Drop the first and last step of the final block of an R-path."""
    if not in_R(path):
        raise DomainError(f"{path!r} is not in R", {"path": path})
    parts = blocks(path)
    return "".join(parts[:-1]) + parts[-1][1:-1]


def in_Q(path: str) -> bool:
    """Height-1 blocks without ground level steps, then a run of ground level steps."""
    parts = blocks(path)
    tail = len(parts)
    while tail > 0 and parts[tail - 1] == "L":
        tail -= 1
    for part in parts[:tail]:
        if part == "L" or not in_R(part):
            return False
    return True


def q_paths(n: int) -> List[MotzkinPath]:
    return [path for path in enumerate_motzkin(n) if in_Q(path)]


def dd_free_paths(n: int) -> List[MotzkinPath]:
    return [path for path in enumerate_motzkin(n) if is_dd_free(path)]


def weak_ascents(path: str) -> int:
    """Number of maximal runs of U and L steps."""
    runs, inside = 0, False
    for step in path:
        if step in "UL":
            if not inside:
                runs += 1
            inside = True
        else:
            inside = False
    return runs


def in_W(path: str) -> bool:
    return weak_ascents(path) == 1


def w_paths(n: int) -> List[MotzkinPath]:
    return [path for path in enumerate_motzkin(n) if in_W(path)]
