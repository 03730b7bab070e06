"""Permutations in one-line notation, pattern containment and the simsun predicates.

A permutation is a tuple ``(σ1, ..., σn)`` holding each of ``1..n`` once. Every
position that crosses the public interface is 1-based; tuples are indexed from 0
internally.
"""
import logging
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from core.errors import DomainError

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
Word = Sequence[int]

PATTERN_4132: Permutation = (4, 1, 3, 2)
PATTERN_51342: Permutation = (5, 1, 3, 4, 2)
PATTERN_42513: Permutation = (4, 2, 5, 1, 3)
PATTERN_35142: Permutation = (3, 5, 1, 4, 2)


class PermutationStatistics(NamedTuple):
    excedances: int
    fixed_points: int
    inversions: int
    descent_count: int


def is_permutation(word: Word) -> bool:
    """True when ``word`` is a bijection on {1..len(word)}"""
    return sorted(word) == list(range(1, len(word) + 1))


def validate(word: Word) -> Permutation:
    """Return ``word`` as a permutation tuple or raise DomainError."""
    perm = tuple(word)
    if not is_permutation(perm):
        raise DomainError(
            f"not a permutation of 1..{len(perm)}: {list(perm)}",
            {"word": list(perm)},
        )
    return perm


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def inverse(sigma: Word) -> Permutation:
    """τ with τ[σ[i]] = i."""
    tau = [0] * len(sigma)
    for position, value in enumerate(sigma, start=1):
        tau[value - 1] = position
    return tuple(tau)


def restrict(sigma: Word, k: int) -> Permutation:
    """Subword of the values <= k, in order of appearance."""
    if not 0 <= k <= len(sigma):
        raise DomainError(f"restriction bound {k} outside 0..{len(sigma)}", {"k": k, "n": len(sigma)})
    return tuple(value for value in sigma if value <= k)


def descents(sigma: Word) -> List[int]:
    """Positions i (1-based) with σi > σi+1."""
    return [i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1]]


def has_double_descent(word: Word) -> bool:
    return any(word[i] > word[i + 1] > word[i + 2] for i in range(len(word) - 2))


def simsun_witness(sigma: Word) -> Optional[Tuple[int, Tuple[int, int, int]]]:
    """Least k whose restriction to {1..k} has a double descent, with that triple.

    A triple a > b > c that is consecutive in some restriction is already
    consecutive in the restriction to {1..a}: b and c are then the first two
    letters after a that are smaller than a.
    """
    positions = inverse(sigma)
    for k in range(3, len(sigma) + 1):
        smaller_after: List[int] = []
        for value in sigma[positions[k - 1]:]:
            if value < k:
                smaller_after.append(value)
                if len(smaller_after) == 2:
                    break
        if len(smaller_after) == 2 and smaller_after[0] > smaller_after[1]:
            return k, (k, smaller_after[0], smaller_after[1])
    return None


def is_simsun(sigma: Word) -> bool:
    return simsun_witness(sigma) is None


def is_double_simsun(sigma: Word) -> bool:
    return is_simsun(sigma) and is_simsun(inverse(sigma))


def is_alternating(sigma: Word) -> bool:
    """Down-up alternating: σ1 > σ2 < σ3 > ..."""
    for i in range(len(sigma) - 1):
        if (sigma[i] > sigma[i + 1]) != (i % 2 == 0):
            return False
    return True


# ---------- pattern machinery ----------

def _shape(values: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(range(len(values)), key=values.__getitem__))


def _contains_length3(sigma: Word, pattern: Sequence[int]) -> bool:
    # middle letter plays pattern[1]; left/right candidates are filtered by their
    # relation to it, then one comparison between the two sides decides.
    a, b, c = pattern
    left_below, right_below, left_lt_right = a < b, c < b, a < c
    for j in range(1, len(sigma) - 1):
        middle = sigma[j]
        left = [x for x in sigma[:j] if (x < middle) == left_below]
        if not left:
            continue
        right = [z for z in sigma[j + 1:] if (z < middle) == right_below]
        if not right:
            continue
        if left_lt_right and min(left) < max(right):
            return True
        if not left_lt_right and max(left) > min(right):
            return True
    return False


def pattern_occurrences(sigma: Word, pattern: Word) -> List[Tuple[int, ...]]:
    """All 1-based index tuples carrying an occurrence of ``pattern``, lexicographic."""
    target = _shape(pattern)
    found = []
    for idx in combinations(range(len(sigma)), len(pattern)):
        if _shape([sigma[i] for i in idx]) == target:
            found.append(tuple(i + 1 for i in idx))
    return found


def contains_pattern(sigma: Word, pattern: Word) -> bool:
    if len(pattern) > len(sigma):
        return False
    if len(pattern) == 3:
        return _contains_length3(sigma, pattern)
    target = _shape(pattern)
    return any(
        _shape([sigma[i] for i in idx]) == target
        for idx in combinations(range(len(sigma)), len(pattern))
    )


def avoids(sigma: Word, patterns: Iterable[Word]) -> bool:
    return not any(contains_pattern(sigma, p) for p in patterns)


def _covered_by_51342(sigma: Word, occurrence: Tuple[int, ...]) -> bool:
    target = _shape(PATTERN_51342)
    chosen = {i - 1 for i in occurrence}
    for extra in range(len(sigma)):
        if extra in chosen:
            continue
        idx = sorted(chosen | {extra})
        if _shape([sigma[i] for i in idx]) == target:
            return True
    return False


def first_uncovered_4132(sigma: Word) -> Optional[Tuple[int, ...]]:
    """First 4132 occurrence (1-based positions) that sits inside no 51342 occurrence."""
    for occurrence in pattern_occurrences(sigma, PATTERN_4132):
        if not _covered_by_51342(sigma, occurrence):
            return occurrence
    return None


def every_4132_in_51342(sigma: Word) -> bool:
    """Every 4132 occurrence extends, by one extra position, to a 51342 occurrence."""
    return first_uncovered_4132(sigma) is None


def statistics(sigma: Word) -> PermutationStatistics:
    excedances = sum(1 for i, value in enumerate(sigma, start=1) if value > i)
    fixed_points = sum(1 for i, value in enumerate(sigma, start=1) if value == i)
    inversions = sum(
        1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j]
    )
    return PermutationStatistics(excedances, fixed_points, inversions, len(descents(sigma)))
