# services/enumeration.py
"""Exhaustive generators for S_n, RS_n and DRS_n, pattern-restricted classes and
joint statistic histograms.

RS_n is grown value by value: inserting k into a simsun word on 1..k-1 keeps it
simsun unless the two letters right after the slot form a descent. DRS_n uses the
same insertion plus a check on the inverse, so every partial word is the
restriction of some member of DRS_n. Counting DRS_n runs the same search in the
compiled kernel of ``services.drs_kernel``; the generators here stay the
reference it is tested against.
"""
import logging
import time
from collections import Counter
from functools import lru_cache
from itertools import permutations as all_orders
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from core.config import settings
from core.errors import DomainError, UnknownNameError
from services import drs_kernel
from services.permutations import (
    Permutation,
    PermutationStatistics,
    Word,
    avoids,
    inverse,
    is_double_simsun,
    is_simsun,
    statistics,
    validate,
)

logger = logging.getLogger(__name__)

CLASSES = ("all", "simsun", "double-simsun")
STATISTICS = PermutationStatistics._fields

PARTITION_DEPTH = 4


# ---------- RS_n ----------

def _simsun_slots(word: Sequence[int]) -> Iterator[int]:
    for slot in range(len(word) + 1):
        if slot + 1 < len(word) and word[slot] > word[slot + 1]:
            continue
        yield slot


@lru_cache(maxsize=16)
def simsun_permutations(n: int) -> Tuple[Permutation, ...]:
    """RS_n in lexicographic order."""
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    level: List[Permutation] = [()]
    for k in range(1, n + 1):
        level = [
            word[:slot] + (k,) + word[slot:] for word in level for slot in _simsun_slots(word)
        ]
    return tuple(sorted(level))


def _extension_stays_simsun(prefix: Sequence[int]) -> bool:
    """False when the last letter x closes a double descent a > b > x, with b and
    x the first two letters after a that are smaller than a."""
    x = prefix[-1]
    for i in range(len(prefix) - 1):
        a = prefix[i]
        if x > a:
            continue
        smaller = [b for b in prefix[i + 1:-1] if b < a]
        if len(smaller) == 1 and smaller[0] > x:
            return False
    return True


def iter_simsun(n: int) -> Iterator[Permutation]:
    """RS_n in lexicographic order, one member at a time.

    A double descent among the letters placed so far survives every extension,
    so the walk abandons a prefix as soon as one appears.
    """
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    prefix: List[int] = []
    unused = set(range(1, n + 1))

    def extend() -> Iterator[Permutation]:
        if not unused:
            yield tuple(prefix)
            return
        for value in sorted(unused):
            prefix.append(value)
            if _extension_stays_simsun(prefix):
                unused.discard(value)
                yield from extend()
                unused.add(value)
            prefix.pop()

    yield from extend()


# ---------- DRS_n, pruned search ----------

def _inverse_stays_simsun(word: Sequence[int], slot: int) -> bool:
    """``word`` holds its maximum at ``slot``; the other letters already have a
    simsun inverse. Inverse double descents through the maximum need, in some
    prefix containing it, the two largest other letters b > a placed after it
    with a after b."""
    first: Optional[Tuple[int, int]] = None  # (value, index) largest
    second: Optional[Tuple[int, int]] = None
    for index, value in enumerate(word):
        if index == slot:
            continue
        if first is None or value > first[0]:
            first, second = (value, index), first
        elif second is None or value > second[0]:
            second = (value, index)
        if index > slot and second is not None and slot < first[1] < second[1]:
            return False
    return True


def _double_simsun_children(word: Permutation) -> Iterator[Permutation]:
    k = len(word) + 1
    for slot in _simsun_slots(word):
        child = word[:slot] + (k,) + word[slot:]
        if _inverse_stays_simsun(child, slot):
            yield child


def _grow(word: Permutation, n: int) -> Iterator[Permutation]:
    if len(word) == n:
        yield word
        return
    for child in _double_simsun_children(word):
        yield from _grow(child, n)


def double_simsun_prefixes(n: int) -> List[Permutation]:
    """Restrictions of DRS_n to 1..min(n, 4); the search tree splits below them."""
    depth = min(n, PARTITION_DEPTH)
    return sorted(_grow((), depth))


def count_double_simsun_from(prefix: Permutation, n: int) -> int:
    """Members of DRS_n restricting to ``prefix``, by the generator."""
    return sum(1 for _ in _grow(prefix, n))


def count_double_simsun(n: int, workers: int = 1) -> int:
    """|DRS_n| by the compiled search, prefixes spread over ``workers`` threads.

    Identical for every worker count.
    """
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    depth = min(n, PARTITION_DEPTH)
    return drs_kernel.count(double_simsun_prefixes(n), depth, n, workers)


@lru_cache(maxsize=16)
def double_simsun_permutations(n: int) -> Tuple[Permutation, ...]:
    """DRS_n in lexicographic order."""
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    return tuple(sorted(_grow((), n)))


def double_simsun_sequence(n_max: int, workers: int = 1) -> List[int]:
    """|DRS_n| for n = 1..n_max."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1", {"n_max": n_max})
    counts = []
    for n in range(1, n_max + 1):
        started = time.perf_counter()
        counts.append(count_double_simsun(n, workers))
        logger.debug(
            "DRS_%d = %d (%.1f ms, %d workers)",
            n, counts[-1], (time.perf_counter() - started) * 1000, workers,
        )
    return counts


def naive_double_simsun_count(n: int) -> int:
    return sum(1 for sigma in all_orders(range(1, n + 1)) if is_double_simsun(sigma))


# ---------- classes ----------

def _validate_patterns(patterns: Iterable[Word]) -> Tuple[Permutation, ...]:
    return tuple(validate(pattern) for pattern in patterns)


def check_size(n: int, cls: str) -> None:
    """Reject sizes beyond the harness range for on-request enumeration."""
    limit = settings.SIMSUN_NMAX_LIMIT
    if n > limit:
        raise DomainError(f"{cls} is limited to n <= {limit}", {"n": n, "class": cls, "limit": limit})


def enumerate_class(
    n: int,
    cls: str = "all",
    avoid: Iterable[Word] = (),
    avoid_inverse: bool = False,
) -> Iterator[Permutation]:
    """Members of the class on 1..n avoiding ``avoid``, lexicographic.

    For double-simsun the inverse must be simsun but only the permutation itself
    is tested against ``avoid`` unless ``avoid_inverse`` is set.
    """
    if cls not in CLASSES:
        raise UnknownNameError(f"unknown class {cls!r}", {"class": cls, "known": list(CLASSES)})
    if n < 0:
        raise DomainError("n must be non-negative", {"n": n})
    patterns = _validate_patterns(avoid)

    # the cached tuples stay within the harness range; beyond it members stream
    cached = n <= settings.SIMSUN_NMAX_LIMIT
    if cls == "all":
        source: Iterable[Permutation] = all_orders(range(1, n + 1))
    elif cls == "simsun":
        source = simsun_permutations(n) if cached else iter_simsun(n)
    elif cached:
        source = double_simsun_permutations(n)
    else:
        source = (sigma for sigma in iter_simsun(n) if is_simsun(inverse(sigma)))

    for sigma in source:
        if patterns and not avoids(sigma, patterns):
            continue
        if avoid_inverse and patterns and not avoids(inverse(sigma), patterns):
            continue
        yield sigma


def members(n: int, cls: str = "all", avoid: Iterable[Word] = (), avoid_inverse: bool = False) -> List[Permutation]:
    return list(enumerate_class(n, cls, avoid, avoid_inverse))


def rs(n: int, *patterns: Word) -> List[Permutation]:
    """RS_n(patterns)."""
    return members(n, "simsun", patterns)


def drs(n: int, *patterns: Word) -> List[Permutation]:
    """DRS_n(patterns): the permutation avoids them, its inverse is only simsun."""
    return members(n, "double-simsun", patterns)


def simsun_count_by_filter(n: int) -> int:
    return sum(1 for sigma in all_orders(range(1, n + 1)) if is_simsun(sigma))


# ---------- histograms ----------

def statistic_histogram(
    perms: Iterable[Word], stats: Sequence[str] = ("excedances", "fixed_points")
) -> Counter:
    """Joint distribution keyed by the tuple of requested statistics."""
    unknown = [name for name in stats if name not in STATISTICS]
    if unknown:
        raise UnknownNameError(
            f"unknown statistic {unknown[0]!r}", {"statistic": unknown[0], "known": list(STATISTICS)}
        )
    table: Counter = Counter()
    for sigma in perms:
        values = statistics(sigma)._asdict()
        table[tuple(values[name] for name in stats)] += 1
    return table


def histogram_frame(table: Dict[Tuple[int, ...], int], stats: Sequence[str]) -> pd.DataFrame:
    rows = [dict(zip(stats, key), count=count) for key, count in sorted(table.items())]
    return pd.DataFrame(rows, columns=[*stats, "count"])
