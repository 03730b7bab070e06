# services/drs_kernel.py
"""Compiled DRS_n counter.

Same search as the generator in ``services.enumeration``: insert the next value
into every simsun slot, keep the child when its inverse stays simsun. The word
lives in one int64 buffer and the depth-first walk is iterative, with
``chosen[length]`` holding the slot used for letter ``length + 1``.
"""
import numba
import numpy as np
from numba import njit, prange


@njit(cache=True)
def _insert(word, length, slot, value):
    for i in range(length, slot, -1):
        word[i] = word[i - 1]
    word[slot] = value


@njit(cache=True)
def _remove(word, length, slot):
    for i in range(slot, length - 1):
        word[i] = word[i + 1]
    word[length - 1] = 0


@njit(cache=True)
def _slot_ok(word, length, slot):
    return not (slot + 1 < length and word[slot] > word[slot + 1])


@njit(cache=True)
def _inverse_ok(word, size, slot):
    # word[slot] is the maximum; track the two largest other letters seen so far
    first_v, first_i = -1, -1
    second_v, second_i = -1, -1
    for index in range(size):
        if index == slot:
            continue
        value = word[index]
        if first_v < 0 or value > first_v:
            second_v, second_i = first_v, first_i
            first_v, first_i = value, index
        elif second_v < 0 or value > second_v:
            second_v, second_i = value, index
        if index > slot and second_v >= 0 and slot < first_i and first_i < second_i:
            return False
    return True


@njit(cache=True)
def count_from(prefix, n):
    """Members of DRS_n whose restriction to 1..len(prefix) is ``prefix``."""
    depth = prefix.shape[0]
    if depth == n:
        return 1
    word = np.zeros(n + 1, np.int64)
    for i in range(depth):
        word[i] = prefix[i]
    chosen = np.full(n + 1, -1, np.int64)
    total = 0
    length = depth
    while length >= depth:
        slot = chosen[length] + 1
        if chosen[length] >= 0:
            _remove(word, length + 1, chosen[length])
        placed = False
        while slot <= length:
            if _slot_ok(word, length, slot):
                _insert(word, length, slot, length + 1)
                if _inverse_ok(word, length + 1, slot):
                    placed = True
                    break
                _remove(word, length + 1, slot)
            slot += 1
        if not placed:
            chosen[length] = -1
            length -= 1
            continue
        chosen[length] = slot
        if length + 1 == n:
            total += 1
        else:
            length += 1
    return total


@njit(cache=True, parallel=True)
def count_parallel(prefixes, n):
    counts = np.zeros(prefixes.shape[0], np.int64)
    for row in prange(prefixes.shape[0]):
        counts[row] = count_from(prefixes[row], n)
    return counts.sum()


@njit(cache=True)
def count_serial(prefixes, n):
    total = 0
    for row in range(prefixes.shape[0]):
        total += count_from(prefixes[row], n)
    return total


def as_array(prefixes, depth):
    """Prefixes as an (m, depth) int64 matrix; depth 0 gives one empty row per prefix."""
    return np.array(prefixes, dtype=np.int64).reshape(len(prefixes), depth)


def count(prefixes, depth, n, workers=1):
    """Sum of ``count_from`` over the prefixes; the total is independent of ``workers``."""
    table = as_array(prefixes, depth)
    if workers <= 1 or table.shape[0] < 2:
        return int(count_serial(table, n))
    # thread count is local to the calling thread
    numba.set_num_threads(min(workers, numba.config.NUMBA_NUM_THREADS))
    return int(count_parallel(table, n))
