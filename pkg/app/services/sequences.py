# services/sequences.py
"""Exact reference sequences, each with an independent second formulation."""
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Tuple

from core.errors import DomainError, UnknownNameError

Table = Tuple[int, ...]


@lru_cache(maxsize=None)
def euler(n_max: int) -> Table:
    """Down-up alternating counts E_0..E_n_max via the boustrophedon triangle."""
    values = [1]
    row = [1]
    for n in range(1, n_max + 1):
        nxt = [0]
        for k in range(1, n + 1):
            nxt.append(nxt[-1] + row[n - k])
        row = nxt
        values.append(row[-1])
    return tuple(values)


@lru_cache(maxsize=None)
def euler_binomial(n_max: int) -> Table:
    # 2 E_{n+1} = sum_k C(n, k) E_k E_{n-k}, n >= 1
    values = [1, 1]
    for n in range(1, n_max):
        total = sum(comb(n, k) * values[k] * values[n - k] for k in range(n + 1))
        values.append(total // 2)
    return tuple(values[:n_max + 1])


@lru_cache(maxsize=None)
def motzkin(n_max: int) -> Table:
    values: List[int] = []
    for n in range(n_max + 1):
        if n < 2:
            values.append(1)
            continue
        values.append(values[n - 1] + sum(values[k] * values[n - 2 - k] for k in range(n - 1)))
    return tuple(values)


@lru_cache(maxsize=None)
def motzkin_three_term(n_max: int) -> Table:
    # (n + 2) M_n = (2n + 1) M_{n-1} + 3 (n - 1) M_{n-2}
    values = [1, 1]
    for n in range(2, n_max + 1):
        values.append(((2 * n + 1) * values[n - 1] + 3 * (n - 1) * values[n - 2]) // (n + 2))
    return tuple(values[:n_max + 1])


@lru_cache(maxsize=None)
def catalan(n_max: int) -> Table:
    values = [1]
    for n in range(1, n_max + 1):
        values.append(sum(values[k] * values[n - 1 - k] for k in range(n)))
    return tuple(values)


@lru_cache(maxsize=None)
def catalan_binomial(n_max: int) -> Table:
    return tuple(comb(2 * n, n) // (n + 1) for n in range(n_max + 1))


@lru_cache(maxsize=None)
def secondary(n_max: int) -> Table:
    """DD-free Motzkin path counts: first return splits off U t D with t a shifted path."""
    values: List[int] = []

    def inner(k: int) -> int:
        return 1 if k == 0 else values[k - 1]

    for n in range(n_max + 1):
        if n < 2:
            values.append(1)
            continue
        values.append(
            values[n - 1] + sum(inner(k) * values[n - 2 - k] for k in range(n - 1))
        )
    return tuple(values)


@lru_cache(maxsize=None)
def secondary_lattice(n_max: int) -> Table:
    # lattice walk keyed by (height, last step was D)
    values = []
    for n in range(n_max + 1):
        states: Dict[Tuple[int, bool], int] = {(0, False): 1}
        for _ in range(n):
            nxt: Dict[Tuple[int, bool], int] = {}
            for (level, after_down), count in states.items():
                moves = [(level, False), (level + 1, False)]
                if level > 0 and not after_down:
                    moves.append((level - 1, True))
                for state in moves:
                    nxt[state] = nxt.get(state, 0) + count
            states = nxt
        values.append(states.get((0, False), 0) + states.get((0, True), 0))
    return tuple(values)


@lru_cache(maxsize=None)
def fibonacci(n_max: int) -> Table:
    """F_0 = 0, F_1 = F_2 = 1."""
    values = [0, 1]
    for n in range(2, n_max + 1):
        values.append(values[-1] + values[-2])
    return tuple(values[:n_max + 1])


@lru_cache(maxsize=None)
def fibonacci_binomial(n_max: int) -> Table:
    # F_{n+1} = sum_k C(n - k, k)
    return tuple(
        0 if n == 0 else sum(comb(n - 1 - k, k) for k in range((n - 1) // 2 + 1))
        for n in range(n_max + 1)
    )


@lru_cache(maxsize=None)
def pow2(n_max: int) -> Table:
    """2^(n-1) for n >= 1; the single empty composition gives 1 at n = 0."""
    return tuple(1 if n == 0 else 2 ** (n - 1) for n in range(n_max + 1))


@lru_cache(maxsize=None)
def pow2_compositions(n_max: int) -> Table:
    values = [1]
    for n in range(1, n_max + 1):
        values.append(sum(values[:n]))
    return tuple(values)


SEQUENCES: Dict[str, Callable[[int], Table]] = {
    "euler": euler,
    "motzkin": motzkin,
    "catalan": catalan,
    "secondary": secondary,
    "fibonacci": fibonacci,
    "pow2": pow2,
}

ALTERNATES: Dict[str, Callable[[int], Table]] = {
    "euler": euler_binomial,
    "motzkin": motzkin_three_term,
    "catalan": catalan_binomial,
    "secondary": secondary_lattice,
    "fibonacci": fibonacci_binomial,
    "pow2": pow2_compositions,
}


def table(name: str, n_max: int) -> Table:
    if name not in SEQUENCES:
        raise UnknownNameError(
            f"unknown sequence {name!r}", {"name": name, "known": sorted(SEQUENCES)}
        )
    if n_max < 0:
        raise DomainError("n must be non-negative", {"n": n_max})
    return SEQUENCES[name](n_max)


def reference(name: str, n: int) -> int:
    return table(name, n)[n]
