import pytest
import sympy

from core.errors import DomainError, UnknownNameError
from services import sequences

KNOWN = {
    "euler": (1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521),
    "motzkin": (1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188),
    "secondary": (1, 1, 2, 4, 8, 17, 37, 82, 185),
    "catalan": (1, 1, 2, 5, 14, 42, 132, 429, 1430),
    "fibonacci": (0, 1, 1, 2, 3, 5, 8, 13, 21),
    "pow2": (1, 1, 2, 4, 8, 16, 32),
}


@pytest.mark.parametrize("name, values", KNOWN.items())
def test_known_prefixes(name, values):
    assert sequences.table(name, len(values) - 1) == values


@pytest.mark.parametrize("name", sorted(sequences.SEQUENCES))
def test_alternate_formulation_agrees(name):
    assert sequences.SEQUENCES[name](40) == sequences.ALTERNATES[name](40)


def test_sympy_oracles():
    n_max = 30
    assert sequences.catalan(n_max) == tuple(int(sympy.catalan(n)) for n in range(n_max + 1))
    assert sequences.fibonacci(n_max) == tuple(int(sympy.fibonacci(n)) for n in range(n_max + 1))
    # up-down permutations of n: zigzag numbers, sympy's euler() is the secant side only
    secants = [abs(int(sympy.euler(2 * k))) for k in range(8)]
    assert [sequences.reference("euler", 2 * k) for k in range(8)] == secants


def test_euler_numbers_count_increasing_trees_sum():
    # E_{n+1} = (1/2) sum_k C(n, k) E_k E_{n-k} for n >= 1
    euler = sequences.euler(20)
    for n in range(1, 20):
        assert 2 * euler[n + 1] == sum(sympy.binomial(n, k) * euler[k] * euler[n - k] for k in range(n + 1))


def test_errors():
    with pytest.raises(UnknownNameError):
        sequences.table("lucas", 5)
    with pytest.raises(DomainError):
        sequences.table("euler", -1)
    assert sequences.reference("motzkin", 0) == 1
    assert sequences.table("pow2", 0) == (1,)
