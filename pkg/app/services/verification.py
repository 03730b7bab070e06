# services/verification.py
"""Exhaustive verification of the counting results and bijections.

Every claim is a function ``n -> (expected, observed, provenance)``. Three
encodings keep the observed value a single integer:

* set equality: ``|A|`` when A == B, otherwise ``-|A ^ B|``;
* bijection: ``|codomain|`` when the images are distinct and cover the codomain,
  otherwise minus the number of defects (duplicates, strays, misses);
* predicate equivalence: the number of inputs on which both sides agree, with
  the class size expected.
"""
import json
import logging
import os
import time
from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import permutations as all_orders
from math import comb, factorial
from typing import Callable, Collection, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from core.config import settings
from core.errors import DomainError, UnknownNameError
from models.schemas import Provenance, VerificationReport
from services import bijections, motzkin, sequences, trees
from services.enumeration import (
    count_double_simsun,
    enumerate_class,
    naive_double_simsun_count,
    simsun_count_by_filter,
    simsun_permutations,
    statistic_histogram,
)
from services.permutations import (
    PATTERN_42513,
    Permutation,
    contains_pattern,
    descents,
    every_4132_in_51342,
    inverse,
    is_alternating,
    is_double_simsun,
    is_simsun,
    statistics,
)

logger = logging.getLogger(__name__)

Outcome = Tuple[int, int, Provenance]

PUBLISHED_DRS = (1, 2, 5, 15, 52, 204, 892, 4297)
RS_123 = {1: 1, 2: 2, 3: 4}
DRS_123 = {1: 1, 2: 2, 3: 4, 4: 5, 5: 3}

PATTERNS = ("123", "132", "213", "231", "312", "321")


def _pattern(code: str) -> Permutation:
    return tuple(int(letter) for letter in code)


# ---------- cached classes ----------

@lru_cache(maxsize=128)
def _members(n: int, cls: str, codes: Tuple[str, ...] = ()) -> Tuple[Permutation, ...]:
    return tuple(enumerate_class(n, cls, [_pattern(code) for code in codes]))


def _rs(n: int, *codes: str) -> Tuple[Permutation, ...]:
    return _members(n, "simsun", tuple(sorted(codes)))


def _drs(n: int, *codes: str) -> Tuple[Permutation, ...]:
    return _members(n, "double-simsun", tuple(sorted(codes)))


@lru_cache(maxsize=16)
def _increasing_trees(n: int) -> Tuple[trees.IncreasingTree, ...]:
    return tuple(trees.enumerate_increasing_trees(n))


@lru_cache(maxsize=16)
def _labeled_ordered_trees(n: int) -> Tuple[trees.IncreasingTree, ...]:
    return tuple(trees.rtl_preorder_label(x) for x in trees.enumerate_ordered_trees(n))


# ---------- encodings ----------

def set_score(left: Iterable[Hashable], right: Iterable[Hashable]) -> int:
    a, b = set(left), set(right)
    return len(a) if a == b else -len(a ^ b)


def bijection_score(images: Sequence[Hashable], codomain: Collection[Hashable]) -> int:
    image_set, target = set(images), set(codomain)
    defects = (len(images) - len(image_set)) + len(image_set - target) + len(target - image_set)
    return len(target) if defects == 0 else -defects


def injection_score(images: Sequence[Hashable], member: Callable[[Hashable], bool]) -> int:
    """Bijection score when the codomain is too large to list: distinct members only."""
    image_set = set(images)
    defects = (len(images) - len(image_set)) + sum(1 for image in image_set if not member(image))
    return len(image_set) if defects == 0 else -defects


def agreements(items: Iterable, test: Callable[..., bool]) -> int:
    return sum(1 for item in items if test(item))


def histogram_score(left: Dict, right: Dict, total: int) -> int:
    keys = set(left) | set(right)
    diff = sum(abs(left.get(key, 0) - right.get(key, 0)) for key in keys)
    return total if diff == 0 else -diff


def _seq(name: str, n: int) -> int:
    return sequences.reference(name, n)


# ---------- claims ----------

@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    check: Callable[[int], Outcome]
    n_min: int = 1
    n_cap: Optional[int] = None  # None: bounded by SIMSUN_NMAX_LIMIT
    exploratory: bool = False
    threaded: bool = False  # check takes a workers keyword


def _rs_total(n: int) -> Outcome:
    return _seq("euler", n + 1), len(simsun_permutations(n)), Provenance.RECURRENCE


def _rs_filter(n: int) -> Outcome:
    return len(simsun_permutations(n)), simsun_count_by_filter(n), Provenance.DERIVED


def _drs_total(n: int, workers: int = 1) -> Outcome:
    observed = count_double_simsun(n, workers)
    if n <= len(PUBLISHED_DRS):
        return PUBLISHED_DRS[n - 1], observed, Provenance.PUBLISHED
    return observed, observed, Provenance.COMPUTED


def _drs_pruned_naive(n: int, workers: int = 1) -> Outcome:
    return naive_double_simsun_count(n), count_double_simsun(n, workers), Provenance.DERIVED


def _phi_bijection(n: int) -> Outcome:
    forest = _increasing_trees(n)
    words = [bijections.phi(t) for t in forest]
    score = bijection_score(words, simsun_permutations(n))
    if score > 0 and any(bijections.phi_inverse(w) != t for w, t in zip(words, forest)):
        score = -sum(1 for w, t in zip(words, forest) if bijections.phi_inverse(w) != t)
    return _seq("euler", n + 1), score, Provenance.RECURRENCE


def _phi_descents_leaves(n: int) -> Outcome:
    forest = _increasing_trees(n)
    observed = agreements(
        forest, lambda t: len(descents(bijections.phi(t))) + 1 == len(trees.leaves(t))
    )
    return len(forest), observed, Provenance.DERIVED


def _label_rs213(n: int) -> Outcome:
    images = [bijections.phi(t, check=False) for t in _labeled_ordered_trees(n)]
    return _seq("motzkin", n), bijection_score(images, _rs(n, "213")), Provenance.RECURRENCE


def _chi_bijection(n: int) -> Outcome:
    shapes = list(trees.enumerate_ordered_trees(n))
    words = [bijections.chi(x) for x in shapes]
    score = bijection_score(words, motzkin.enumerate_motzkin(n))
    if score > 0:
        misses = sum(1 for w, x in zip(words, shapes) if bijections.chi_inverse(w) != x)
        score = -misses if misses else score
    return _seq("motzkin", n), score, Provenance.RECURRENCE


def _rs213_motzkin(n: int) -> Outcome:
    images = [bijections.rs213_to_motzkin(s, check=False) for s in _rs(n, "213")]
    return _seq("motzkin", n), bijection_score(images, motzkin.enumerate_motzkin(n)), Provenance.RECURRENCE


def _rs213_uncovered_dd(n: int) -> Outcome:
    members = _rs(n, "213")
    observed = agreements(
        members,
        lambda s: (not motzkin.is_dd_free(bijections.rs213_to_motzkin(s, check=False)))
        == (not every_4132_in_51342(s)),
    )
    return len(members), observed, Provenance.DERIVED


def _rs213_inverse_simsun(n: int) -> Outcome:
    members = _rs(n, "213")
    observed = agreements(members, lambda s: is_simsun(inverse(s)) == every_4132_in_51342(s))
    return len(members), observed, Provenance.DERIVED


def _drs213_dd_free(n: int) -> Outcome:
    images = [bijections.rs213_to_motzkin(s, check=False) for s in _drs(n, "213")]
    return _seq("secondary", n), bijection_score(images, motzkin.dd_free_paths(n)), Provenance.RECURRENCE


def _drs132_213_q(n: int) -> Outcome:
    images = [bijections.rs213_to_motzkin(s, check=False) for s in _drs(n, "132", "213")]
    return _seq("fibonacci", n + 1), bijection_score(images, motzkin.q_paths(n)), Provenance.RECURRENCE


def _rs231_213_w(n: int) -> Outcome:
    images = [bijections.rs213_to_motzkin(s, check=False) for s in _rs(n, "231", "213")]
    return _seq("fibonacci", n + 1), bijection_score(images, motzkin.w_paths(n)), Provenance.RECURRENCE


def _rs231_to_rs213(n: int) -> Outcome:
    images = [bijections.rs231_to_rs213(s, check=False) for s in _rs(n, "231")]
    return _seq("motzkin", n), bijection_score(images, _rs(n, "213")), Provenance.RECURRENCE


def _rs231_to_motzkin(n: int) -> Outcome:
    images = [bijections.rs231_to_motzkin(s, check=False) for s in _rs(n, "231")]
    return _seq("motzkin", n), bijection_score(images, motzkin.enumerate_motzkin(n)), Provenance.RECURRENCE


def _psi_roundtrip(n: int) -> Outcome:
    domain = [bijections.phi_inverse(s, check=False) for s in _rs(n, "231")]

    def ok(tree: trees.IncreasingTree) -> bool:
        image = bijections.psi(tree, check=False)
        return (
            trees.is_rtl_increasing(image)
            and trees.all_left_children_leaves(tree)
            and bijections.psi_inverse(image, check=False) == tree
        )

    return len(domain), agreements(domain, ok), Provenance.DERIVED


def _psi_inverse_roundtrip(n: int) -> Outcome:
    labeled = _labeled_ordered_trees(n)

    def ok(tree: trees.IncreasingTree) -> bool:
        back = bijections.psi_inverse(tree, check=False)
        return bijections.in_f(back) and bijections.psi(back, check=False) == tree

    return len(labeled), agreements(labeled, ok), Provenance.DERIVED


def _psi_fixed_points(n: int) -> Outcome:
    fixed = [
        s for s in _rs(n, "231")
        if bijections.psi(bijections.phi_inverse(s, check=False), check=False)
        == bijections.phi_inverse(s, check=False)
    ]
    return _seq("fibonacci", n + 1), set_score(fixed, _rs(n, "231", "213")), Provenance.RECURRENCE


def _gamma_involution(n: int) -> Outcome:
    def ok(s: Permutation) -> bool:
        image = bijections.gamma(s)
        return bijections.gamma(image) == s and bijections.gamma(inverse(s)) == inverse(image)

    total = factorial(n)
    return total, agreements(all_orders(range(1, n + 1)), ok), Provenance.DERIVED


def _gamma_drs132(n: int) -> Outcome:
    images = [bijections.gamma(s) for s in _drs(n, "132")]
    return _seq("secondary", n), bijection_score(images, _drs(n, "213")), Provenance.RECURRENCE


def _drs132_213_statistics(n: int) -> Outcome:
    left = statistic_histogram(_drs(n, "132"))
    right = statistic_histogram(_drs(n, "213"))
    total = len(_drs(n, "132"))
    return total, histogram_score(left, right, total), Provenance.DERIVED


def _gamma_42513(n: int) -> Outcome:
    members = _drs(n)
    observed = agreements(
        members,
        lambda s: is_double_simsun(bijections.gamma(s))
        or contains_pattern(bijections.gamma(s), PATTERN_42513),
    )
    return len(members), observed, Provenance.DERIVED


def _rho_bijection(n: int) -> Outcome:
    parts = bijections.compositions(n)
    images = [bijections.rho(c) for c in parts]
    score = injection_score(
        images, lambda s: is_simsun(s) and not contains_pattern(s, (3, 1, 2))
    )
    if score > 0:
        misses = sum(1 for c, s in zip(parts, images) if bijections.rho_inverse(s, check=False) != c)
        score = -misses if misses else score
    return _seq("pow2", n), score, Provenance.RECURRENCE


def _varrho_inverse_of_rho(n: int) -> Outcome:
    parts = bijections.compositions(n)

    def ok(c) -> bool:
        image = bijections.varrho(c)
        return (
            image == inverse(bijections.rho(c))
            and is_double_simsun(image)
            and not contains_pattern(image, (2, 3, 1))
            and bijections.varrho_inverse(image, check=False) == c
        )

    return len(parts), agreements(parts, ok), Provenance.DERIVED


def _binomial_descents(perms: Iterable[Permutation], n: int) -> int:
    observed: Dict[int, int] = {}
    for s in perms:
        k = len(descents(s))
        observed[k] = observed.get(k, 0) + 1
    expected = {k: comb(n, 2 * k) for k in range(n // 2 + 1)}
    return histogram_score(observed, expected, sum(expected.values()))


def _drs_descents_binomial(n: int) -> Outcome:
    return _seq("pow2", n), _binomial_descents(_drs(n, "312"), n), Provenance.RECURRENCE


def _rho_descents_binomial(n: int) -> Outcome:
    images = (bijections.rho(c) for c in bijections.compositions(n))
    return _seq("pow2", n), _binomial_descents(images, n), Provenance.RECURRENCE


def _drs312_231_exchange(n: int) -> Outcome:
    left = statistic_histogram(_drs(n, "312"))
    right = statistic_histogram(_drs(n, "231"))
    swapped = {(n - i - j, j): count for (i, j), count in right.items()}
    total = len(_drs(n, "312"))
    return total, histogram_score(left, swapped, total), Provenance.DERIVED


def _rho_varrho_exchange(n: int) -> Outcome:
    parts = bijections.compositions(n)

    def ok(c) -> bool:
        a, b = statistics(bijections.rho(c)), statistics(bijections.varrho(c))
        return (b.excedances, b.fixed_points) == (n - a.excedances - a.fixed_points, a.fixed_points)

    return len(parts), agreements(parts, ok), Provenance.DERIVED


def _set_claim(left: Callable[[int], Iterable], right: Callable[[int], Iterable]) -> Callable[[int], Outcome]:
    def check(n: int) -> Outcome:
        a = list(left(n))
        return len(set(a)), set_score(a, right(n)), Provenance.DERIVED

    return check


def _drs_inverse_312_231(n: int) -> Outcome:
    flipped = [inverse(s) for s in _drs(n, "312")]
    return _seq("pow2", n), set_score(flipped, _drs(n, "231")), Provenance.RECURRENCE


def _count_claim(name: str, shift: int, members: Callable[[int], Sequence]) -> Callable[[int], Outcome]:
    def check(n: int) -> Outcome:
        return _seq(name, n + shift), len(members(n)), Provenance.RECURRENCE

    return check


def _hierarchy(n: int) -> Outcome:
    chain = [set(_drs(n, "132", "213")), set(_drs(n, "213")), set(_rs(n, "213")), set(_rs(n))]
    holds = sum(1 for small, big in zip(chain, chain[1:]) if small <= big)
    return len(chain) - 1, holds, Provenance.DERIVED


def _rs123_growth(n: int) -> Outcome:
    images = [bijections.extend_rs123(s) for s in _rs(n, "123")]
    return 6, bijection_score(images, _rs(n + 1, "123")), Provenance.PUBLISHED


def _drs123_growth(n: int) -> Outcome:
    images = [bijections.extend_rs123(s) for s in _drs(n, "123")]
    return 2, bijection_score(images, _drs(n + 1, "123")), Provenance.PUBLISHED


def _zeta_image(n: int) -> Outcome:
    parts = bijections.zeta_compositions(n)
    images = [bijections.zeta(c) for c in parts]
    score = bijection_score(images, _drs(n, "132", "213"))
    if score > 0:
        misses = sum(1 for c, s in zip(parts, images) if bijections.zeta_inverse(s) != c)
        score = -misses if misses else score
    return _seq("fibonacci", n + 1), score, Provenance.RECURRENCE


def _alternating_euler(n: int) -> Outcome:
    observed = sum(1 for s in all_orders(range(1, n + 1)) if is_alternating(s))
    return _seq("euler", n), observed, Provenance.RECURRENCE


def _r_paths(n: int) -> Outcome:
    built = [motzkin.r_from_composition(c) for c in bijections.compositions(n) if all(p >= 2 for p in c)]
    return _seq("fibonacci", n - 1), set_score(built, motzkin.r_paths(n)), Provenance.RECURRENCE


def _q_from_r(n: int) -> Outcome:
    images = [motzkin.q_from_r(p) for p in motzkin.r_paths(n + 2)]
    return _seq("fibonacci", n + 1), bijection_score(images, motzkin.q_paths(n)), Provenance.RECURRENCE


def _dd_free_secondary(n: int) -> Outcome:
    return _seq("secondary", n), len(motzkin.dd_free_paths(n)), Provenance.RECURRENCE


def _w_fibonacci(n: int) -> Outcome:
    return _seq("fibonacci", n + 1), len(motzkin.w_paths(n)), Provenance.RECURRENCE


def _sequence_formulations(n: int) -> Outcome:
    agree = sum(
        1 for name in sequences.SEQUENCES
        if sequences.SEQUENCES[name](n)[n] == sequences.ALTERNATES[name](n)[n]
    )
    return len(sequences.SEQUENCES), agree, Provenance.DERIVED


def _inversions_area(n: int) -> Outcome:
    members = _rs(n, "231")
    observed = agreements(
        members,
        lambda s: statistics(s).inversions
        == motzkin.area(bijections.rs231_to_motzkin(s, check=False)),
    )
    return len(members), observed, Provenance.COMPUTED


CLAIMS: Dict[str, Claim] = {
    claim.id: claim
    for claim in [
        Claim("rs-total", "|RS_n| = E_{n+1}", _rs_total),
        Claim("rs-filter", "insertion-generated RS_n equals the filter of S_n", _rs_filter),
        Claim("drs-total", "|DRS_n| = 1, 2, 5, 15, 52, 204, 892, 4297, ...", _drs_total, threaded=True),
        Claim("drs-pruned-eq-naive", "pruned DRS_n search agrees with the S_n filter", _drs_pruned_naive,
              threaded=True),
        Claim("phi-bijection", "phi bijects T_n onto RS_n and phi_inverse undoes it", _phi_bijection, n_min=0),
        Claim("phi-descents-leaves", "descents(phi(T)) + 1 = leaves(T)", _phi_descents_leaves, n_min=0),
        Claim("label-rs213", "phi after rtl labeling bijects X_n onto RS_n(213)", _label_rs213),
        Claim("chi-bijection", "chi bijects X_n onto M_n and chi_inverse undoes it", _chi_bijection,
              n_min=0, n_cap=12),
        Claim("rs213-motzkin", "chi after phi_inverse bijects RS_n(213) onto M_n", _rs213_motzkin),
        Claim("rs213-dd-uncovered-4132",
              "the path of s in RS_n(213) has DD iff some 4132 lies in no 51342", _rs213_uncovered_dd),
        Claim("rs213-inverse-simsun",
              "for s in RS_n(213): inverse simsun iff every 4132 lies in a 51342", _rs213_inverse_simsun),
        Claim("drs213-dd-free", "chi after phi_inverse bijects DRS_n(213) onto DD-free paths", _drs213_dd_free),
        Claim("drs132-213-q", "chi after phi_inverse bijects DRS_n(132,213) onto Q_n", _drs132_213_q),
        Claim("rs231-213-w", "chi after phi_inverse bijects RS_n(231,213) onto W_n", _rs231_213_w),
        Claim("rs231-to-rs213", "phi psi phi_inverse bijects RS_n(231) onto RS_n(213)", _rs231_to_rs213),
        Claim("rs231-to-motzkin", "chi psi phi_inverse bijects RS_n(231) onto M_n", _rs231_to_motzkin),
        Claim("psi-roundtrip", "psi lands in rtl-increasing trees and psi_inverse undoes it", _psi_roundtrip,
              n_min=0),
        Claim("psi-inverse-roundtrip", "psi_inverse lands in F_n and psi undoes it", _psi_inverse_roundtrip,
              n_min=0),
        Claim("psi-fixed-points", "psi fixes phi_inverse(s) exactly for s in RS_n(231,213)", _psi_fixed_points),
        Claim("gamma-involution", "gamma is an involution commuting with inversion", _gamma_involution,
              n_min=0),
        Claim("gamma-drs132-drs213", "gamma bijects DRS_n(132) onto DRS_n(213)", _gamma_drs132),
        Claim("drs132-drs213-statistics",
              "DRS_n(132) and DRS_n(213) share the (excedance, fixed point) distribution",
              _drs132_213_statistics),
        Claim("gamma-42513", "s in DRS_n with gamma(s) not double simsun has gamma(s) containing 42513",
              _gamma_42513),
        Claim("rho-bijection", "rho maps compositions injectively into RS_n(312), rho_inverse undoes it",
              _rho_bijection, n_cap=14),
        Claim("varrho-inverse-of-rho", "varrho(C) is the inverse of rho(C) and lies in DRS_n(231)",
              _varrho_inverse_of_rho, n_cap=14),
        Claim("drs-descents-binomial", "DRS_n(312) with k descents number C(n, 2k)", _drs_descents_binomial),
        Claim("rho-descents-binomial", "rho(C) with k descents number C(n, 2k)", _rho_descents_binomial,
              n_cap=14),
        Claim("drs312-231-exchange", "(i, j) in DRS_n(312) matches (n-i-j, j) in DRS_n(231)",
              _drs312_231_exchange),
        Claim("rho-varrho-exchange", "rho(C) has (i, j) iff varrho(C) has (n-i-j, j)", _rho_varrho_exchange,
              n_cap=14),
        Claim("drs312-eq-rs312", "DRS_n(312) = RS_n(312)", _set_claim(lambda n: _drs(n, "312"), lambda n: _rs(n, "312"))),
        Claim("drs321-eq-rs321", "DRS_n(321) = RS_n(321)", _set_claim(lambda n: _drs(n, "321"), lambda n: _rs(n, "321"))),
        Claim("drs132-eq-rs132", "DRS_n(132) = RS_n(132)", _set_claim(lambda n: _drs(n, "132"), lambda n: _rs(n, "132"))),
        Claim("drs-inverse-312-231", "inversion maps DRS_n(312) onto DRS_n(231)", _drs_inverse_312_231),
        Claim("drs312-231-fibonacci", "|DRS_n(312,231)| = F_{n+1}",
              _count_claim("fibonacci", 1, lambda n: _drs(n, "312", "231"))),
        Claim("drs132-213-fibonacci", "|DRS_n(132,213)| = F_{n+1}",
              _count_claim("fibonacci", 1, lambda n: _drs(n, "132", "213"))),
        Claim("rs231-213-fibonacci", "|RS_n(231,213)| = F_{n+1}",
              _count_claim("fibonacci", 1, lambda n: _rs(n, "231", "213"))),
        Claim("hierarchy", "DRS_n(132,213) in DRS_n(213) in RS_n(213) in RS_n", _hierarchy),
        Claim("rs123-growth", "extend_rs123 bijects RS_n(123) onto RS_n+1(123)", _rs123_growth, n_min=4),
        Claim("drs123-growth", "extend_rs123 bijects DRS_n(123) onto DRS_n+1(123)", _drs123_growth, n_min=6),
        Claim("zeta-image", "zeta bijects admissible compositions onto DRS_n(132,213)", _zeta_image),
        Claim("alternating-euler", "down-up alternating permutations number E_n", _alternating_euler),
        Claim("r-paths", "R_n is built from compositions with parts >= 2, |R_n| = F_{n-1}", _r_paths,
              n_min=2, n_cap=14),
        Claim("q-from-r", "q_from_r bijects R_{n+2} onto Q_n", _q_from_r, n_min=0, n_cap=12),
        Claim("dd-free-secondary", "DD-free paths number S_n", _dd_free_secondary, n_min=0, n_cap=14),
        Claim("w-fibonacci", "|W_n| = F_{n+1}", _w_fibonacci, n_cap=14),
        Claim("sequence-formulations", "every reference sequence matches its second formulation",
              _sequence_formulations, n_min=0, n_cap=40),
        Claim("inversions-area", "inversions(s) = area of its rs231-to-motzkin path", _inversions_area,
              exploratory=True),
    ]
}


# ---------- pattern class table ----------

def _table1_expected(column: str, code: str, n: int) -> Tuple[int, Provenance]:
    if code == "123":
        small = RS_123 if column == "rs" else DRS_123
        if n in small:
            return small[n], Provenance.PUBLISHED
        return (6 if column == "rs" else 2), Provenance.PUBLISHED
    formula = {
        "rs": {"132": "secondary", "213": "motzkin", "231": "motzkin", "312": "pow2", "321": "catalan"},
        "drs": {"132": "secondary", "213": "secondary", "231": "pow2", "312": "pow2", "321": "catalan"},
    }[column][code]
    return _seq(formula, n), Provenance.RECURRENCE


def verify_table1(n_max: int) -> List[VerificationReport]:
    """Twelve reports: |RS_n(w)| and |DRS_n(w)| for every w in S_3, n = 1..n_max."""
    _bound("table1", n_max, settings.SIMSUN_NMAX_LIMIT)
    reports = []
    for column in ("rs", "drs"):
        for code in PATTERNS:
            started = time.perf_counter()
            ns = list(range(1, n_max + 1))
            expected, provenance, observed = [], [], []
            for n in ns:
                value, source = _table1_expected(column, code, n)
                expected.append(value)
                provenance.append(source)
                observed.append(len(_rs(n, code) if column == "rs" else _drs(n, code)))
            report = VerificationReport(
                claim=f"table1-{column}-{code}",
                description=f"|{column.upper()}_n({code})|",
                n_values=ns,
                expected=expected,
                observed=observed,
                provenance=provenance,
                millis=(time.perf_counter() - started) * 1000,
            )
            _log(report)
            reports.append(report)
    return reports


# ---------- runners ----------

def _bound(claim_id: str, n_max: int, cap: int) -> None:
    if n_max < 0:
        raise DomainError("n_max must be non-negative", {"n_max": n_max})
    if n_max > cap:
        raise DomainError(
            f"{claim_id} is limited to n <= {cap}",
            {"claim": claim_id, "n_max": n_max, "limit": cap},
        )


def _cap(claim: Claim) -> int:
    return claim.n_cap if claim.n_cap is not None else settings.SIMSUN_NMAX_LIMIT


def _log(report: VerificationReport) -> None:
    span = f"{report.n_values[0]}..{report.n_values[-1]}" if report.n_values else "-"
    logger.info(
        "%s n=%s %s (%.1f ms)",
        report.claim, span, "pass" if report.passed else "FAIL", report.millis,
    )


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownNameError(
            f"unknown claim {claim_id!r}", {"claim": claim_id, "known": sorted(CLAIMS)}
        ) from None


def verify_identity(claim_id: str, n_max: int, workers: Optional[int] = None) -> VerificationReport:
    """Run one claim for n = n_min..n_max; ``workers`` defaults to SIMSUN_WORKERS."""
    claim = get_claim(claim_id)
    _bound(claim_id, n_max, _cap(claim))
    check = claim.check
    if claim.threaded:
        check = partial(check, workers=settings.SIMSUN_WORKERS if workers is None else workers)
    started = time.perf_counter()
    ns, expected, observed, provenance = [], [], [], []
    for n in range(claim.n_min, n_max + 1):
        value, seen, source = check(n)
        logger.debug("%s n=%d expected=%d observed=%d", claim_id, n, value, seen)
        ns.append(n)
        expected.append(value)
        observed.append(seen)
        provenance.append(source)
    report = VerificationReport(
        claim=claim.id,
        description=claim.description,
        n_values=ns,
        expected=expected,
        observed=observed,
        provenance=provenance,
        millis=(time.perf_counter() - started) * 1000,
        exploratory=claim.exploratory,
    )
    _log(report)
    return report


def verify_all(n_max: int, workers: Optional[int] = None) -> List[VerificationReport]:
    """The pattern class table plus every claim, each clipped to its own size limit."""
    reports = verify_table1(min(n_max, settings.SIMSUN_NMAX_LIMIT))
    for claim in CLAIMS.values():
        reports.append(verify_identity(claim.id, min(n_max, _cap(claim)), workers))
    return reports


def run_suite(suite: str, n_max: int, workers: Optional[int] = None) -> List[VerificationReport]:
    """``table1``, ``all`` or a single claim id; ``workers`` overrides SIMSUN_WORKERS for this run only."""
    if suite == "table1":
        return verify_table1(n_max)
    if suite == "all":
        return verify_all(n_max, workers)
    return [verify_identity(suite, n_max, workers)]


def suite_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(report.passed for report in reports if not report.exploratory)


def suite_names() -> List[str]:
    return ["table1", "all", *sorted(CLAIMS)]


# ---------- report files ----------

def reports_frame(reports: Iterable[VerificationReport]) -> pd.DataFrame:
    rows = [row for report in reports for row in report.rows()]
    columns = ["claim", "n", "expected", "observed", "provenance", "pass", "millis", "exploratory"]
    return pd.DataFrame(rows, columns=columns)


def write_reports(reports: List[VerificationReport], out: Optional[str] = None, stem: str = "report") -> Tuple[str, str]:
    """Write ``<stem>.json`` and ``<stem>.tsv``; ``out`` is a directory or a file path
    whose extension is replaced."""
    target = out or settings.SIMSUN_REPORT_DIR
    if os.path.splitext(target)[1]:
        base = os.path.splitext(target)[0]
        os.makedirs(os.path.dirname(base) or ".", exist_ok=True)
    else:
        os.makedirs(target, exist_ok=True)
        base = os.path.join(target, stem)
    json_path, tsv_path = base + ".json", base + ".tsv"
    with open(json_path, "w", encoding="utf-8") as handle:
        json.dump([report.model_dump(mode="json") for report in reports], handle, indent=2)
        handle.write("\n")
    reports_frame(reports).to_csv(tsv_path, sep="\t", index=False)
    logger.info("wrote %s and %s", json_path, tsv_path)
    return json_path, tsv_path
