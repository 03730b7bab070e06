# services/registry.py
"""Named maps and predicates over the text formats, shared by the CLI and the API."""
import re
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from core.config import settings
from core.errors import DomainError, UnknownNameError
from services import bijections, enumeration, motzkin, sequences, trees
from services.permutations import (
    contains_pattern,
    first_uncovered_4132,
    inverse,
    is_alternating,
    pattern_occurrences,
    simsun_witness,
)
from utils.formats import (
    format_composition,
    format_pattern,
    format_permutation,
    format_tree,
    parse_composition,
    parse_path,
    parse_permutation,
    parse_tree,
)

Detail = Dict[str, Any]


@dataclass(frozen=True)
class MapSpec:
    name: str
    source: str
    target: str
    parse: Callable[[str], Any]
    apply: Callable[[Any], Any]
    render: Callable[[Any], str]
    description: str = ""

    def __call__(self, text: str) -> str:
        return self.render(self.apply(self.parse(text)))


@dataclass(frozen=True)
class PredicateSpec:
    name: str
    source: str
    parse: Callable[[str], Any]
    test: Callable[[Any], Tuple[bool, Detail]]
    description: str = ""

    def __call__(self, text: str) -> Tuple[bool, Detail]:
        return self.test(self.parse(text))


def _identity(path: str) -> str:
    return path


MAPS: Dict[str, MapSpec] = {
    spec.name: spec
    for spec in [
        MapSpec("phi", "tree", "permutation", trees.parse_increasing_tree, bijections.phi,
                format_permutation, "word of an increasing 1-2 tree"),
        MapSpec("phi-inv", "permutation", "tree", parse_permutation, bijections.phi_inverse,
                format_tree, "increasing 1-2 tree of a simsun permutation"),
        MapSpec("chi", "tree", "path", parse_tree, bijections.chi, _identity,
                "Motzkin path of a 1-2 tree"),
        MapSpec("chi-inv", "path", "tree", parse_path, bijections.chi_inverse, format_tree,
                "ordered 1-2 tree of a Motzkin path"),
        MapSpec("label", "tree", "tree", trees.parse_ordered_tree, trees.rtl_preorder_label,
                format_tree, "label an ordered tree in right-to-left preorder"),
        MapSpec("psi", "tree", "tree", trees.parse_increasing_tree, bijections.psi, format_tree,
                "subtree switching onto an rtl-increasing tree"),
        MapSpec("psi-inv", "tree", "tree", trees.parse_increasing_tree, bijections.psi_inverse,
                format_tree, "inverse subtree switching"),
        MapSpec("gamma", "permutation", "permutation", parse_permutation, bijections.gamma,
                format_permutation, "the involution w_i = n+1-inv(s)_{n+1-i}"),
        MapSpec("rho", "composition", "permutation", parse_composition, bijections.rho,
                format_permutation, "composition to RS_n(312)"),
        MapSpec("rho-inv", "permutation", "composition", parse_permutation,
                bijections.rho_inverse, format_composition, "RS_n(312) to composition"),
        MapSpec("varrho", "composition", "permutation", parse_composition, bijections.varrho,
                format_permutation, "composition to DRS_n(231)"),
        MapSpec("varrho-inv", "permutation", "composition", parse_permutation,
                bijections.varrho_inverse, format_composition, "DRS_n(231) to composition"),
        MapSpec("zeta", "composition", "permutation", parse_composition, bijections.zeta,
                format_permutation, "composition to DRS_n(132,213)"),
        MapSpec("zeta-inv", "permutation", "composition", parse_permutation,
                bijections.zeta_inverse, format_composition, "DRS_n(132,213) to composition"),
        MapSpec("extend-rs123", "permutation", "permutation", parse_permutation,
                bijections.extend_rs123, format_permutation, "RS_n(123) to RS_n+1(123)"),
        MapSpec("q-from-r", "path", "path", parse_path, motzkin.q_from_r, _identity,
                "R_n+2 to Q_n"),
        MapSpec("rs213-to-motzkin", "permutation", "path", parse_permutation,
                bijections.rs213_to_motzkin, _identity, "chi after phi-inv"),
        MapSpec("rs231-to-motzkin", "permutation", "path", parse_permutation,
                bijections.rs231_to_motzkin, _identity, "chi after psi after phi-inv"),
        MapSpec("motzkin-to-rs213", "path", "permutation", parse_path,
                bijections.motzkin_to_rs213, format_permutation, "phi after label after chi-inv"),
        MapSpec("rs231-to-rs213", "permutation", "permutation", parse_permutation,
                bijections.rs231_to_rs213, format_permutation, "phi after psi after phi-inv"),
    ]
}


# ---------- predicates ----------

def _simsun(sigma) -> Tuple[bool, Detail]:
    witness = simsun_witness(sigma)
    if witness is None:
        return True, {}
    k, triple = witness
    return False, {"k": k, "triple": list(triple)}


def _double_simsun(sigma) -> Tuple[bool, Detail]:
    ok, detail = _simsun(sigma)
    if not ok:
        return False, {"side": "permutation", **detail}
    ok, detail = _simsun(inverse(sigma))
    if not ok:
        return False, {"side": "inverse", **detail}
    return True, {}


def _every_4132_in_51342(sigma) -> Tuple[bool, Detail]:
    occurrence = first_uncovered_4132(sigma)
    if occurrence is None:
        return True, {}
    return False, {"occurrence": list(occurrence)}


def _flag(test: Callable[[Any], bool]) -> Callable[[Any], Tuple[bool, Detail]]:
    return lambda value: (test(value), {})


PREDICATES: Dict[str, PredicateSpec] = {
    spec.name: spec
    for spec in [
        PredicateSpec("simsun", "permutation", parse_permutation, _simsun),
        PredicateSpec("double-simsun", "permutation", parse_permutation, _double_simsun),
        PredicateSpec("alternating", "permutation", parse_permutation, _flag(is_alternating)),
        PredicateSpec("every-4132-in-51342", "permutation", parse_permutation,
                      _every_4132_in_51342),
        PredicateSpec("motzkin", "path", str.strip, _flag(motzkin.is_motzkin)),
        PredicateSpec("dd-free", "path", parse_path, _flag(motzkin.is_dd_free)),
        PredicateSpec("r-path", "path", parse_path, _flag(motzkin.in_R)),
        PredicateSpec("q-path", "path", parse_path, _flag(motzkin.in_Q)),
        PredicateSpec("w-path", "path", parse_path, _flag(motzkin.in_W)),
        PredicateSpec("rtl-increasing", "tree", trees.parse_increasing_tree,
                      _flag(trees.is_rtl_increasing)),
        PredicateSpec("left-children-leaves", "tree", parse_tree,
                      _flag(trees.all_left_children_leaves)),
    ]
}

_CONTAINS = re.compile(r"^(contains|avoids)-(\d+)$")


def _pattern_predicate(name: str) -> Optional[PredicateSpec]:
    match = _CONTAINS.match(name)
    if match is None:
        return None
    verb, pattern = match.group(1), parse_permutation(match.group(2))

    def test(sigma) -> Tuple[bool, Detail]:
        found = contains_pattern(sigma, pattern)
        detail: Detail = {"pattern": format_pattern(pattern)}
        if found:
            detail["occurrence"] = list(pattern_occurrences(sigma, pattern)[0])
        return (found if verb == "contains" else not found), detail

    return PredicateSpec(name, "permutation", parse_permutation, test)


def get_map(name: str) -> MapSpec:
    try:
        return MAPS[name]
    except KeyError:
        raise UnknownNameError(f"unknown map {name!r}", {"name": name, "known": sorted(MAPS)}) from None


def get_predicate(name: str) -> PredicateSpec:
    spec = PREDICATES.get(name) or _pattern_predicate(name)
    if spec is None:
        raise UnknownNameError(
            f"unknown predicate {name!r}",
            {"name": name, "known": sorted(PREDICATES) + ["contains-<pattern>", "avoids-<pattern>"]},
        )
    return spec


def map_names() -> List[str]:
    return sorted(MAPS)


def predicate_names() -> List[str]:
    return sorted(PREDICATES)


# ---------- sequences ----------

SEQUENCE_NAMES = (*sequences.SEQUENCES, "rs", "drs")


def sequence_values(name: str, n_max: int, workers: int = 1) -> Tuple[int, List[int]]:
    """(offset, values); the reference sequences start at 0, rs and drs at n = 1."""
    if name == "rs":
        limit = settings.SIMSUN_NMAX_LIMIT
        if n_max > limit:
            raise DomainError(f"rs is limited to n <= {limit}", {"nmax": n_max, "limit": limit})
        return 1, [len(enumeration.simsun_permutations(n)) for n in range(1, n_max + 1)]
    if name == "drs":
        limit = settings.SIMSUN_NMAX_LIMIT + 2
        if n_max > limit:
            raise DomainError(f"drs is limited to n <= {limit}", {"nmax": n_max, "limit": limit})
        return 1, enumeration.double_simsun_sequence(n_max, workers) if n_max >= 1 else []
    return 0, list(sequences.table(name, n_max))
