import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DomainError
from sample_trees import PHI_EXAMPLE, PHI_INVERSE_EXAMPLE, SWITCH_END, SWITCH_START
from services import bijections, enumeration, motzkin
from services.permutations import descents, inverse, is_double_simsun, is_simsun, statistics
from services.trees import (
    enumerate_ordered_trees,
    leaves,
    leftmost_path,
    parse_increasing_tree,
    preorder_nodes,
    rtl_preorder_label,
)


def compositions_of(max_n):
    return st.lists(st.integers(min_value=1, max_value=4), max_size=max_n).filter(
        lambda parts: sum(parts) <= 12
    )


class TestPhi:
    def test_worked_examples(self):
        assert bijections.phi(parse_increasing_tree(PHI_EXAMPLE)) == (3, 8, 4, 6, 1, 9, 5, 7, 2)
        assert bijections.phi_inverse((5, 3, 4, 1, 8, 6, 7, 2)).serialize() == PHI_INVERSE_EXAMPLE
        assert bijections.phi_inverse((5, 1, 3, 2, 4, 8, 6, 7)).serialize() == SWITCH_START

    def test_empty_and_single(self):
        assert bijections.phi(parse_increasing_tree("0")) == ()
        assert bijections.phi_inverse(()).serialize() == "0"
        assert bijections.phi_inverse((1,)).serialize() == "0(,1)"

    def test_rejects_non_simsun(self):
        with pytest.raises(DomainError) as info:
            bijections.phi_inverse((2, 4, 3, 5, 1))
        assert info.value.detail == {"k": 4, "triple": [4, 3, 1]}

    @pytest.mark.parametrize("n", range(0, 7))
    def test_round_trip_on_rs(self, n):
        for sigma in enumeration.simsun_permutations(n):
            tree = bijections.phi_inverse(sigma)
            assert bijections.phi(tree) == sigma
            assert len(descents(sigma)) + 1 == len(leaves(tree))


class TestChi:
    def test_worked_example(self):
        assert bijections.chi(parse_increasing_tree(SWITCH_END)) == "UUDLDULD"

    @pytest.mark.parametrize("n", range(0, 9))
    def test_inverse(self, n):
        for tree in enumerate_ordered_trees(n):
            assert bijections.chi_inverse(bijections.chi(tree)) == tree
        for path in motzkin.enumerate_motzkin(n):
            assert bijections.chi(bijections.chi_inverse(path)) == path


class TestPsi:
    def test_switches(self):
        start = parse_increasing_tree(SWITCH_START)
        end = bijections.psi(start)
        assert end.serialize() == SWITCH_END
        assert start.serialize() == SWITCH_START
        assert bijections.psi_inverse(end) == start

    def test_composites(self):
        sigma = (5, 1, 3, 2, 4, 8, 6, 7)
        assert bijections.rs231_to_motzkin(sigma) == "UUDLDULD"
        assert motzkin.area("UUDLDULD") == statistics(sigma).inversions
        assert bijections.rs231_to_rs213(sigma) == (8, 5, 6, 7, 1, 3, 4, 2)

    def test_domain_checks(self):
        with pytest.raises(DomainError):
            bijections.psi(bijections.phi_inverse((2, 3, 1)))
        with pytest.raises(DomainError):
            bijections.psi_inverse(parse_increasing_tree(PHI_EXAMPLE))
        with pytest.raises(DomainError):
            bijections.rs231_to_motzkin((2, 3, 1))

    @pytest.mark.parametrize("n", range(0, 7))
    def test_round_trip_on_rs231(self, n):
        for sigma in enumeration.rs(n, (2, 3, 1)):
            tree = bijections.phi_inverse(sigma)
            assert bijections.psi_inverse(bijections.psi(tree)) == tree


class TestRs213:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_motzkin_round_trip(self, n):
        members = enumeration.rs(n, (2, 1, 3))
        images = [bijections.rs213_to_motzkin(sigma) for sigma in members]
        assert sorted(images) == sorted(motzkin.enumerate_motzkin(n))
        for sigma, path in zip(members, images):
            assert bijections.motzkin_to_rs213(path) == sigma

    def test_labeled_ordered_trees_land_in_rs213(self):
        for tree in enumerate_ordered_trees(5):
            sigma = bijections.phi(rtl_preorder_label(tree))
            assert is_simsun(sigma)


class TestPermutationMaps:
    def test_gamma(self):
        assert bijections.gamma((2, 3, 1)) == (2, 3, 1)
        assert bijections.gamma(()) == ()

    @given(st.integers(min_value=0, max_value=9).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)))
    def test_gamma_is_an_involution(self, sigma):
        assert bijections.gamma(bijections.gamma(sigma)) == sigma
        assert bijections.gamma(inverse(sigma)) == inverse(bijections.gamma(sigma))

    def test_rho_worked_example(self):
        sigma = bijections.rho((3, 2, 1, 3))
        assert sigma == (2, 3, 1, 5, 4, 6, 8, 9, 7)
        assert statistics(sigma).excedances == 5
        assert statistics(sigma).fixed_points == 1
        assert bijections.rho_inverse(sigma) == (3, 2, 1, 3)
        assert bijections.varrho((3, 2, 1, 3)) == (3, 1, 2, 5, 4, 6, 9, 7, 8)

    @settings(max_examples=60)
    @given(compositions_of(8))
    def test_rho_and_varrho_invert(self, parts):
        parts = tuple(parts)
        sigma = bijections.rho(parts)
        assert bijections.rho_inverse(sigma) == parts
        assert bijections.varrho(parts) == inverse(sigma)
        assert bijections.varrho_inverse(bijections.varrho(parts)) == parts
        assert is_double_simsun(bijections.varrho(parts))

    def test_rho_inverse_rejects(self):
        with pytest.raises(DomainError):
            bijections.rho_inverse((3, 1, 2))
        with pytest.raises(DomainError):
            bijections.rho_inverse((1, 1))

    def test_zeta(self):
        assert bijections.zeta((1, 3, 2, 3)) == (9, 6, 7, 8, 4, 5, 1, 2, 3)
        assert bijections.zeta_inverse((9, 6, 7, 8, 4, 5, 1, 2, 3)) == (1, 3, 2, 3)
        images = {bijections.zeta(parts) for parts in bijections.zeta_compositions(3)}
        assert images == {(1, 2, 3), (3, 1, 2), (2, 3, 1)}
        with pytest.raises(DomainError):
            bijections.zeta((2, 1, 2))
        with pytest.raises(DomainError):
            bijections.zeta_inverse((2, 1, 3))

    def test_compositions(self):
        assert bijections.compositions(0) == [()]
        assert bijections.compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
        assert len(bijections.compositions(10)) == 512
        with pytest.raises(DomainError):
            bijections.validate_composition((2, 0))
        with pytest.raises(DomainError):
            bijections.validate_composition((2, 2), n=5)

    def test_extend_rs123(self):
        rs4 = {(3, 4, 1, 2), (4, 2, 3, 1), (4, 1, 3, 2), (3, 1, 4, 2), (2, 4, 1, 3), (2, 1, 4, 3)}
        assert set(enumeration.rs(4, (1, 2, 3))) == rs4
        assert {bijections.extend_rs123(sigma) for sigma in rs4} == set(enumeration.rs(5, (1, 2, 3)))
        with pytest.raises(DomainError):
            bijections.extend_rs123((1,))


@pytest.mark.parametrize("n", range(0, 9))
def test_q_trees_branch_only_on_leftmost_path(n):
    for path in motzkin.q_paths(n):
        tree = rtl_preorder_label(bijections.chi_inverse(path))
        branching = {
            node.label for node in preorder_nodes(tree.root) if node.left is not None and node.right is not None
        }
        assert branching <= set(leftmost_path(tree)), path
