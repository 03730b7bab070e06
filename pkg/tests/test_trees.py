import pytest

from sample_trees import PHI_EXAMPLE, SWITCH_END, SWITCH_MIDDLE, SWITCH_START
from core.errors import DomainError, ParseError
from services import sequences
from services.trees import (
    all_left_children_leaves,
    enumerate_increasing_trees,
    enumerate_ordered_trees,
    from_parents,
    inorder,
    is_canonical,
    is_rtl_increasing,
    leaves,
    left_child_vertices,
    leftmost_path,
    parse_increasing_tree,
    parse_ordered_tree,
    rightmost_path,
    rtl_preorder,
    rtl_preorder_label,
    shape,
)


def test_parse_serialize_canonical_text():
    tree = parse_increasing_tree(PHI_EXAMPLE)
    assert tree.serialize() == PHI_EXAMPLE
    assert tree.n == 9
    assert is_canonical(tree)


def test_parse_puts_larger_child_left_and_lone_child_right():
    swapped = parse_increasing_tree("0(1(2,5(7,9)),3(4(6,8),))")
    assert swapped.serialize() == PHI_EXAMPLE
    assert parse_increasing_tree("0(1,)").serialize() == "0(,1)"


@pytest.mark.parametrize(
    "text, error",
    [
        ("0(1", ParseError),
        ("0()", ParseError),
        ("0(1,2)x", ParseError),
        ("*(,*)", ParseError),
        ("1(,2)", DomainError),
        ("0(2(,1),)", DomainError),
        ("0(1,3)", DomainError),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse_increasing_tree(text)


def test_ordered_tree_normalizes_lone_child():
    assert parse_ordered_tree("*(*,)").serialize() == "*(,*)"
    with pytest.raises(ParseError):
        parse_ordered_tree("0(,1)")


def test_traversals():
    tree = parse_increasing_tree(PHI_EXAMPLE)
    assert inorder(tree) == [3, 8, 4, 6, 0, 9, 5, 7, 1, 2]
    assert rightmost_path(tree) == [0, 1, 2]
    assert leftmost_path(tree) == [0, 3]
    assert leaves(tree) == [2, 6, 7, 8, 9]
    assert left_child_vertices(tree) == [3, 8, 5, 9]
    assert rtl_preorder(tree) == [0, 1, 2, 5, 7, 9, 3, 4, 6, 8]


def test_from_parents_matches_parse():
    assert from_parents([0, 1, 0]) == parse_increasing_tree("0(3,1(,2))")


def test_rtl_labeling():
    tree = parse_increasing_tree(SWITCH_END)
    assert is_rtl_increasing(tree)
    assert rtl_preorder_label(shape(tree)) == tree
    assert not is_rtl_increasing(parse_increasing_tree(SWITCH_MIDDLE))


def test_left_children_leaves():
    assert all_left_children_leaves(parse_increasing_tree(SWITCH_START))
    assert not all_left_children_leaves(parse_increasing_tree(SWITCH_END))
    assert all_left_children_leaves(parse_ordered_tree("*(*,*(,*))"))


@pytest.mark.parametrize("n", range(0, 8))
def test_increasing_trees_counted_by_euler(n):
    found = list(enumerate_increasing_trees(n))
    assert len(found) == sequences.reference("euler", n + 1)
    assert len(set(found)) == len(found)
    assert all(is_canonical(tree) for tree in found)


@pytest.mark.parametrize("n", range(0, 9))
def test_ordered_trees_counted_by_motzkin(n):
    found = list(enumerate_ordered_trees(n))
    assert len(found) == sequences.reference("motzkin", n)
    assert len(set(found)) == len(found)


def test_negative_sizes_rejected():
    with pytest.raises(DomainError):
        next(enumerate_increasing_trees(-1))
    with pytest.raises(DomainError):
        next(enumerate_ordered_trees(-1))


def test_one_tree_of_size_three_breaks_rtl_order():
    found = list(enumerate_increasing_trees(3))
    assert [tree.serialize() for tree in found if not is_rtl_increasing(tree)] == ["0(2,1(,3))"]
    assert found[0].serialize() == "0(2,1(,3))"
    assert all(is_rtl_increasing(tree) for tree in found[1:])


@pytest.mark.parametrize("n", range(0, 9))
def test_rtl_increasing_trees_are_labeled_ordered_trees(n):
    rtl = {tree for tree in enumerate_increasing_trees(n) if is_rtl_increasing(tree)}
    assert rtl == {rtl_preorder_label(x) for x in enumerate_ordered_trees(n)}


@pytest.mark.parametrize("n", range(0, 11))
def test_shape_undoes_rtl_labeling(n):
    for x in enumerate_ordered_trees(n):
        assert shape(rtl_preorder_label(x)) == x
