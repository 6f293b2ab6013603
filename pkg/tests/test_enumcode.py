import itertools

import pytest
from hypothesis import given, strategies as st

from grasscode.enumcode import ExplicitOracle, rank_sequence, total, unrank_sequence
from grasscode.errors import GrasscodeError, OutOfRangeError


def cube(n):
    return ExplicitOracle(itertools.product((0, 1), repeat=n), [2] * n)


def test_binary_cube_rank_is_value():
    o = cube(3)
    assert rank_sequence((1, 0, 1), o) == 5
    assert unrank_sequence(5, o) == (1, 0, 1)
    assert total(o) == 8


def test_weight_one_triples():
    o = ExplicitOracle([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [2, 2, 2])
    assert rank_sequence((0, 1, 0), o) == 1
    assert unrank_sequence(1, o) == (0, 1, 0)


def test_binary_rank_reduces_to_zero_branch_counts():
    """For binary sets the rank is the sum of x_j times the count of the 0-branch."""
    members = [m for m in itertools.product((0, 1), repeat=5) if sum(m) in (2, 3)]
    o = ExplicitOracle(members, [2] * 5)
    for x in members:
        expected = sum(x[j] * o.count(x[:j], 0) for j in range(5))
        assert rank_sequence(x, o) == expected


@given(
    st.lists(st.integers(1, 4), min_size=1, max_size=4).flatmap(
        lambda sizes: st.tuples(
            st.just(sizes),
            st.sets(st.tuples(*(st.integers(0, s - 1) for s in sizes)), min_size=1),
        )
    )
)
def test_bijective_and_monotone(sample):
    sizes, members = sample
    o = ExplicitOracle(members, sizes)
    ordered = sorted(members)
    assert total(o) == len(ordered)
    for i, x in enumerate(ordered):
        assert rank_sequence(x, o) == i
        assert unrank_sequence(i, o) == x


def test_non_member_and_bad_symbol():
    o = ExplicitOracle([(0, 1), (1, 0)], [2, 2])
    with pytest.raises(GrasscodeError):
        rank_sequence((1, 1), o)
    with pytest.raises(GrasscodeError):
        rank_sequence((2, 0), o)
    with pytest.raises(GrasscodeError):
        rank_sequence((0,), o)


def test_unrank_out_of_range():
    o = cube(2)
    with pytest.raises(OutOfRangeError):
        unrank_sequence(4, o)
    with pytest.raises(OutOfRangeError):
        unrank_sequence(-1, o)
