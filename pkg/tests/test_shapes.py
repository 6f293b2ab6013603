import itertools

import pytest
from hypothesis import given, strategies as st

from grasscode.errors import GrasscodeError, OutOfRangeError
from grasscode.linalg import FerrersDiagram
from grasscode.shapes import (
    PartitionCache,
    all_diagrams,
    alphas,
    compare_ferrers,
    ferrers_key,
    ferrers_rank,
    ferrers_unrank,
    gaussian,
    gaussian_product,
    gaussian_table,
    n_m_count,
    p_box,
)
from oracles import box_diagrams, ferrers_sort_key


def brute_p(m, k, eta):
    return sum(1 for cols in box_diagrams(k, eta) if sum(cols) == m)


def test_p_box_unrestricted_partitions_of_21():
    assert p_box(21, 21, 21) == 792


def test_p_box_small_values():
    assert p_box(7, 3, 3) == 2
    assert p_box(0, 5, 0) == 1
    assert p_box(0, 0, 0) == 1
    assert p_box(-1, 3, 3) == 0
    assert p_box(10, 3, 3) == 0
    assert p_box(4, 1, 3) == 0
    assert p_box(3, 1, 3) == 1


@pytest.mark.parametrize("k,eta", [(k, e) for k in range(0, 6) for e in range(0, 6)])
def test_p_box_against_enumeration(k, eta):
    for m in range(-1, k * eta + 2):
        assert p_box(m, k, eta) == brute_p(m, k, eta)


def test_symmetry_and_conjugation():
    for k, eta in itertools.product(range(7), repeat=2):
        for m in range(k * eta + 1):
            assert p_box(m, k, eta) == p_box(k * eta - m, k, eta)
            assert p_box(m, k, eta) == p_box(m, eta, k)


def test_cache_is_transparent():
    cache = PartitionCache()
    first = [p_box(m, 6, 7, cache) for m in range(43)]
    assert len(cache) > 0
    fresh = PartitionCache()
    assert first == [p_box(m, 6, 7, fresh) for m in range(43)]
    cache.clear()
    assert len(cache) == 0
    assert first == [p_box(m, 6, 7, cache) for m in range(43)]


def test_negative_box_rejected():
    with pytest.raises(GrasscodeError):
        p_box(0, -1, 2)


def test_gaussian_values():
    assert gaussian(2, 1, 2) == 3
    assert gaussian(6, 3, 2) == 1395
    assert [gaussian(5, 3, 2), gaussian(4, 3, 2), gaussian(3, 2, 2)] == [155, 15, 7]
    assert gaussian(3, 4, 2) == 0
    assert gaussian(3, -1, 2) == 0


def test_partition_sum_equals_product_formula():
    for q in (2, 3, 4):
        for n in range(13):
            for k in range(n + 1):
                s = sum(a * q ** ell for ell, a in enumerate(alphas(n, k)))
                assert s == gaussian_product(n, k, q) == gaussian(n, k, q)
                assert gaussian(n, k, q) == gaussian(n, n - k, q)


def test_gaussian_is_exact_beyond_64_bits():
    g = gaussian(30, 15, 2)
    assert g > 2 ** 64
    assert g == gaussian_product(30, 15, 2)


def test_gaussian_table_matches():
    t = gaussian_table(9, 4, 3)
    for a in range(10):
        for b in range(5):
            assert t[a][b] == gaussian(a, b, 3)


def test_n_m_examples():
    assert n_m_count((), 7, 3, 3) == p_box(7, 3, 3)
    assert n_m_count((3,), 7, 3, 3) == 2
    assert n_m_count((3, 3), 7, 3, 3) == 1
    with pytest.raises(GrasscodeError):
        n_m_count((2, 3, 1), 5, 3, 3)
    with pytest.raises(GrasscodeError):
        n_m_count((4,), 5, 3, 3)


def test_column_sum_consistency():
    for k, eta in itertools.product(range(1, 5), repeat=2):
        for m in range(k * eta + 1):
            assert sum(n_m_count((a,), m, k, eta) for a in range(k + 1)) == p_box(m, k, eta)


def test_ferrers_rank_examples():
    assert ferrers_rank(FerrersDiagram(3, 3, (1, 3, 3))) == 0
    assert ferrers_rank(FerrersDiagram(3, 3, (2, 2, 3))) == 1
    assert ferrers_rank(FerrersDiagram(3, 4, (3, 3, 3, 3))) == 0
    assert ferrers_unrank(7, 0, 3, 3).cols == (1, 3, 3)
    assert ferrers_unrank(12, 0, 3, 4).cols == (3, 3, 3, 3)


@pytest.mark.parametrize("k,eta", [(4, 4), (3, 4), (2, 5), (1, 3), (3, 0)])
def test_rank_is_the_sorted_position(k, eta):
    for m in range(k * eta + 1):
        same = sorted((c for c in box_diagrams(k, eta) if sum(c) == m), key=ferrers_sort_key)
        for i, cols in enumerate(same):
            f = FerrersDiagram(k, eta, cols)
            assert ferrers_rank(f) == i
            assert ferrers_unrank(m, i, k, eta) == f


def test_unrank_out_of_range():
    with pytest.raises(OutOfRangeError):
        ferrers_unrank(7, 2, 3, 3)
    with pytest.raises(OutOfRangeError):
        ferrers_unrank(7, -1, 3, 3)


def test_diagram_order_example():
    f_tilde = FerrersDiagram(3, 3, (1, 3, 3))
    f = FerrersDiagram(3, 3, (2, 2, 3))
    f_hat = FerrersDiagram(3, 3, (1, 2, 3))
    assert compare_ferrers(f_tilde, f) == -1
    assert compare_ferrers(f, f_hat) == -1
    assert compare_ferrers(f_hat, f_tilde) == 1
    assert compare_ferrers(f, f) == 0


def test_full_box_is_minimum_and_sort_matches():
    diagrams = list(all_diagrams(3, 3))
    full = FerrersDiagram(3, 3, (3, 3, 3))
    assert all(compare_ferrers(full, g) <= 0 for g in diagrams)
    by_key = sorted(diagrams, key=ferrers_key)
    by_oracle = sorted(diagrams, key=lambda g: (-g.size, ferrers_sort_key(g.cols)))
    assert by_key == by_oracle
    for a, b in zip(by_key, by_key[1:]):
        assert compare_ferrers(a, b) == -1


def test_compare_box_mismatch():
    with pytest.raises(GrasscodeError):
        compare_ferrers(FerrersDiagram(2, 2, (1, 1)), FerrersDiagram(2, 3, (1, 1, 1)))


def test_all_diagrams_count():
    for k, eta in itertools.product(range(5), repeat=2):
        assert len(list(all_diagrams(k, eta))) == sum(alphas(k + eta, k))
        assert {d.cols for d in all_diagrams(k, eta, 3)} == {c for c in box_diagrams(k, eta) if sum(c) == 3}


@given(st.integers(1, 9), st.integers(1, 9), st.data())
def test_rank_unrank_round_trip_random(k, eta, data):
    m = data.draw(st.integers(0, k * eta))
    i = data.draw(st.integers(0, p_box(m, k, eta) - 1))
    f = ferrers_unrank(m, i, k, eta)
    assert f.size == m
    assert ferrers_rank(f) == i
