from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acyclic_multipartite import counting
from acyclic_multipartite.core import PartitionSpec
from acyclic_multipartite.oracle import oracle_smirnov
from acyclic_multipartite.verify import compositions


def set_partitions(items):
    """All set partitions of ``items``, by brute-force recursion."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def test_small_combinatorics():
    assert counting.multinomial([2, 2]) == 6
    assert counting.multinomial([2, 2, 1]) == 30 == len(set(permutations("aabbc")))
    assert counting.binomial(5, 0) == 1
    assert counting.binomial(3, 5) == 0 and counting.binomial(3, -1) == 0
    assert counting.factorial(20) == 2432902008176640000


def test_stirling2_examples():
    assert counting.stirling2(3, 2) == 3
    assert counting.stirling2(4, 2) == 7
    assert counting.stirling2(0, 0) == 1
    assert all(counting.stirling2(n, 0) == 0 for n in range(1, 6))


@pytest.mark.parametrize("n", range(8))
def test_stirling2_matches_set_partitions(n):
    blocks = [len(p) for p in set_partitions(list(range(n)))]
    for k in range(n + 1):
        assert counting.stirling2(n, k) == blocks.count(k)


def test_count_A():
    assert counting.count_A([2, 2]) == 6
    assert counting.count_A([2, 3]) == 10
    assert counting.count_A([0, 0, 7]) == 1
    # 64-bit overflow territory
    assert counting.count_A([7, 7, 7]) == 399072960
    assert counting.count_A([10] * 4) > 2**64


def test_count_A_recursive():
    assert counting.count_A_recursive([2, 2]) == 6
    assert counting.count_A_recursive([1, 1]) == 2
    assert counting.count_A_recursive([2, -1, 3]) == 0
    assert counting.count_A_recursive([0, 0]) == 1


@pytest.mark.parametrize("sizes", list(compositions(12, 4)))
def test_count_A_closed_vs_recursion(sizes):
    assert counting.count_A(sizes) == counting.count_A_recursive(sizes)


def test_count_B():
    assert counting.count_B([2, 2]) == 3
    assert counting.count_B([2, 3]) == 10
    assert counting.count_B([2, 2, 1]) == 15


def test_count_C():
    assert counting.count_C([2, 2]) == 2
    assert counting.count_C([1, 1]) == 1
    assert counting.count_C([2, 3]) == 6
    with pytest.raises(ValueError):
        counting.count_C([1])


def test_smirnov_examples():
    assert counting.smirnov_X((1, 1)) == 2
    assert counting.smirnov_X((2, 2)) == 2
    assert counting.smirnov_X((1, 1, 1)) == 6
    for k in range(4):
        assert counting.smirnov_X((k + 2, k)) == 0
    assert counting.smirnov_X_closed((2, 2)) == 2
    assert counting.smirnov_X_closed((2, 3)) == 1
    assert counting.smirnov_X_closed((2, 2, 1)) == counting.smirnov_X((2, 2, 1)) == oracle_smirnov((2, 2, 1))


@pytest.mark.parametrize("k", range(1, 7))
def test_paper_identities(k):
    assert counting.smirnov_X((k, k)) == 2
    assert counting.smirnov_X_closed((k, k)) == 2
    assert counting.smirnov_X((k, k + 1)) == 1
    assert counting.smirnov_X_closed((k, k + 1)) == 1
    assert counting.smirnov_X((k + 2, k)) == 0
    assert counting.smirnov_X_closed((k + 2, k)) == 0


def test_smirnov_conventions():
    assert counting.smirnov_X(()) == counting.smirnov_X_closed(()) == 0
    assert counting.smirnov_X((1,)) == counting.smirnov_X_closed((1,)) == 1
    assert counting.smirnov_X((3,)) == counting.smirnov_X_closed((3,)) == 0
    assert counting.smirnov_X((2, 0)) == 0
    assert counting.smirnov_X((1, -1)) == 0


def test_smirnov_first_letter_recursion():
    # X^(j)(k) = sum_i X^(i)(k - e_j) - X^(j)(k - e_j) + [k == e_j]
    for ks in product(range(4), repeat=3):
        for j in range(3):
            down = list(ks)
            down[j] -= 1
            rhs = sum(counting.smirnov_X_first(down, i) for i in range(3))
            rhs -= counting.smirnov_X_first(down, j)
            rhs += 1 if sorted(ks) == [0, 0, 1] and ks[j] == 1 else 0
            assert counting.smirnov_X_first(ks, j) == rhs


@pytest.mark.parametrize("ks", [ks for ks in product(range(5), repeat=3) if sum(ks) <= 9])
def test_smirnov_support(ks):
    assert (counting.smirnov_X(ks) > 0) == counting.in_smirnov_support(ks)


def test_d_values():
    for k in range(1, 7):
        assert counting.d_value(k, 1) == (-1) ** (k - 1)
        assert counting.d_value(k, k) == 1
        assert counting.d_value(k, 0) == 0
    assert counting.d_value(2, 3) == 0


def coefficient_of_power(k, r):
    """Coefficient of z^k in (z - z^2 + ... - (-z)^k)^r by direct polynomial multiplication."""
    base = [0] + [(-1) ** (m - 1) for m in range(1, k + 1)]
    poly = [1]
    for _ in range(r):
        out = [0] * min(len(poly) + len(base) - 1, k + 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(base):
                if i + j <= k:
                    out[i + j] += a * b
        poly = out
    return poly[k] if k < len(poly) else 0


def test_d_value_4_2_from_expansion():
    # (z - z^2 + z^3 - z^4)^2 has z^4 coefficient 1 + 1 + 1
    assert coefficient_of_power(4, 2) == 3
    assert counting.d_value(4, 2) == 3


@pytest.mark.parametrize("k", range(13))
def test_d_value_is_power_coefficient(k):
    for r in range(1, k + 1):
        assert counting.d_value(k, r) == coefficient_of_power(k, r)
        assert counting.d_value(k, r) == (-1) ** (k + r) * counting.binomial(k - 1, k - r)


def test_poly_bernoulli():
    assert counting.poly_bernoulli(2, 2) == 14
    assert counting.poly_bernoulli(1, 1) == 2
    assert counting.poly_bernoulli(2, 3) == 46
    assert counting.poly_bernoulli(0, 4) == 1


@pytest.mark.parametrize("n1, n2", [(a, b) for a in range(6) for b in range(6)])
def test_labelled_bipartite_is_poly_bernoulli(n1, n2):
    assert counting.count_labelled([n1, n2]) == counting.poly_bernoulli(n1, n2)


def test_count_labelled():
    assert counting.count_labelled([2, 2]) == 14
    assert counting.count_labelled([1, 1, 1, 1]) == 24
    assert counting.count_labelled([1] * 6) == 720
    assert counting.count_labelled([4]) == 1


def test_chromatic_number():
    assert counting.chromatic_number([2, 3]) == 2
    assert counting.chromatic_number([2, 2, 1]) == 3
    assert counting.chromatic_number([1, 1, 1, 1]) == 4


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.randoms(use_true_random=False))
def test_counts_symmetric(sizes, rnd):
    shuffled = list(sizes)
    rnd.shuffle(shuffled)
    for f in (counting.count_A, counting.count_B, counting.count_labelled, counting.smirnov_X):
        assert f(sizes) == f(shuffled)
    if sum(sizes) >= 2:
        assert counting.count_C(sizes) == counting.count_C(shuffled)
