from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauerlab.combinatorics import Partition, conjugate, partitions_of, semistandard_tableaux, standard_tableaux
from brauerlab.symgroup import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    conjugacy_class_reps,
    h_element,
    jm_element,
    murphy_element,
    n_lambda,
    n_lambda_printed,
    tilde_subgroup,
    w_lambda,
    x_element,
    y_element,
    young_subgroup,
)

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda k: st.permutations(list(range(1, k + 1))).map(Permutation))


def same_degree_pair():
    return st.integers(min_value=1, max_value=6).flatmap(
        lambda k: st.tuples(*(st.permutations(list(range(1, k + 1))).map(Permutation) for _ in range(3))))


def test_right_action_convention():
    u = Permutation.from_cycles([(1, 2)], 3)
    v = Permutation.from_cycles([(2, 3)], 3)
    # (1)(uv) = ((1)u)v = (2)v = 3
    assert (u * v)(1) == 3


@given(same_degree_pair())
def test_group_axioms(triple):
    a, b, c = triple
    e = Permutation.identity(a.degree)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert a * a.inverse() == e


@given(perms)
def test_reduced_word_reconstructs(w):
    word = w.reduced_word()
    assert len(word) == w.length()
    acc = Permutation.identity(w.degree)
    for j in word:
        acc = acc * Permutation.simple(j, w.degree)
    assert acc == w


@given(perms)
def test_sign_matches_length_parity(w):
    assert w.sign() == (-1) ** w.length()
    assert w.sign() == (-1) ** sum(len(c) - 1 for c in w.cycles())


def test_parse_formats():
    assert Permutation.parse("3 1 2 4") == Permutation([3, 1, 2, 4])
    assert Permutation.parse("(1 3 2)", 4) == Permutation([3, 1, 2, 4])
    with pytest.raises(ValueError):
        Permutation.parse("1 1 2")
    with pytest.raises(ValueError):
        Permutation.simple(4, 4)


def test_group_algebra_multiplication_matches_pointwise():
    k = 3
    a = GroupAlgebraElement.from_sum(k, all_permutations(k))
    assert a * a == a * 6
    s = GroupAlgebraElement.of(Permutation.simple(1, k))
    assert (s * s) == GroupAlgebraElement.one(k)
    with pytest.raises(ValueError):
        s * GroupAlgebraElement.one(4)


def test_young_subgroup_sizes():
    for mu in [(2, 2), (3, 1), (2, 2, 2), (4, 2)]:
        assert len(young_subgroup(mu)) == __import__("math").prod(factorial(p) for p in mu)


def test_x_and_y_absorb_generators():
    mu = (2, 2)
    x, y = x_element(mu), y_element(mu)
    for w in young_subgroup(mu):
        assert x * w == x
        assert y * w == y * w.sign()


def test_jm_elements_commute():
    k = 4
    ls = [jm_element(a, k) for a in range(1, k + 1)]
    assert ls[0].is_zero()
    for a in ls:
        for b in ls:
            assert a * b == b * a


def test_jm_sum_is_central():
    # L_1 + ... + L_k is the class sum of transpositions
    k = 4
    total = GroupAlgebraElement.zero(k)
    for a in range(1, k + 1):
        total = total + jm_element(a, k)
    for g in all_permutations(k):
        assert GroupAlgebraElement.of(g) * total == total * g


def test_tilde_subgroup_orders():
    # the printed product formula disagrees; the order is the product of k! over part multiplicities
    assert len(tilde_subgroup((2, 2))) == 2
    assert len(tilde_subgroup((4, 2))) == 1
    assert len(tilde_subgroup((4,))) == 1
    assert len(tilde_subgroup((2, 2, 2))) == 6
    assert len(tilde_subgroup((4, 4))) == 2


@pytest.mark.parametrize("lam", [(2, 2), (4,), (4, 2), (2, 2, 2), (6,), (4, 4), (6, 2), (4, 2, 2), (2, 2, 2, 2)])
def test_n_lambda_is_tilde_order(lam):
    assert n_lambda(lam) == len(tilde_subgroup(lam))


def test_n_lambda_printed_formula_values():
    assert n_lambda_printed((4,)) == 24
    assert n_lambda_printed((4, 2)) == 4
    assert n_lambda_printed((2, 2)) == 2


def test_h_element_times_tilde_sum_is_y():
    for lam in [(2, 2), (4, 2), (2, 2, 2)]:
        tilde = GroupAlgebraElement.from_sum(sum(lam), tilde_subgroup(lam))
        # every element of the tilde subgroup is even, so the signed sum is the plain sum
        assert tilde * h_element(lam) == y_element(conjugate(lam))


def test_w_lambda_degree():
    assert w_lambda((4, 2)).degree == 6


def test_conjugacy_classes_identity_first():
    reps = conjugacy_class_reps(4)
    assert reps[0][0] == Partition((1, 1, 1, 1))
    assert len(reps) == 5
    assert all(w.cycle_type() == rho for rho, w in reps)


def test_murphy_elements_span_permutation_module():
    # x_{S,t} over S in T_0(mu, lam), t in Std(mu), mu dominating lam: k!/|S_lam| elements
    lam = Partition((2, 2))
    k = lam.size
    count = 0
    for mu in partitions_of(k):
        from brauerlab.combinatorics import dominates

        if not dominates(mu, lam):
            continue
        for S in semistandard_tableaux(mu, lam):
            for t in standard_tableaux(mu):
                el = murphy_element(S, t)
                assert not el.is_zero()
                count += 1
    assert count == factorial(k) // 4
