import random
from fractions import Fraction
from math import factorial, prod

import pytest
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from brauerlab.combinatorics import (
    Partition,
    Tableau,
    conjugate,
    dominates,
    hook_dimension,
    standard_tableaux,
    two_partitions,
)
from brauerlab.diagrams import LinearCombination, enumerate_all, star, star_element
from brauerlab.symgroup import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    conjugacy_class_reps,
    h_element,
    n_lambda,
    n_lambda_printed,
    w_lambda,
    x_element,
    young_subgroup,
)
from brauerlab.xbasis import (
    basis_matrix,
    character_check,
    closure_check,
    coefficient_content,
    cor26_check,
    dimension_check,
    distinguished_diagram,
    eigen_vector,
    even_partition,
    expected_term_count,
    filtration_module,
    full_basis,
    jm_eigen_check,
    lemma27_check,
    nonvanishing_check,
    pi_lambda,
    prop210_check,
    quotient_character,
    remark213_check,
    star_orbit,
    verify_basis,
    x_coordinates,
    x_lambda,
    x_lambda_combination,
    x_lambda_direct,
    x_lambda_t,
)

from oracles import character, double_factorial, smith_invariants

ALL_SMALL = [lam for n in range(1, 5) for lam in two_partitions(n)]


def ids(lams):
    return [str(lam) for lam in lams]


# ---------------------------------------------------------------------------
# X_lam itself


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_block_product_matches_direct_listing(lam):
    x = x_lambda(lam)
    assert all(c == 1 for c in x.terms.values())
    assert sorted(x.terms) == x_lambda_direct(lam)
    assert len(x) == expected_term_count(lam) == prod(double_factorial(p - 1) for p in lam)


def test_odd_part_rejected():
    with pytest.raises(ValueError):
        even_partition((3, 1))
    with pytest.raises(ValueError):
        x_lambda_combination((3, 3))


@pytest.mark.parametrize("lam", [lam for n in range(1, 4) for lam in two_partitions(n)], ids=str)
def test_young_subgroup_fixes_x_lambda(lam):
    x = x_lambda_combination(lam)
    for w in young_subgroup(lam):
        assert star_element(x, w) == x
    assert cor26_check(lam)["pass"]


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_cor26(lam):
    assert cor26_check(lam)["pass"]


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_stabilizer_of_x_lambda_is_wreath_product(lam):
    # the orbit of X_lam under S_2n has size (2n)! / prod (p_i! over parts) / (mult!)
    if lam.size > 8:
        pytest.skip("n <= 4 only")
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    stab = prod(factorial(p) for p in lam) * prod(factorial(k) for k in mult.values())
    assert len(star_orbit(x_lambda_combination(lam))) == factorial(lam.size) // stab


def test_x_lambda_t_validation():
    lam = Partition((4, 2))
    with pytest.raises(ValueError):
        x_lambda_t(lam, Tableau.from_rows([[1, 2], [3, 4], [5, 6]]))
    with pytest.raises(ValueError):
        x_lambda_t(lam, Tableau.from_rows([[2, 1, 3, 4], [5, 6]]))


def test_label():
    b = full_basis(2)[0]
    assert b.label.startswith("X[4;")


# ---------------------------------------------------------------------------
# the basis


@pytest.mark.parametrize("n", range(1, 5))
def test_basis_size(n):
    assert len(full_basis(n)) == double_factorial(2 * n - 1)
    assert sum(hook_dimension(lam) for lam in two_partitions(n)) == double_factorial(2 * n - 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_basis_matrix_unimodular_by_sympy(n):
    rows = basis_matrix(n).to_lists()
    k = len(rows)
    assert abs(DomainMatrix(rows, (k, k), ZZ).det()) == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_verify_basis(n):
    res = verify_basis(n)
    assert res["pass"], res
    assert res["detail"]["smith_all_one"]


@pytest.mark.parametrize("n", range(1, 4))
def test_smith_of_basis_matrix_by_sympy(n):
    assert set(smith_invariants(basis_matrix(n).to_lists())) == {1}


def test_basis_order():
    basis = full_basis(3)
    lams = [b.lam for b in basis]
    assert lams == sorted(lams, reverse=True)
    for lam in two_partitions(3):
        assert [b.tableau for b in basis if b.lam == lam] == list(standard_tableaux(lam))


@pytest.mark.parametrize("n", range(1, 5))
def test_coordinates_reconstruct_every_diagram(n):
    coords = x_coordinates(n)
    rng = random.Random(n)
    diagrams = enumerate_all(n)
    sample = diagrams if len(diagrams) <= 15 else rng.sample(diagrams, 15)
    for d in sample:
        v = LinearCombination.of(d)
        c = coords.coordinates(v)
        assert all(Fraction(x).denominator == 1 for x in c.values())
        rebuilt = LinearCombination(n)
        for j, x in c.items():
            rebuilt = rebuilt + coords.basis[j].value.scale(x)
        assert rebuilt == v
        for j in range(len(coords.basis)):
            assert coords.coordinate(v, j) == c.get(j, 0)


# ---------------------------------------------------------------------------
# filtration


@pytest.mark.parametrize("n", range(1, 5))
def test_filtration_dimensions(n):
    assert dimension_check(n)["pass"]
    for lam in two_partitions(n):
        want = sum(hook_dimension(nu) for nu in two_partitions(n) if dominates(nu, lam))
        assert filtration_module(lam).dimension == want
        assert filtration_module(lam, strict=True).dimension == want - hook_dimension(lam)


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_closure_under_star_action(lam):
    res = closure_check(lam)
    assert res["pass"], res


@pytest.mark.parametrize("n", range(1, 5))
def test_quotient_characters_match_alternant_oracle(n):
    for lam in two_partitions(n):
        for rho, rep in conjugacy_class_reps(2 * n):
            assert quotient_character(lam, rep) == character(tuple(lam), tuple(rho)), (lam, rho)
    assert character_check(n)["pass"]


@pytest.mark.parametrize("lam", [lam for n in range(1, 3) for lam in two_partitions(n)], ids=str)
def test_quotient_character_is_class_function(lam):
    k = lam.size
    for w in all_permutations(k):
        for s in (Permutation.simple(i, k) for i in range(1, k)):
            conj = s.inverse() * w * s
            assert quotient_character(lam, w) == quotient_character(lam, conj)


# ---------------------------------------------------------------------------
# the map x_lam w -> X_lam * w


@pytest.mark.parametrize("lam", [(2,), (4,), (2, 2), (4, 2), (2, 2, 2)], ids=str)
def test_pi_lambda_on_right_multiples(lam):
    lam = Partition(lam)
    rng = random.Random(17)
    perms = list(all_permutations(lam.size))
    for w in rng.sample(perms, min(10, len(perms))):
        a = x_element(lam) * GroupAlgebraElement.of(w)
        assert pi_lambda(a, lam) == star_element(x_lambda_combination(lam), w)
    assert pi_lambda(x_element(lam), lam) == x_lambda_combination(lam)


def test_pi_lambda_rejects_non_invariant():
    lam = Partition((2, 2))
    with pytest.raises(ValueError):
        pi_lambda(GroupAlgebraElement.of(Permutation.identity(4)), lam)
    with pytest.raises(ValueError):
        pi_lambda(x_element(Partition((2,))), lam)


@pytest.mark.parametrize("lam", [lam for n in range(1, 4) for lam in two_partitions(n)], ids=str)
def test_prop210(lam):
    res = prop210_check(lam)
    assert res["pass"], res


@pytest.mark.slow
@pytest.mark.parametrize("lam", list(two_partitions(4)), ids=str)
def test_prop210_n4(lam):
    res = prop210_check(lam)
    assert res["pass"], res


# ---------------------------------------------------------------------------
# y/h identity and the Jucys-Murphy eigenvector


def n_lambda_oracle(lam):
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return prod(factorial(k) for k in mult.values())


def distinguished_coefficient_oracle(lam):
    """Count X_lam diagrams sent to d by each w_lam * w, weighted by h_lam."""
    lam = Partition(lam)
    d = distinguished_diagram(lam)
    members = set(x_lambda_direct(lam))
    wl = w_lambda(lam)
    total = 0
    for w, c in h_element(lam).terms.items():
        if star(d, (wl * w).inverse()) in members:
            total += c
    return total


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_y_h_identity_with_tilde_order(lam):
    assert n_lambda(lam) == n_lambda_oracle(lam)
    res = lemma27_check(lam)
    assert res["detail"]["identity"], res


def test_printed_multiplier_breaks_identity():
    # the alternative normalisation gives the wrong scalar already for (4)
    assert n_lambda_printed((4,)) != n_lambda((4,))
    assert not lemma27_check((4,), multiplier=n_lambda_printed((4,)))["detail"]["identity"]


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_distinguished_coefficient_against_oracle(lam):
    res = lemma27_check(lam)
    assert res["detail"]["distinguished_coeff"] == distinguished_coefficient_oracle(lam)
    assert eigen_vector(lam).terms.get(distinguished_diagram(lam), 0) == distinguished_coefficient_oracle(lam)


@pytest.mark.parametrize("lam", ALL_SMALL, ids=ids(ALL_SMALL))
def test_eigenvector_has_coprime_coefficients(lam):
    v = eigen_vector(lam)
    assert not v.is_zero()
    assert coefficient_content(v) == 1
    assert nonvanishing_check(lam)["pass"]


def test_distinguished_diagram_shape():
    d = distinguished_diagram((4, 2))
    assert d.n == 3
    assert len(d.pairs()) == 3


@pytest.mark.parametrize("lam", [lam for n in range(1, 4) for lam in two_partitions(n)], ids=str)
def test_jm_eigenvalues(lam):
    for a in range(1, lam.size + 1):
        res = jm_eigen_check(lam, a)
        assert res["pass"], res
    with pytest.raises(ValueError):
        jm_eigen_check(lam, lam.size + 1)


# ---------------------------------------------------------------------------
# the (6,2) / (4,4) lattice example


def test_remark213_values():
    res = remark213_check()
    assert res["pass"]
    assert res["detail"] == {"orbit_size": 35, "target_terms": 15,
                             "integer_member": False, "rational_member": True}


def test_remark213_against_smith_oracle():
    order = {d: i for i, d in enumerate(enumerate_all(4))}
    lattice = [v.coordinates(order) for v in star_orbit(x_lambda_combination((4, 4)))]
    target = x_lambda_combination((6, 2)).coordinates(order)
    before, after = smith_invariants(lattice), smith_invariants(lattice + [target])
    # same rank (rational member) but a different lattice (not an integer member)
    assert len(before) == len(after)
    assert prod(before) != prod(after)
