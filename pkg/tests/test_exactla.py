import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerlab.exactla import (
    IntegerMatrix,
    RationalMatrix,
    echelon,
    hermite_form,
    hermite_solve,
    nullspace,
    primitive,
    rank,
    smith_form,
    solve_in_span,
    sparse_rank_mod_p,
)

from oracles import rational_rank, smith_invariants


def int_matrices(max_rows=8, max_cols=8, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)))


def low_rank(draw_rows, draw_cols, k, rng):
    left = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(draw_rows)]
    right = [[rng.randint(-3, 3) for _ in range(draw_cols)] for _ in range(k)]
    return [[sum(left[i][t] * right[t][j] for t in range(k)) for j in range(draw_cols)] for i in range(draw_rows)]


def unimodular(k, rng, steps=12):
    u = [[int(i == j) for j in range(k)] for i in range(k)]
    for _ in range(steps):
        i, j = rng.sample(range(k), 2) if k > 1 else (0, 0)
        if i == j:
            u[i] = [-x for x in u[i]]
            continue
        q = rng.randint(-2, 2)
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]
    return u


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


# ---------------------------------------------------------------------------
# rank, nullspace, span


@settings(max_examples=80)
@given(int_matrices())
def test_rank_matches_sympy(rows):
    assert rank(rows) == rational_rank(rows)
    assert IntegerMatrix(rows).rank() == rational_rank(rows)


def test_rank_of_constructed_low_rank():
    rng = random.Random(7)
    for k in range(0, 6):
        rows = low_rank(12, 10, k, rng)
        assert rank(rows) == rational_rank(rows) <= k


@settings(max_examples=60)
@given(int_matrices())
def test_nullspace_is_kernel_of_right_dimension(rows):
    ns = nullspace(rows)
    width = len(rows[0])
    assert len(ns) == width - rational_rank(rows)
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
        assert v == primitive(v)
    if ns:
        assert sympy.Matrix(ns).rank() == len(ns)


def test_nullspace_small_example():
    # the row (1, 1, 1) paired with the (2, 1) shaped data
    m = RationalMatrix.from_dense([[1, -1, 0], [0, 1, -1]])
    assert m.nullspace() == [[1, 1, 1]]
    assert RationalMatrix.from_dense([[1, 2], [2, 4]]).left_nullspace() == [[2, -1]]


@settings(max_examples=60)
@given(int_matrices(6, 6), st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_solve_in_span_recombines(rows, coeffs):
    width = len(rows[0])
    target = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(width)]
    sol = solve_in_span(rows, target)
    assert sol is not None
    assert [sum(c * r[j] for c, r in zip(sol, rows)) for j in range(width)] == target


def test_solve_in_span_rejects_outside():
    assert solve_in_span([[1, 0, 0], [0, 1, 0]], [0, 0, 1]) is None
    assert solve_in_span([[2, 0]], [1, 0]) == [Fraction(1, 2)]
    with pytest.raises(ValueError):
        solve_in_span([[1, 0]], [1, 0, 0])


@settings(max_examples=40)
@given(int_matrices(7, 5))
def test_echelon_kernel_is_left_kernel(rows):
    sparse = [{j: v for j, v in enumerate(r) if v} for r in rows]
    ech = echelon(sparse, track=True)
    assert ech.rank == rational_rank(rows)
    assert len(ech.kernel) == len(rows) - ech.rank
    for vec in ech.kernel:
        assert all(sum(c * rows[i][j] for i, c in vec.items()) == 0 for j in range(len(rows[0])))
    for row, tr in zip(ech.rows, ech.transforms):
        rebuilt = {j: sum(c * rows[i][j] for i, c in tr.items()) for j in range(len(rows[0]))}
        assert {j: v for j, v in rebuilt.items() if v} == row
    assert ech.pivots == sorted(set(ech.pivots))


def test_echelon_is_deterministic():
    rng = random.Random(3)
    rows = [{j: rng.randint(-5, 5) for j in range(8) if rng.random() < 0.5} for _ in range(10)]
    a, b = echelon(rows, track=True), echelon([dict(r) for r in rows], track=True)
    assert (a.rows, a.pivots, a.kernel) == (b.rows, b.pivots, b.kernel)


@settings(max_examples=40)
@given(int_matrices(6, 6))
def test_rref_matches_sympy(rows):
    red, pivots = RationalMatrix.from_dense(rows).rref()
    want, want_piv = sympy.Matrix(rows).rref()
    assert pivots == list(want_piv)
    want_rows = [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in want.row(i)]
                 for i in range(len(pivots))]
    assert red.to_dense() == want_rows


def test_inverse():
    m = RationalMatrix.from_dense([[2, 1], [1, 1]])
    assert m @ m.inverse() == RationalMatrix.identity(2)
    with pytest.raises(ValueError):
        RationalMatrix.from_dense([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ValueError):
        RationalMatrix.from_dense([[1, 2, 3]]).inverse()


@settings(max_examples=30)
@given(int_matrices(5, 5))
def test_inverse_random(rows):
    k = min(len(rows), len(rows[0]))
    sq = [r[:k] for r in rows[:k]]
    m = RationalMatrix.from_dense(sq)
    if rational_rank(sq) < k:
        with pytest.raises(ValueError):
            m.inverse()
    else:
        assert m.inverse() @ m == RationalMatrix.identity(k)


# ---------------------------------------------------------------------------
# integer normal forms


@settings(max_examples=60)
@given(int_matrices(6, 6))
def test_smith_matches_sympy(rows):
    got = smith_form(rows)
    assert sorted(got) == smith_invariants(rows)
    assert all(b % a == 0 for a, b in zip(got, got[1:]))


def test_smith_random_up_to_20():
    rng = random.Random(11)
    for _ in range(6):
        r, c = rng.randint(1, 20), rng.randint(1, 20)
        rows = [[rng.randint(-4, 4) if rng.random() < 0.4 else 0 for _ in range(c)] for _ in range(r)]
        got = smith_form(rows)
        assert len(got) == rational_rank(rows)
        assert got == smith_invariants(rows)


def test_smith_examples():
    assert smith_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_form([[0, 0], [0, 0]]) == []
    assert smith_form([[6]]) == [6]


def test_hermite_invariant_under_unimodular_rows():
    rng = random.Random(5)
    for _ in range(20):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        u = unimodular(r, rng)
        assert hermite_form(matmul(u, rows)) == hermite_form(rows)


@settings(max_examples=40)
@given(int_matrices(5, 6))
def test_hermite_shape(rows):
    h = hermite_form(rows).to_lists()
    assert len(h) == rational_rank(rows)
    lead = [next(j for j, v in enumerate(r) if v) for r in h]
    assert lead == sorted(set(lead))
    for k, (r, c) in enumerate(zip(h, lead)):
        assert r[c] > 0
        for above in h[:k]:
            assert 0 <= above[c] < r[c]
    # same lattice: each original row is an integer combination of h
    for r in rows:
        assert hermite_solve(h, r) is not None


def test_hermite_solve():
    basis = [[2, 0], [0, 3]]
    assert hermite_solve(basis, [4, 9]) == [2, 3]
    assert hermite_solve(basis, [1, 0]) is None
    with pytest.raises(ValueError):
        hermite_solve(basis, [1, 0, 0])


@settings(max_examples=40)
@given(int_matrices(5, 5), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_hermite_solve_recombines(rows, coeffs):
    width = len(rows[0])
    target = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(width)]
    sol = hermite_solve(rows, target)
    assert sol is not None
    assert [sum(c * r[j] for c, r in zip(sol, rows)) for j in range(width)] == target


@settings(max_examples=40)
@given(int_matrices(6, 6))
def test_determinant_matches_sympy(rows):
    k = min(len(rows), len(rows[0]))
    sq = [r[:k] for r in rows[:k]]
    assert IntegerMatrix(sq).determinant() == int(sympy.Matrix(sq).det())


def test_unimodular_detection():
    assert IntegerMatrix([[1, 1], [0, 1]]).is_unimodular()
    assert not IntegerMatrix([[2, 0], [0, 1]]).is_unimodular()
    assert not IntegerMatrix([[1, 0, 0]]).is_unimodular()


@settings(max_examples=40)
@given(int_matrices(6, 6), st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p(rows, p):
    want = sympy.Matrix(rows).applyfunc(lambda x: x % p)
    # rank over F_p via sympy's finite-field domain
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.domains import GF

    dm = DomainMatrix.from_Matrix(want).convert_to(GF(p))
    assert IntegerMatrix(rows).rank_mod_p(p) == dm.rank()
    assert sparse_rank_mod_p([{j: v for j, v in enumerate(r) if v} for r in rows], p) == dm.rank()


def test_ragged_rejected():
    with pytest.raises(ValueError):
        IntegerMatrix([[1, 2], [3]])


# ---------------------------------------------------------------------------
# interchange


@settings(max_examples=40)
@given(int_matrices(5, 5), st.integers(1, 6))
def test_coordinate_text_and_json_round_trip(rows, den):
    m = RationalMatrix.from_dense([[Fraction(v, den) for v in r] for r in rows])
    text = m.to_coordinate_text()
    assert text.splitlines()[0] == f"{m.nrows} {m.ncols} {m.nnz()}"
    assert RationalMatrix.from_coordinate_text(text) == m
    assert RationalMatrix.from_json(m.to_json()) == m
    import json

    assert RationalMatrix.from_json(json.dumps(m.to_json())) == m


def test_coordinate_text_is_one_based():
    m = RationalMatrix.from_dense([[0, Fraction(1, 2)]])
    assert m.to_coordinate_text() == "1 2 1\n1 2 1/2\n"


def test_primitive():
    assert primitive([Fraction(-1, 2), Fraction(1, 3), 0]) == [3, -2, 0]
    assert primitive([0, 0]) == [0, 0]
    assert primitive([4, 6]) == [2, 3]


def test_matmul_and_transpose():
    a = RationalMatrix.from_dense([[1, 2], [3, 4]])
    b = RationalMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [4, 3]]
    assert a.transpose().to_dense() == [[1, 3], [2, 4]]
