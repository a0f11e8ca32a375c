"""Exact linear algebra: field axioms, echelon canonicity, rank/nullity."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from liecert.linalg import (
    Mat, QQi, Subspace, conjugate, is_zero_vec, mat_exp_nilpotent,
    mat_inverse, mat_mul, mat_vec, nullspace, qqi, rank, rat, rat_str,
    rref, solve_right, R0, R1,
)

rationals = st.builds(rat, st.integers(-50, 50),
                      st.integers(1, 12))
gaussians = st.tuples(rationals, rationals).map(lambda t: qqi(*t))


def rand_matrix(rng, n, m, density=0.7):
    return [[rat(rng.randint(-5, 5)) if rng.random() < density else R0
             for _ in range(m)] for _ in range(n)]


# -- scalars ----------------------------------------------------------------

def test_rat_parsing():
    assert rat(3, 6) == rat("1/2") == rat(1) / 2
    assert rat("-7") == -7
    assert rat_str(rat(10, 4)) == "5/2"


@given(gaussians, gaussians, gaussians)
def test_qqi_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + (-x) == qqi(0)


@given(gaussians)
def test_qqi_inverse_and_conjugate(x):
    assert x.conj().conj() == x
    if x != qqi(0):
        assert x * (qqi(1) / x) == qqi(1)
        assert (x * x.conj()).im == R0


@given(gaussians, gaussians)
def test_qqi_conjugate_multiplicative(x, y):
    assert (x * y).conj() == x.conj() * y.conj()


# -- row reduction ----------------------------------------------------------

@settings(max_examples=40)
@given(st.integers(0, 2 ** 30))
def test_rref_idempotent_and_rank(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 6), rng.randint(1, 6)
    rows = rand_matrix(rng, n, m)
    red, piv = rref(rows)
    red2, piv2 = rref(red)
    assert [list(r) for r in red2] == [list(r) for r in red]
    assert piv2 == piv
    assert rank(rows) == len(piv)
    for r, p in zip(red, piv):
        assert r[p] == R1
        assert all(other[p] == R0 for other in red if other is not r)


@settings(max_examples=40)
@given(st.integers(0, 2 ** 30))
def test_rank_nullity(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 6), rng.randint(1, 7)
    rows = rand_matrix(rng, n, m)
    kern = nullspace(rows, m, R1, R0)
    assert rank(rows) + len(kern) == m
    for v in kern:
        assert is_zero_vec(mat_vec(rows, v, R0))


@settings(max_examples=40)
@given(st.integers(0, 2 ** 30))
def test_solve_right_consistent_systems(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 5), rng.randint(1, 5)
    rows = rand_matrix(rng, n, m)
    x0 = [rat(rng.randint(-4, 4)) for _ in range(m)]
    b = mat_vec(rows, x0, R0)
    sol = solve_right(rows, b, m, R1, R0)
    assert sol is not None
    assert mat_vec(rows, sol, R0) == b


# -- subspaces --------------------------------------------------------------

@settings(max_examples=30)
@given(st.integers(0, 2 ** 30))
def test_subspace_canonical_equality(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 6)
    vecs = rand_matrix(rng, rng.randint(1, 4), m)
    U = Subspace.from_vectors(vecs, m)
    shuffled = list(vecs)
    rng.shuffle(shuffled)
    scaled = [[rat(3) * x for x in v] for v in shuffled]
    assert Subspace.from_vectors(scaled, m) == U
    for v in vecs:
        assert U.contains(v)
        coeffs = U.coords_of(v)
        assert coeffs is not None and len(coeffs) == U.dim


@settings(max_examples=30)
@given(st.integers(0, 2 ** 30))
def test_subspace_dimension_formula(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 6)
    U = Subspace.from_vectors(rand_matrix(rng, rng.randint(1, 4), m), m)
    V = Subspace.from_vectors(rand_matrix(rng, rng.randint(1, 4), m), m)
    S, I = U.add(V), U.intersect(V)
    assert S.dim + I.dim == U.dim + V.dim
    assert S.contains_subspace(U) and S.contains_subspace(V)
    assert U.contains_subspace(I) and V.contains_subspace(I)


def test_subspace_field_mismatch_raises():
    U = Subspace.from_vectors([[R1, R0]], 2, "Q")
    V = Subspace.from_vectors([[qqi(1), qqi(0)]], 2, "Qi")
    try:
        U.add(V)
    except ValueError:
        pass
    else:
        raise AssertionError("mixing Q and Qi subspaces must raise")


# -- dense matrices ---------------------------------------------------------

def test_mat_exp_nilpotent_inverts():
    n = Mat([[0, 2, 5], [0, 0, -1], [0, 0, 0]])
    g = mat_exp_nilpotent(n)
    g_inv = mat_exp_nilpotent(n.scale(rat(-1)))
    assert g @ g_inv == Mat.eye(3)
    assert mat_inverse(g) == g_inv


def test_conjugation_preserves_brackets():
    rng = random.Random(11)
    x = Mat(rand_matrix(rng, 3, 3, density=1.0))
    y = Mat(rand_matrix(rng, 3, 3, density=1.0))
    n = Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    g = mat_exp_nilpotent(n)
    g_inv = mat_inverse(g)
    lhs = conjugate(g, x.bracket(y), g_inv)
    rhs = conjugate(g, x, g_inv).bracket(conjugate(g, y, g_inv))
    assert lhs == rhs


def test_mat_mul_matches_mat_class():
    a = [[rat(1), rat(2)], [rat(0), rat(1)]]
    b = [[rat(3)], [rat(-1)]]
    assert mat_mul(a, b, R0) == [[rat(1)], [rat(-1)]]
