from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from oracles import frac_det, ihara_bass, poly_mul

from grover_support.graphcore import builtin, cycle, parse_adjlist
from grover_support.walkops import (
    squarefree_part,
    bareiss_det,
    build_grover,
    build_grover_scaled,
    charpoly,
    flip_J,
    hashimoto,
    identity,
    int_power,
    j_matrix,
    matrix_to_csv,
    positive_support,
    support_of_power,
    transpose,
    zeta_poly,
)


# ---------------------------------------------------------------- U


def test_grover_c3_is_permutation():
    u = build_grover(cycle(3))
    assert set(u.flatten()) == {0, 1}
    assert (u.sum(axis=0) == 1).all() and (u.sum(axis=1) == 1).all()
    assert (int_power(u, 3) == identity(6)).all()


def test_grover_k4_entries(k4):
    u = build_grover(k4)
    for a in range(k4.arc_count):
        nz = {b: u[a, b] for b in range(k4.arc_count) if u[a, b] != 0}
        assert len(nz) == 3
        assert nz[a ^ 1] == Fraction(-1, 3)
        assert sorted(v for b, v in nz.items() if b != a ^ 1) == [Fraction(2, 3)] * 2


def test_unitarity_exact(regular_graph):
    u = build_grover(regular_graph)
    assert (u.dot(u.T) == identity(regular_graph.arc_count)).all()


def test_unitarity_irregular(irregular):
    u = build_grover(irregular)
    assert (u.dot(u.T) == identity(irregular.arc_count)).all()


def test_isolated_vertex_rejected():
    g = parse_adjlist("0: 1\n1:\n2:")
    with pytest.raises(ValueError):
        build_grover(g)


def test_scaled_integer_route(regular_graph):
    k = regular_graph.regularity()
    assert (build_grover_scaled(regular_graph) == build_grover(regular_graph) * k).all()


# ---------------------------------------------------------------- supports


def test_support_identity():
    assert (positive_support(identity(6)) == identity(6)).all()


def test_support_of_u_is_hashimoto(regular_graph, irregular):
    for g in (regular_graph, irregular):
        assert (positive_support(build_grover(g)) == hashimoto(g)).all()


def test_sign_partition_disjoint(k4):
    u = build_grover(k4)
    pos, neg = positive_support(u), positive_support(-u)
    assert not (pos * neg).any()


def test_support_of_power_n1(petersen):
    assert (support_of_power(petersen, 1) == positive_support(build_grover(petersen))).all()


def test_scale_invariance(petersen):
    for n in (1, 2, 3):
        rational = positive_support(int_power(build_grover(petersen), n))
        assert (rational == support_of_power(petersen, n)).all()


def test_identity_term_in_square_support(regular_graph, irregular):
    if min(regular_graph.degrees) < 3:
        pytest.skip("needs minimum degree 3")
    for g in (regular_graph, irregular):
        s = support_of_power(g, 1)
        assert (support_of_power(g, 2) == identity(g.arc_count) + s.dot(s)).all()


def test_degree_two_vertices_drop_identity_term():
    # reflection 2/2 - 1 = 0 at degree 2, so U^2 has an empty diagonal on cycles
    g = cycle(5)
    s = support_of_power(g, 1)
    assert (support_of_power(g, 2) == s.dot(s)).all()


def test_su3_petersen(petersen):
    s = support_of_power(petersen, 1)
    assert (support_of_power(petersen, 3) == s.T + int_power(s, 3)).all()


# ---------------------------------------------------------------- J and transpose


def test_j_squared(regular_graph):
    j = j_matrix(regular_graph)
    assert (j.dot(j) == identity(regular_graph.arc_count)).all()


def test_flip_matches_matrix(petersen):
    s = support_of_power(petersen, 1)
    j = j_matrix(petersen)
    assert (flip_J(s, "left") == j.dot(s)).all()
    assert (flip_J(s, "right") == s.dot(j)).all()
    with pytest.raises(ValueError):
        flip_J(s, "up")


def test_transpose_is_j_conjugate(regular_graph):
    s = support_of_power(regular_graph, 1)
    assert (transpose(s) == flip_J(flip_J(s, "left"), "right")).all()


def test_power_zero(petersen):
    s = support_of_power(petersen, 1)
    assert (int_power(s, 0) == identity(30)).all()


# ---------------------------------------------------------------- determinants and zeta


@pytest.mark.parametrize("seed", range(5))
def test_bareiss_matches_fraction_det(seed):
    rng = np.random.default_rng(seed)
    m = rng.integers(-5, 6, size=(7, 7)).tolist()
    assert bareiss_det(m) == frac_det(m)


def test_bareiss_singular():
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    assert bareiss_det([[0, 1], [1, 0]]) == -1


def test_charpoly_matches_sympy(petersen):
    s = support_of_power(petersen, 2)
    x = sympy.symbols("x")
    ref = sympy.Matrix(s.tolist()).charpoly(x).all_coeffs()[::-1]
    assert charpoly(s) == [int(c) for c in ref]


def test_zeta_c3_by_hand():
    # S(U) on C3 is two directed 3-cycles: det(I - uS) = (1 - u^3)^2
    assert zeta_poly(cycle(3)) == [1, 0, 0, -2, 0, 0, 1]


@pytest.mark.parametrize("name", ["K4", "petersen", "heawood"])
def test_zeta_matches_ihara_bass(name):
    g = builtin(name)
    assert zeta_poly(g, 1) == ihara_bass(g)


def test_zeta_constant_term(regular_graph):
    for n in (1, 2):
        assert zeta_poly(regular_graph, n)[0] == 1


def test_matrix_csv():
    m = np.array([[Fraction(1, 2), 0], [-1, Fraction(2, 3)]], dtype=object)
    assert matrix_to_csv(m) == "1/2,0\n-1,2/3\n"


@pytest.mark.parametrize("seed", range(12))
def test_charpoly_random_against_sympy(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 14))
    m = rng.integers(-40, 41, size=(n, n)).astype(object)
    x = sympy.symbols("x")
    ref = sympy.Matrix(m.tolist()).charpoly(x).all_coeffs()[::-1]
    assert charpoly(m) == [int(c) for c in ref]


def test_squarefree_part_matches_sympy():
    x = sympy.Symbol("x")
    rng = random.Random(7)
    cases = [[0, 0, 1], [4, -4, 1], [5], [-3, 6]]
    for _ in range(10):
        factors = [[rng.randint(-4, 4), 1] for _ in range(rng.randint(1, 5))]
        p = [1]
        for f in factors:
            for _ in range(rng.randint(1, 3)):
                p = poly_mul(p, f)
        cases.append([rng.choice([-2, 1, 3]) * c for c in p])
    for p in cases:
        expr = sympy.Poly(sum(c * x**i for i, c in enumerate(p)), x)
        want = sympy.Poly(sympy.sqf_part(expr), x)
        got = squarefree_part(p)
        assert sympy.Poly(sum(c * x**i for i, c in enumerate(got)), x).monic() == want.monic()


def test_squarefree_part_petersen_cube():
    cp = charpoly(support_of_power(builtin("petersen"), 3))
    # x^4 (x-10) (x-2)^10 (x+2)^5 (x^2+4x+12)^5
    want = [0, 1]
    for f in ([-10, 1], [-2, 1], [2, 1], [12, 4, 1]):
        want = poly_mul(want, f)
    assert squarefree_part(cp) == want
