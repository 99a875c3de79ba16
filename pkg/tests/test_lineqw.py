from __future__ import annotations

from fractions import Fraction

import pytest

from grover_support.exact import ExtScalar
from grover_support.lineqw import L, R, Phase, PhaseGrid, coin, evolve, iterate, pattern, phase, zero_fraction_profile


def reference_walk(k: int, n: int) -> dict[int, list[ExtScalar]]:
    """Literal evolution with exact coin matrices: L row moves left, R row moves right."""
    r = k - 1
    zero = ExtScalar(0, 0, r)
    state = {0: [zero, ExtScalar(1, 0, r)]}
    for _ in range(n):
        nxt: dict[int, list[ExtScalar]] = {}
        for x, (pl, pr) in state.items():
            h = coin(k, "nonneg" if x >= 0 else "neg")
            out_l = h[0][0] * pl + h[0][1] * pr
            out_r = h[1][0] * pl + h[1][1] * pr
            nxt.setdefault(x - 1, [zero, zero])[0] += out_l
            nxt.setdefault(x + 1, [zero, zero])[1] += out_r
        state = nxt
    return state


def test_coin_k3():
    h = coin(3, "nonneg")
    d = ExtScalar(0, Fraction(2, 3), 2)
    assert h == [[d, ExtScalar(Fraction(-1, 3), 0, 2)], [ExtScalar(Fraction(1, 3), 0, 2), d]]


def test_coin_k2_is_identity():
    for side in ("nonneg", "neg"):
        h = coin(2, side)
        assert h[0][0] == 1 and h[1][1] == 1 and h[0][1] == 0 and h[1][0] == 0


@pytest.mark.parametrize("k", [2, 3, 4, 7, 20])
@pytest.mark.parametrize("side", ["nonneg", "neg"])
def test_coin_determinant_one(k, side):
    h = coin(k, side)
    assert h[0][0] * h[1][1] - h[0][1] * h[1][0] == 1
    # rows orthonormal
    assert h[0][0] * h[1][0] + h[0][1] * h[1][1] == 0


def test_bad_coin_side():
    with pytest.raises(ValueError):
        coin(3, "left")


@pytest.mark.parametrize("k", [3, 5, 12])
def test_step_one_values(k):
    s = evolve(k, 1)
    d = ExtScalar(0, Fraction(2, k), k - 1)
    assert s.amplitude(1, L) == 0 and s.amplitude(1, R) == d
    assert s.amplitude(-1, L) == Fraction(2, k) - 1 and s.amplitude(-1, R) == 0
    assert s.amplitude(0, L) == 0 and s.amplitude(0, R) == 0


@pytest.mark.parametrize("k", [3, 6, 20])
def test_step_two_origin(k):
    s = evolve(k, 2)
    d = ExtScalar(0, Fraction(2, k), k - 1)
    c = 1 - Fraction(2, k)
    assert s.amplitude(0, L) == -(d * c)
    assert s.amplitude(0, R) == c * c


def test_step_zero():
    s = evolve(4, 0)
    assert s.amplitude(0, R) == 1 and s.amplitude(0, L) == 0
    assert s.norm_squared() == 1


@pytest.mark.parametrize("k", [2, 3, 4, 9, 20])
def test_engine_matches_reference(k):
    n = 12
    ref = reference_walk(k, n)
    s = evolve(k, n)
    for x in range(-n - 2, n + 3):
        pl, pr = ref.get(x, [0, 0])
        assert s.amplitude(x, L) == pl
        assert s.amplitude(x, R) == pr


@pytest.mark.parametrize("k", [3, 4, 11])
def test_light_cone_parity_norm(k):
    for s in iterate(k, 40):
        n = s.step
        assert s.norm_squared() == 1
        for x in range(-n - 3, n + 4):
            if abs(x) > n or (x + n) % 2:
                assert s.amplitude(x, L) == 0 and s.amplitude(x, R) == 0


@pytest.mark.parametrize("k", [3, 5, 20])
def test_extremal_cells(k):
    d = ExtScalar(0, Fraction(2, k), k - 1)
    c = 1 - Fraction(2, k)
    for s in iterate(k, 25):
        n = s.step
        if n == 0:
            continue
        top = ExtScalar(1, 0, k - 1)
        for _ in range(n):
            top = top * d
        assert s.amplitude(n, R) == top
        assert s.amplitude(-n, L) == -(c * top / d)
        assert s.sign(n, R) > 0 and s.sign(-n, L) < 0


def test_denominators_divide_k_power():
    k = 6
    for s in iterate(k, 15):
        for x in s.positions():
            for c in (L, R):
                a = s.amplitude(x, c)
                assert (k ** s.step) % a.rat.denominator == 0
                assert (k ** s.step) % a.irr.denominator == 0


def test_phase_step_one():
    ph = phase(evolve(7, 1))
    assert ph[(1, R)] is Phase.ZERO and ph[(-1, L)] is Phase.PI
    others = {key: v for key, v in ph.items() if key not in {(1, R), (-1, L)}}
    assert set(others.values()) == {Phase.EMPTY}


def test_phase_step_two():
    ph = phase(evolve(3, 2))
    assert ph[(2, R)] is Phase.ZERO and ph[(0, R)] is Phase.ZERO
    assert ph[(0, L)] is Phase.PI and ph[(-2, L)] is Phase.PI
    assert sum(v is not Phase.EMPTY for v in ph.values()) == 4


def test_phase_step_zero():
    ph = phase(evolve(5, 0))
    assert ph == {(0, L): Phase.EMPTY, (0, R): Phase.ZERO}


def test_phase_empty_iff_zero_amplitude():
    s = evolve(4, 9)
    for (x, c), v in phase(s).items():
        assert (v is Phase.EMPTY) == (s.amplitude(x, c) == 0)


def test_pattern_k20_first_rows():
    grid = pattern(20, 4)
    assert grid.black_cells(1) == {(1, R)}
    assert grid.black_cells(2) == {(0, R), (2, R)}
    assert grid.black_cells(3) == {(-1, R), (3, R)}
    assert grid.black_cells(4) == {(-2, R), (0, R), (4, R)}


@pytest.mark.parametrize("k", [3, 8])
def test_pattern_light_cone(k):
    grid = pattern(k, 30)
    for n in range(1, 31):
        assert all(abs(x) <= n for x, _ in grid.black_cells(n))


def test_pattern_requires_k3():
    with pytest.raises(ValueError):
        pattern(2, 5)
    with pytest.raises(ValueError):
        pattern(3, 0)


def test_grid_serializations():
    grid = pattern(20, 2)
    # columns (x;L),(x;R) for x = -2..2
    assert grid.to_ascii() == "..o....#..\no...o#...#\n"
    assert PhaseGrid.from_ascii(20, grid.to_ascii()) == grid
    pgm = grid.to_pgm()
    assert pgm.startswith(b"P5\n10 2\n255\n")
    body = pgm[len(b"P5\n10 2\n255\n"):]
    assert len(body) == 20 and body.count(0) == 3
    lines = grid.to_csv().splitlines()
    assert lines[0] == "n,x,chirality,phase"
    assert "1,1,R,0" in lines and "1,-1,L,pi" in lines
    assert len(lines) == 1 + 6 + 10


def test_zero_fraction_profile_bounds():
    prof = zero_fraction_profile(pattern(20, 60), bins=10)
    assert prof and all(0.0 <= share <= 1.0 for _, share in prof)
    # the outermost bin holds the S(U)^n cells, which are always black
    assert prof[-1][1] > 0
