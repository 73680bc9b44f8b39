from fractions import Fraction

import pytest

import cubespan

TEN_BY_TEN = [
    ["1/10", "9/10", "3/10", "7/10", "1/10", "1/10", "3/10", "5/10"],
    ["2/10", "8/10", "6/10", "4/10", "1/10", "1/10", "3/10", 0],
]


def test_ten_by_ten_report():
    r = cubespan.analyze(8, TEN_BY_TEN)
    assert (r["iota"], r["kappa"]) == (4, 2)
    assert r["dim_formula"] == r["dim_bruteforce"] == 6
    assert r["agreement"] is True
    assert r["factors"] == [10, 10]


def test_white_points():
    pts = cubespan.cube_points(3, [["2/5", "3/5", "1/5"]])
    assert len(pts) == 5
    assert (Fraction(2, 5), Fraction(3, 5), Fraction(1, 5)) in pts
    assert cubespan.invariant_factors(3, [["2/5", "3/5", "1/5"]]) == [5]


def test_sebo():
    assert cubespan.sebo(4, [["1/5", "4/5", "2/5", "3/5"]]) == (True, "holds; sigma = (1 2)(3 4)")
    holds, summary = cubespan.sebo(4, [["1/5", "1/5", "2/5", "3/5"]])
    assert not holds and summary == "fails; witness k=1"


def test_h_star():
    assert cubespan.h_star([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 3]]) == [1, 0, 2, 0]
    assert cubespan.h_star([[0], [2]]) == [1, 1]


def test_characters_and_dirichlet():
    assert cubespan.b1("1/5") == "-3/10"
    assert cubespan.indicator_independence([2, 2])
    assert cubespan.odd_span([3, 3]) == (4, 4)
    assert cubespan.basis_count([8]) == (3, 3, 3)
    for f, tau in cubespan.gauss_sums(12):
        assert abs(abs(tau) ** 2 - f) < 1e-9


def test_verify_small():
    assert cubespan.verify("chars", max_order=12)["passed"]
    assert cubespan.verify("lattice", instances=10, max_n=4, max_order=60)["passed"]
    with pytest.raises(ValueError):
        cubespan.verify("nothing")


def test_errors():
    with pytest.raises(ValueError, match="generators"):
        cubespan.analyze(2, [["1/2"]])
    with pytest.raises(cubespan.ResourceLimitError):
        cubespan.cube_points(2, [["1/7", 0], [0, "1/7"]], max_points=10)
