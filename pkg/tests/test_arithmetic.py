from fractions import Fraction as F

import pytest

from sl2wt import (
    OMEGA,
    NotAdmissible,
    OutOfKacTable,
    Weight,
    admissible_level,
    conf_wt_gap,
    kac_data,
    ks_dual_level,
    pi_conf_weight,
    wt,
)
from sl2wt.arithmetic import delta_rs, h_rs, lam_rs

from conftest import TEST_LEVELS, random_weight, rng


def test_admissible_level_values():
    lv = admissible_level(3, 2)
    assert (lv.t, lv.k) == (F(3, 2), F(-1, 2))
    # independent evaluation of 1 - 6(k+1)^2/(k+2)
    assert lv.c_k == 1 - 6 * (F(-1, 2) + 1) ** 2 / (F(-1, 2) + 2) == 0
    lv = admissible_level(5, 3)
    assert (lv.t, lv.k) == (F(5, 3), F(-1, 3))
    assert lv.c_k == 1 - 6 * (F(-1, 3) + 1) ** 2 / (F(-1, 3) + 2) == F(-3, 5)


@pytest.mark.parametrize("u,v", [(4, 2), (6, 3), (1, 2), (3, 1), (2, 1), (0, 5)])
def test_not_admissible(u, v):
    with pytest.raises(NotAdmissible):
        admissible_level(u, v)


def test_kac_data_examples():
    lv = admissible_level(5, 3)
    d = kac_data(lv, 1, 1)
    assert d.lam == F(-5, 3) == -lv.t
    # independent: Delta = ((r - t s)^2 - 1)/(4t), h = ((su - rv)^2 - (u-v)^2)/(4uv)
    assert d.delta == ((1 - F(5, 3)) ** 2 - 1) / (4 * F(5, 3)) == F(-1, 12)
    assert d.h == F((1 * 5 - 1 * 3) ** 2 - (5 - 3) ** 2, 4 * 5 * 3) == 0
    assert kac_data(lv, 2, 1).h == F(-1, 20)
    assert kac_data(lv, 1, 0).h is None
    assert kac_data(lv, 1, 3).h is None


@pytest.mark.parametrize("r,s", [(0, 1), (5, 1), (1, -1), (1, 4)])
def test_kac_data_range(r, s):
    with pytest.raises(OutOfKacTable):
        kac_data(admissible_level(5, 3), r, s)


def test_kac_symmetries_exhaustive(level):
    u, v = level.u, level.v
    for r in range(1, u):
        for s in range(1, v):
            assert lam_rs(level, u - r, v - s) == -lam_rs(level, r, s) - 2
            assert delta_rs(level, u - r, v - s) == delta_rs(level, r, s)
            assert h_rs(level, u - r, v - s) == h_rs(level, r, s)


def test_conf_wt_gap_examples():
    assert conf_wt_gap(admissible_level(5, 3), 1, 1) == F(2, 3)
    assert conf_wt_gap(admissible_level(3, 2), 1, 1) == F(1, 2)
    with pytest.raises(OutOfKacTable):
        conf_wt_gap(admissible_level(5, 3), 1, 3)


def test_conf_wt_gap_never_integral(level):
    for r in range(1, level.u):
        for s in range(1, level.v):
            gap = conf_wt_gap(level, r, s)
            assert gap == -r + level.t * s
            assert gap.denominator > 1


def test_pi_conf_weight():
    lv = admissible_level(3, 2)
    assert pi_conf_weight(lv, 0, wt(0)) == wt(0)
    assert pi_conf_weight(lv, 2, lv.t) == wt(4)
    # lam coefficient vanishes at flow = -1
    for lam in (wt(0), wt(F(7, 3)), OMEGA, wt(F(1, 2), F(-2, 3))):
        assert pi_conf_weight(lv, -1, lam) == wt(lv.k / 4)


def test_ks_dual_level():
    assert ks_dual_level(admissible_level(3, 2)) == F(-1, 3)
    assert ks_dual_level(admissible_level(2, 3)) == F(1, 2)
    assert ks_dual_level(admissible_level(5, 3)) == F(-2, 5)
    for u, v in TEST_LEVELS:
        lv = admissible_level(u, v)
        ell = ks_dual_level(lv)
        assert (ell + 1) * (lv.k + 2) == 1


def test_weight_equality_and_predicates():
    assert wt(F(1, 2)) == Weight(F(1, 2), F(0))
    assert wt(F(1, 2)) != wt(F(1, 2), F(1, 3))
    assert OMEGA.b == 1 and not OMEGA.is_rational
    assert wt(3).is_integral and not wt(F(1, 2)).is_integral and not OMEGA.is_integral


def test_weight_reduce_properties():
    r = rng(7)
    for _ in range(300):
        x = random_weight(r)
        y = random_weight(r)
        for m in (1, 2):
            assert x.reduce(m).reduce(m) == x.reduce(m)
            assert (x + y).reduce(m) == (x.reduce(m) + y.reduce(m)).reduce(m)
            red = x.reduce(m)
            assert 0 <= red.a < m
            assert red.b == x.b


def test_weight_json_round_trip():
    r = rng(8)
    for _ in range(50):
        x = random_weight(r)
        data = x.to_json()
        for part in ("a", "b"):
            num, den = data[part]
            assert den > 0
            from math import gcd

            assert gcd(num, den) == 1
        assert Weight.from_json(data) == x
