import io
from fractions import Fraction

import pytest

from conftest import generic_point
from spinorlaw.measure import (character_measure, character_measure_float, measure_table, normalization_check,
                               plancherel_measure, sample, support, total_variation)
from spinorlaw.errors import ScaleGuardError

F = Fraction


def test_support_examples():
    assert support(1, 2) == [(0,), (1,)]
    assert support(2, 2) == [(0, 0), (0, 1), (1, 1)]
    assert support(1, 1) == [(0,)]


def test_character_measure_examples():
    assert character_measure(1, 1, (0,), (F(7, 3),)) == 1
    assert character_measure(1, 2, (0,), (F(2),)) == F(21, 25)
    assert character_measure(1, 2, (1,), (F(2),)) == F(4, 25)


def test_plancherel_examples():
    assert plancherel_measure(1, 2, (0,)) == F(3, 4)
    assert plancherel_measure(1, 2, (1,)) == F(1, 4)
    assert plancherel_measure(1, 1, (0,)) == 1


def test_normalization_examples():
    assert normalization_check(1, 2, (F(2),)) == 1
    assert normalization_check(2, 2) == 1
    assert normalization_check(3, 1, (F(2), F(5), F(7, 2))) == 1


@pytest.mark.parametrize("n, N", [(1, 9), (2, 7), (3, 4)])
def test_normalization_is_exact(n, N, rng):
    for _ in range(3):
        assert normalization_check(n, N, generic_point(rng, n)) == 1
    assert normalization_check(n, N) == 1


def test_identity_point_is_plancherel():
    for s in support(2, 6):
        assert character_measure(2, 6, s, (1, 1)) == plancherel_measure(2, 6, s)


def test_float_mode_agrees_with_exact(rng):
    for n, N in [(1, 12), (2, 10), (3, 6)]:
        pt = generic_point(rng, n)
        exact = measure_table(n, N, pt, "exact")
        approx = measure_table(n, N, pt, "float")
        for e, a in zip(exact.points, approx.points):
            assert a.probability == pytest.approx(float(e.probability), rel=1e-9)
    exact = measure_table(2, 8, None, "exact")
    approx = measure_table(2, 8, None, "float")
    for e, a in zip(exact.points, approx.points):
        assert a.probability == pytest.approx(float(e.probability), rel=1e-9)


def test_float_mode_large_power_is_normalized():
    total = sum(float(character_measure_float(1, 2000, (s,), (F(30),))) for s in range(0, 1001))
    assert total == pytest.approx(1.0, abs=1e-12)


def test_scale_guard():
    with pytest.raises(ScaleGuardError):
        measure_table(1, 65, (F(2),))
    with pytest.raises(ScaleGuardError):
        measure_table(5, 2)


def test_sample_point_mass():
    assert sample(1, 1, (F(3),), seed=7, count=5) == [(0,)] * 5


def test_sample_binary_frequency():
    draws = sample(1, 2, (F(2),), seed=11, count=100_000)
    freq = draws.count((0,)) / len(draws)
    assert abs(freq - 21 / 25) <= 0.005


def test_sample_concentrates_near_boundary():
    pt = (F(20), F(15))
    table = measure_table(2, 6, pt)
    draws = sample(2, 6, pt, seed=3, count=10_000, table=table)
    assert total_variation(table, draws) <= 0.05
    assert max(set(draws), key=draws.count) == (0, 0)
    assert sum(1 for d in draws if sum(d) <= 1) / len(draws) > 0.9


def test_sample_reproducible_and_tv_bound():
    pt = (F(3), F(2))
    table = measure_table(2, 8, pt)
    a = sample(2, 8, pt, seed=5, count=10_000, table=table)
    b = sample(2, 8, pt, seed=5, count=10_000, table=table)
    assert a == b
    assert total_variation(table, a) <= 3 / 10_000 ** 0.5


def test_csv_layout():
    table = measure_table(1, 2, (F(2),))
    buf = io.StringIO()
    table.write_csv(buf, comment="config: test")
    lines = buf.getvalue().splitlines()
    assert lines[0] == "s_1,lambda_1,multiplicity,probability_num,probability_den,probability_float"
    assert lines[1] == "0,2,1,21,25,0.84"
    assert lines[2] == "1,0,1,4,25,0.16"
    assert lines[-1] == "# config: test"
