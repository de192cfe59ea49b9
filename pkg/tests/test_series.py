from __future__ import annotations

import pytest

from fiqs import (
    DefiningMatrix,
    SeriesId,
    SeriesKey,
    enumerate_all,
    enumerate_eta,
    is_valid,
    matrix_from_eta,
    series_membership,
)

from conftest import up_to


def test_enumerate_rho1_iota3():
    keys = enumerate_eta(SeriesId(1, "s11"), 3)
    assert [k.eta() for k in keys] == [(1, 3), (3, 3)]


def test_enumerate_rho2_s11_iota1_empty():
    # c must satisfy 0 <= c <= -1/2: empty
    assert enumerate_eta(SeriesId(2, "s11"), 1) == []


def test_enumerate_rho2_s22_iota1():
    keys = enumerate_eta(SeriesId(2, "s22"), 1)
    assert [k.eta() for k in keys] == [(1, 1, -2)]


def test_enumerate_rho3_s11_iota3_contains_diagonal():
    keys = enumerate_eta(SeriesId(3, "s11"), 3)
    assert (3, 3, -2, -2) in [k.eta() for k in keys]


def test_matrix_tables():
    assert matrix_from_eta(SeriesKey(SeriesId(1, "s11"), 1, 1)) == DefiningMatrix(1, 0, -2)
    assert matrix_from_eta(SeriesKey(SeriesId(2, "s22"), 1, 1, -2)) == DefiningMatrix(2, 1, 0, -2)
    assert matrix_from_eta(SeriesKey(SeriesId(3, "s11"), 3, 3, -2, -2)) == DefiningMatrix(
        3, 3, 1, -2, -2
    )


def test_matrix_from_eta_rejects_nonmembers():
    bad = SeriesKey(SeriesId(1, "s11"), 2, 2)  # even local indices not allowed in s11
    assert not series_membership(bad)
    with pytest.raises(ValueError):
        matrix_from_eta(bad)


def test_enumerate_all_small_counts():
    assert len(enumerate_all(1, 1)) == 1
    assert len(enumerate_all(1, 2)) == 0  # even local indices must be divisible by 4
    assert [(k.series.tag, k.eta()) for k, _ in enumerate_all(2, 1)] == [
        ("s12", (1, 1, -1)),
        ("s22", (1, 1, -2)),
    ]


def test_enumerate_rejects_nonpositive_iota():
    with pytest.raises(ValueError):
        enumerate_eta(SeriesId(1, "s11"), 0)
    with pytest.raises(ValueError):
        enumerate_all(2, -3)


def test_every_enumerated_matrix_validates(surfaces_by_rho):
    for rho in (1, 2, 3):
        for key, m in up_to(surfaces_by_rho[rho], 30):
            assert is_valid(m), (key, m)
            assert series_membership(key)


def test_matrices_pairwise_distinct_within_iota():
    for rho in (1, 2, 3):
        for iota in range(1, 21):
            params = [m.params() for _, m in enumerate_all(rho, iota)]
            assert len(params) == len(set(params)), (rho, iota)


def test_rho1_parity_table():
    expected = {"s11": (0, 0), "s12": (0, 1), "s21": (1, 0), "s22": (1, 1)}
    for iota in range(1, 41):
        for key, m in enumerate_all(1, iota):
            assert (m.a % 2, m.b % 2) == expected[key.series.tag]


def test_gorenstein_index_is_lcm(surfaces_by_rho):
    for rho in (1, 2, 3):
        for iota in range(1, 31):
            for key, _ in enumerate_all(rho, iota):
                assert key.iota == iota


def test_enumeration_is_deterministic():
    for rho in (1, 2, 3):
        assert enumerate_all(rho, 12) == enumerate_all(rho, 12)


def test_enumeration_ordering():
    keys = enumerate_eta(SeriesId(3, "s22"), 2)
    etas = [k.eta() for k in keys]
    assert etas == sorted(etas)


def test_series_cover_all_valid_matrices():
    """Every matrix satisfying the construction inequalities lies in exactly one series."""
    from fiqs import classify

    def check(m):
        key = classify(m)
        assert series_membership(key)
        assert matrix_from_eta(key) == m

    for b in range(-20, -1):
        for a in range(0, -b - 1):
            check(DefiningMatrix(1, a, b))
    for a in range(0, 8):
        for b in range(-10, a):
            for c in range(-10, 0):
                m = DefiningMatrix(2, a, b, c)
                if is_valid(m):
                    check(m)
    for a in range(1, 7):
        for b in range(-8, a):
            for c in range(-8, 0):
                for d in range(-8, 0):
                    m = DefiningMatrix(3, a, b, c, d)
                    if is_valid(m):
                        check(m)


def test_key_field_arity_enforced():
    with pytest.raises(ValueError):
        SeriesKey(SeriesId(1, "s11"), 1, 1, c=-1)
    with pytest.raises(ValueError):
        SeriesKey(SeriesId(3, "s11"), 1, 1, c=-1)  # missing d
    with pytest.raises(ValueError):
        SeriesKey(SeriesId(2, "s11"), 0, 1, c=-1)
