from fractions import Fraction

import pytest

from trikoszul.classify import family_bclass
from trikoszul.errors import NonGenericError
from trikoszul.monomials import Monomial, parse_ideal
from trikoszul.resolution import (
    build_resolution,
    compose_is_zero,
    ordered_minimal_second_syzygies,
    scarf_resolution,
    second_syzygy,
    verify_resolution,
)


def column_monomials(mat, c):
    return sorted(str(mat.monomial_at(r, c)) for r in mat.column(c))


# ---------------------------------------------------------- second syzygies


def test_second_syzygy_worked_example(ex31):
    syz = second_syzygy(ex31, 1, 2)
    # m_12 = x^3*y: x*e2 - y*e1
    assert syz.mono_j == Monomial(1, 0, 0)
    assert syz.mono_i == Monomial(0, 1, 0)


def test_second_syzygy_pure_powers():
    ideal = parse_ideal("x^2, y^3, z^2")
    syz = second_syzygy(ideal, 1, 2)
    assert syz.mono_j == Monomial(2, 0, 0)
    assert syz.mono_i == Monomial(0, 3, 0)
    assert syz.entries_in_ideal(ideal)


def test_second_syzygy_index_errors(ex31):
    with pytest.raises(IndexError):
        second_syzygy(ex31, 2, 2)
    with pytest.raises(IndexError):
        second_syzygy(ex31, 0, 1)
    with pytest.raises(IndexError):
        second_syzygy(ex31, 3, 6)


def test_ordered_syzygies_worked_example(ex31):
    syz = ordered_minimal_second_syzygies(ex31)
    assert [(s.i, s.j) for s in syz] == [(1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)]


def test_ordered_syzygies_complete_intersection(ci2):
    syz = ordered_minimal_second_syzygies(ci2)
    assert [(s.i, s.j) for s in syz] == [(1, 2), (1, 3), (2, 3)]


def test_ordered_syzygies_bclass_count():
    ideal = family_bclass(4, 4, 4, 2, [3, 2], [2, 3])  # rho = 3
    assert len(ordered_minimal_second_syzygies(ideal)) == 2 * 3 + 2


# -------------------------------------------------------------- resolutions


def test_resolution_worked_example_exact_f2(ex31):
    res = build_resolution(ex31)
    assert res.betti == (1, 5, 6, 2)
    assert res.f2_faces == ((0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4))
    # the displayed 5 x 6 matrix, including signs
    x, y, z = Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)
    expected = {
        (0, 0): (-1, y),
        (1, 0): (1, x),
        (0, 1): (-1, Monomial(0, 0, 2)),
        (4, 1): (1, x),
        (1, 2): (-1, Monomial(0, 2, 0)),
        (2, 2): (1, Monomial(2, 0, 0)),
        (1, 3): (-1, Monomial(0, 0, 2)),
        (4, 3): (1, y),
        (2, 4): (-1, Monomial(0, 0, 3)),
        (3, 4): (1, Monomial(0, 3, 0)),
        (3, 5): (-1, Monomial(2, 0, 0)),
        (4, 5): (1, z),
    }
    assert set(res.f2.entries) == set(expected)
    for key, (scalar, monomial) in expected.items():
        assert res.f2.entries[key] == Fraction(scalar)
        assert res.f2.monomial_at(*key) == monomial


def test_resolution_worked_example_f3_columns(ex31):
    res = build_resolution(ex31)
    supports = sorted(column_monomials(res.f3, c) for c in range(res.f3.cols))
    assert supports == sorted(
        [sorted(["z^2", "y", "x"]), sorted(["z^3", "y^2*z", "x^2", "y^3"])]
    )


def test_resolution_f2_realizes_ordered_syzygies(ex31, ex42, msquare):
    for ideal in (ex31, ex42, msquare):
        res = build_resolution(ideal)
        pairs = [(s.i - 1, s.j - 1) for s in ordered_minimal_second_syzygies(ideal)]
        assert list(res.f2_faces) == pairs


def test_resolution_generic_example(ex42):
    res = build_resolution(ex42)
    assert res.betti == (1, 6, 11, 6)


def test_resolution_complete_intersection(ci2):
    res = build_resolution(ci2)
    assert res.betti == (1, 3, 3, 1)
    assert column_monomials(res.f3, 0) == sorted(["x^2", "y^2", "z^2"])


def test_resolution_euler_identity(ex31, ex42, msquare, ci2, staircase5):
    for ideal in (ex31, ex42, msquare, ci2, staircase5):
        res = build_resolution(ideal)
        assert res.f2.cols == res.n + res.m - 1
        assert 1 - res.n + res.f2.cols - res.m == 0


# ------------------------------------------------------------------- scarf


def test_scarf_matches_taylor_on_generic(ex42):
    taylor = build_resolution(ex42)
    scarf = scarf_resolution(ex42)
    assert scarf.betti == taylor.betti
    assert sorted(scarf.f2.col_degrees) == sorted(taylor.f2.col_degrees)
    assert sorted(scarf.f3.col_degrees) == sorted(taylor.f3.col_degrees)


def test_scarf_f3_columns_three_pure_powers(ex42):
    scarf = scarf_resolution(ex42)
    for c in range(scarf.f3.cols):
        col = scarf.f3.column(c)
        assert len(col) == 3
        for r in col:
            assert scarf.f3.monomial_at(r, c).pure_power_variable() is not None


def test_scarf_complete_intersection_full_simplex(ci2):
    scarf = scarf_resolution(ci2)
    assert scarf.betti == (1, 3, 3, 1)
    assert scarf.f3_faces == ((0, 1, 2),)


def test_scarf_rejects_non_generic(ex31):
    with pytest.raises(NonGenericError):
        scarf_resolution(ex31)


# ------------------------------------------------------------ verification


def test_verify_worked_example(ex31):
    checks = verify_resolution(build_resolution(ex31), ex31)
    assert checks.all_ok


def test_verify_detects_corruption(ex31):
    res = build_resolution(ex31)
    (r, c), _ = next(iter(sorted(res.f2.entries.items())))
    res.f2.entries[(r, c)] += 1
    checks = verify_resolution(res, ex31)
    assert not checks.d12_zero or not checks.d23_zero
    assert not checks.all_ok


def test_verify_m_squared(msquare):
    res = build_resolution(msquare)
    assert res.betti == (1, 6, 8, 3)
    assert verify_resolution(res, msquare).all_ok


def test_compose_is_zero_shape_mismatch(ex31, ci2):
    r1 = build_resolution(ex31)
    r2 = build_resolution(ci2)
    with pytest.raises(ValueError):
        compose_is_zero(r1.f1, r2.f2)
