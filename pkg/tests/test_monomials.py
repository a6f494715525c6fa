import random
from itertools import product

import pytest

from trikoszul.errors import DimensionCapError, IdealParseError, NotArtinianError
from trikoszul.monomials import (
    Monomial,
    MonomialIdeal,
    divides,
    format_ideal,
    is_complete_intersection,
    is_generic,
    is_primary_artinian,
    lcm,
    parse_ideal,
    standard_monomials,
    strictly_divides,
    strongly_divides,
)


def mono(*e):
    return Monomial(*e)


# ---------------------------------------------------------------- parsing


def test_parse_worked_example(ex31):
    assert [tuple(g) for g in ex31.generators] == [
        (3, 0, 0),
        (2, 1, 0),
        (0, 3, 0),
        (0, 0, 3),
        (2, 0, 2),
    ]
    assert ex31.n == 5


def test_parse_minimalizes_preserving_order():
    ideal = parse_ideal("x, x^2, y, z")
    assert [tuple(g) for g in ideal.generators] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert ideal.n == 3


def test_parse_rejects_whitespace_juxtaposition():
    with pytest.raises(IdealParseError) as err:
        parse_ideal("x^2 y")
    assert err.value.position == 4
    assert tuple(parse_ideal("x^2*y").generators[0]) == (2, 1, 0)


def test_parse_repeated_variables_multiply():
    assert tuple(parse_ideal("x*y*x^2").generators[0]) == (3, 1, 0)


def test_parse_errors():
    with pytest.raises(IdealParseError):
        parse_ideal("")
    with pytest.raises(IdealParseError):
        parse_ideal("   ")
    with pytest.raises(IdealParseError) as err:
        parse_ideal("x^2, w^3")
    assert "unknown variable" in str(err.value)
    with pytest.raises(IdealParseError):
        parse_ideal("x^")
    with pytest.raises(IdealParseError):
        parse_ideal("x,,y")
    with pytest.raises(IdealParseError):
        parse_ideal("x^2,")
    with pytest.raises(IdealParseError):
        parse_ideal("2*x")


def test_roundtrip_random():
    rng = random.Random(7)
    for _ in range(200):
        gens = [
            Monomial(rng.randrange(5), rng.randrange(5), rng.randrange(5))
            for _ in range(rng.randint(1, 7))
        ]
        gens = [g for g in gens if not g.is_unit()]
        if not gens:
            continue
        ideal = MonomialIdeal.from_monomials(gens)
        assert parse_ideal(format_ideal(ideal)) == ideal


# ------------------------------------------------------------ divisibility


def test_lcm_examples():
    assert lcm(mono(3, 0, 0), mono(2, 1, 0)) == mono(3, 1, 0)
    assert lcm(mono(2, 5, 1), mono(2, 5, 1)) == mono(2, 5, 1)
    assert lcm(mono(2, 0, 2), mono(0, 3, 0)) == mono(2, 3, 2)


def test_strong_division_examples():
    assert strongly_divides(mono(0, 1, 0), mono(1, 2, 1))
    assert not strongly_divides(mono(1, 0, 0), mono(1, 0, 0))
    for m in [mono(0, 0, 0), mono(1, 2, 3), mono(5, 0, 0)]:
        assert strongly_divides(mono(0, 0, 0), m)


def test_division_implication_chain():
    rng = random.Random(3)
    for _ in range(500):
        m1 = Monomial(rng.randrange(4), rng.randrange(4), rng.randrange(4))
        m2 = Monomial(rng.randrange(4), rng.randrange(4), rng.randrange(4))
        if m2.is_unit():
            continue
        if strongly_divides(m1, m2):
            assert strictly_divides(m1, m2)
        if strictly_divides(m1, m2):
            assert divides(m1, m2)


# -------------------------------------------------------------- predicates


def test_is_primary_artinian(ex31):
    assert is_primary_artinian(ex31)
    assert not is_primary_artinian(MonomialIdeal.from_monomials([mono(2, 0, 0), mono(0, 2, 0)]))
    assert not is_primary_artinian(
        MonomialIdeal.from_monomials([mono(1, 0, 0), mono(0, 2, 0), mono(0, 0, 2)])
    )


def test_is_generic(ex31, ex42, ci2):
    assert is_generic(ex42)
    assert not is_generic(ex31)
    assert is_generic(ci2)


def test_is_complete_intersection(ex31, ci2):
    assert is_complete_intersection(ci2)
    assert not is_complete_intersection(ex31)
    assert not is_complete_intersection(
        MonomialIdeal.from_monomials([mono(2, 0, 0), mono(0, 2, 0), mono(1, 0, 1)])
    )


def test_minimality_invariant_random():
    rng = random.Random(11)
    for _ in range(300):
        gens = [
            Monomial(rng.randrange(5), rng.randrange(5), rng.randrange(5))
            for _ in range(rng.randint(1, 8))
        ]
        ideal = MonomialIdeal.from_monomials(gens)
        out = ideal.generators
        for i in range(len(out)):
            for j in range(len(out)):
                if i != j:
                    assert not divides(out[i], out[j])


# -------------------------------------------------------- standard monomials


def inclusion_exclusion_dim(ideal: MonomialIdeal) -> int:
    """Independent oracle: alternating sum of box volumes over generator
    subsets, inside the box cut out by the pure powers."""
    a, b, c = ideal.pure_power_exponents()
    gens = ideal.generators
    total = 0
    for mask in range(1 << len(gens)):
        m = Monomial(0, 0, 0)
        bits = 0
        k = mask
        idx = 0
        while k:
            if k & 1:
                m = lcm(m, gens[idx])
                bits += 1
            k >>= 1
            idx += 1
        vol = max(0, a - m.ax) * max(0, b - m.ay) * max(0, c - m.az)
        total += vol if bits % 2 == 0 else -vol
    return total


def test_standard_monomials_m2(msquare):
    std = standard_monomials(msquare)
    assert std.dim == 4
    assert [str(m) for m in std.monomials] == ["1", "x", "y", "z"]


def test_standard_monomials_ci(ci2):
    assert standard_monomials(ci2).dim == 8


def test_standard_monomials_vs_inclusion_exclusion(ex31):
    std = standard_monomials(ex31)
    assert std.dim == inclusion_exclusion_dim(ex31)
    assert std.dim == 20


def test_inclusion_exclusion_identity_sampled():
    # small exhaustive slice plus a seeded random sweep, n <= 5, exponents <= 6
    for a, b, c in product((2, 3), repeat=3):
        for m1 in [Monomial(1, 1, 0), Monomial(1, 0, 1), Monomial(0, 1, 1)]:
            ideal = MonomialIdeal.from_monomials(
                [Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c), m1]
            )
            if ideal.n != 4:
                continue
            assert standard_monomials(ideal).dim == inclusion_exclusion_dim(ideal)
    rng = random.Random(23)
    checked = 0
    while checked < 150:
        a, b, c = (rng.randint(2, 6) for _ in range(3))
        gens = [Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c)]
        for _ in range(rng.randint(0, 2)):
            m = Monomial(rng.randrange(a), rng.randrange(b), rng.randrange(c))
            if len(m.support()) >= 2:
                gens.append(m)
        ideal = MonomialIdeal.from_monomials(gens)
        if ideal.n > 5 or not is_primary_artinian(ideal):
            continue
        assert standard_monomials(ideal).dim == inclusion_exclusion_dim(ideal)
        checked += 1


def test_standard_monomials_errors():
    with pytest.raises(NotArtinianError):
        standard_monomials(parse_ideal("x^2, y^2"))
    with pytest.raises(DimensionCapError):
        standard_monomials(parse_ideal("x^9, y^9, z^9"), dim_cap=100)


def test_standard_monomials_order(ci2):
    std = standard_monomials(ci2)
    degrees = [m.degree() for m in std.monomials]
    assert degrees == sorted(degrees)
    assert [str(m) for m in std.monomials[:4]] == ["1", "x", "y", "z"]
