from decimal import Decimal
from fractions import Fraction

import pytest

from stickbound.bounds import (
    bae_park_upper,
    bound_report,
    huh_oh_upper,
    negami_bounds,
    theorem2_upper,
)


def test_arc_index_upper():
    assert bae_park_upper(3) == 5
    assert bae_park_upper(3, nonalternating_prime=True) == 4
    assert bae_park_upper(10) == 12
    assert bae_park_upper(10, nonalternating_prime=True) == 11


def test_stick_upper_from_arc_index():
    assert theorem2_upper(2) == Fraction(3, 2)
    assert theorem2_upper(5) == 6
    assert theorem2_upper(6) == Fraction(15, 2)


def test_stick_upper_from_crossings():
    assert huh_oh_upper(3) == 6
    assert huh_oh_upper(3, nonalternating_prime=True) == Fraction(9, 2)
    assert huh_oh_upper(7) == 12


@pytest.mark.parametrize("c", [0, 1, 2])
def test_domains_start_at_three(c):
    with pytest.raises(ValueError):
        bae_park_upper(c)
    with pytest.raises(ValueError):
        huh_oh_upper(c)
    with pytest.raises(ValueError):
        negami_bounds(c)


def test_theorem2_domain():
    with pytest.raises(ValueError):
        theorem2_upper(1)


def test_composition_identity_exact():
    for c in range(3, 101):
        for flag in (False, True):
            assert theorem2_upper(bae_park_upper(c, flag)) == huh_oh_upper(c, flag)


def test_quadratic_vs_linear_growth():
    # the 3/2-type bound stays under the doubling bound from c = 4 on
    for c in range(4, 200):
        assert huh_oh_upper(c) < 2 * c


def test_negami_trefoil_row():
    nb = negami_bounds(3)
    assert nb.lower_ceiling == 6
    assert nb.lower_decimal == "5.372"
    assert nb.upper == 6


def test_negami_exact_square_branch():
    # 25 + 8(c-2) = 49 at c = 5: the surd is exactly 7, ceiling must not round up
    nb = negami_bounds(5)
    assert nb.lower_ceiling == 6
    assert nb.lower_decimal == "6.000"


def test_negami_monotone():
    prev = negami_bounds(3)
    for c in range(4, 60):
        cur = negami_bounds(c)
        assert cur.lower_ceiling >= prev.lower_ceiling
        assert Decimal(cur.lower_decimal) > Decimal(prev.lower_decimal)
        assert cur.upper == 2 * c
        prev = cur


def test_bound_report_composes():
    rep = bound_report(3)
    assert rep.arc_index_upper == 5
    assert rep.stick_upper == 6
    assert rep.negami.upper == 6
    rep2 = bound_report(3, nonalternating_prime=True)
    assert rep2.arc_index_upper == 4
    assert rep2.stick_upper == Fraction(9, 2)
