from fractions import Fraction as F
from itertools import groupby

import pytest

from tjspectra.errors import (DegenerateExponent, GcdViolation,
                              InvalidFamilyParameters)
from tjspectra.families import (PuiseuxParams, SwhParams, ThreeMonomialParams,
                                brieskorn_two_var, puiseux_instance,
                                puiseux_spectrum, swh_instance,
                                three_monomial_instance)
from tjspectra.spectra import average


def test_brieskorn_smallest():
    s = brieskorn_two_var(2, 3)
    assert s.values == (F(5, 6), F(7, 6))


def test_brieskorn_77():
    s = brieskorn_two_var(7, 7)
    assert s.mu == 36
    assert s.values[0] == F(2, 7)
    assert s.values[-1] == F(12, 7)


def test_brieskorn_54_matches_deformed_spectrum():
    s = brieskorn_two_var(5, 4)
    expected = sorted(F(4 * p + 5 * q, 20) for p in range(1, 5) for q in range(1, 4))
    assert list(s.values) == expected


def test_brieskorn_degenerate():
    with pytest.raises(DegenerateExponent):
        brieskorn_two_var(1, 5)


def test_swh_7711():
    inst = swh_instance(SwhParams(7, 7, 1, 1))
    assert (inst.mu, inst.tau) == (36, 35)
    missing = [inst.spectrum.value_at(i) for i in range(1, 37)
               if i not in inst.tjurina_indices]
    assert missing == [F(12, 7)]
    assert inst.defining_poly.terms == {(7, 0): 1, (0, 7): 1, (5, 5): 1}


def test_swh_5411():
    inst = swh_instance(SwhParams(5, 4, 1, 1), cross_check=True)
    assert (inst.mu, inst.tau) == (12, 11)
    assert inst.defining_poly.terms == {(5, 0): 1, (0, 4): 1, (3, 2): 1}
    expected = sorted(F(4 * p + 5 * q, 20) for p in range(1, 5) for q in range(1, 4))
    assert list(inst.spectrum.values) == expected


def test_swh_invalid_params():
    with pytest.raises(InvalidFamilyParameters):
        swh_instance(SwhParams(4, 4, 2, 1))
    with pytest.raises(InvalidFamilyParameters):
        swh_instance(SwhParams(4, 4, 1, 1))  # weighted degree condition fails


def test_swh_excluded_value_multiset():
    a, b, c, d = 9, 8, 2, 3
    inst = swh_instance(SwhParams(a, b, c, d))
    assert inst.tau == (a - 1) * (b - 1) - c * d
    missing = sorted(inst.spectrum.value_at(i) for i in range(1, inst.mu + 1)
                     if i not in inst.tjurina_indices)
    expected = sorted(F(i, a) + F(j, b)
                      for i in range(a - c, a) for j in range(b - d, b))
    assert missing == expected


def test_level_initial_segment_invariant():
    for params in [SwhParams(7, 7, 1, 1), SwhParams(9, 9, 2, 2), SwhParams(8, 5, 1, 1)]:
        inst = swh_instance(params)
        s = inst.spectrum
        for _, group in groupby(range(1, s.mu + 1), key=s.value_at):
            flags = [i in inst.tjurina_indices for i in group]
            # within one level the Tjurina members form an initial run
            assert flags == sorted(flags, reverse=True)


def test_three_monomial_2476():
    inst = three_monomial_instance(ThreeMonomialParams(2, 4, 7, 6), cross_check=True)
    assert inst.mu - inst.tau == (2 - 1) * (4 - 1) + max(2 * 4 - 6 - 1, 0) == 4
    assert inst.defining_poly.terms == {(2, 4): 1, (7, 0): 1, (0, 6): 1}


def test_three_monomial_empty_extra_wall():
    # 2b = 6 <= d+1 = 8: no extra excluded wall
    inst = three_monomial_instance(ThreeMonomialParams(2, 3, 9, 7), cross_check=True)
    assert inst.mu - inst.tau == 2


def test_three_monomial_invalid():
    with pytest.raises(InvalidFamilyParameters):
        three_monomial_instance(ThreeMonomialParams(3, 2, 9, 9))
    with pytest.raises(InvalidFamilyParameters):
        three_monomial_instance(ThreeMonomialParams(2, 3, 4, 5))


@pytest.mark.parametrize("tpl", [(2, 4, 7, 6), (2, 3, 9, 7), (2, 3, 7, 10),
                                 (2, 4, 9, 9), (3, 4, 8, 9), (2, 5, 6, 11)])
def test_three_monomial_cross_checks(tpl):
    inst = three_monomial_instance(ThreeMonomialParams(*tpl), cross_check=True)
    assert inst.mu - inst.tau == (tpl[0] - 1) * (tpl[1] - 1) + max(2 * tpl[1] - tpl[3] - 1, 0)


def test_puiseux_c1_spectrum():
    p = PuiseuxParams(3, 2, 2, -1, 1)
    assert (p.c, p.e) == (1, 13)
    inst = puiseux_instance(p, verify_milnor=True)
    assert inst.mu == 16
    expected = sorted([F(5, 12), F(11, 12), F(13, 12), F(19, 12)]
                      + [F(1, 2) + F(k, 13) for k in range(1, 13)])
    assert list(inst.spectrum.values) == expected


def test_puiseux_c5():
    p = PuiseuxParams(3, 2, 2, 1, 1)
    assert (p.c, p.e) == (5, 17)
    inst = puiseux_instance(p, verify_milnor=True)
    assert (inst.mu, inst.tau) == (20, 18)


def test_puiseux_gcd_violation():
    with pytest.raises(GcdViolation):
        puiseux_instance(PuiseuxParams(4, 2, 3, 1, 1))


def test_puiseux_invalid_ordering():
    with pytest.raises(InvalidFamilyParameters):
        puiseux_instance(PuiseuxParams(2, 3, 2, 1, 1))


def test_puiseux_tjurina_subset_unset_by_default():
    inst = puiseux_instance(PuiseuxParams(3, 2, 2, -1, 1))
    assert inst.tjurina_indices is None
    assert inst.tau == 14


def test_generated_spectra_complete_and_centered():
    instances = [
        swh_instance(SwhParams(7, 7, 1, 1)).spectrum,
        swh_instance(SwhParams(9, 8, 2, 3)).spectrum,
        three_monomial_instance(ThreeMonomialParams(2, 4, 7, 6)).spectrum,
        puiseux_spectrum(PuiseuxParams(3, 2, 2, 1, 1)),
        brieskorn_two_var(5, 4),
    ]
    for s in instances:
        assert s.complete  # symmetry verified at construction
        assert average(s) == 1  # n/2 with n = 2


def test_mu_one_spectrum_is_legal():
    s = brieskorn_two_var(2, 2)
    assert s.mu == 1 and s.values == (F(1),)
