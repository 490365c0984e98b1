from itertools import permutations

import pytest

from macchroma.chromatic import n_lambda
from macchroma.graphs import attacking_data
from macchroma.macdonald import (
    IFTableau,
    ift_enumerate,
    j_chromatic,
    j_hhl,
    j_power,
    j_schur,
    non_attacking_fillings,
    prefactor,
    wt_mu,
    wt_p,
)
from macchroma.rings import LaurentQT
from macchroma.shapes import conjugate, n_stat, partitions_of
from macchroma.symfunc import convert

P = LaurentQT.parse


def test_degree_one():
    f = j_hhl((1,))
    assert f.coeffs == {(1,): P("1 - t")}
    assert j_chromatic((1,)) == f
    assert j_schur((1,)).coeffs == {(1,): P("1 - t")}
    assert j_power((1,)).coeffs == {(1,): P("1 - t")}


def test_degree_two_frozen_values():
    # four fillings of the single column: the degree-2 expansion has
    # m_2 -> (1-t)(1-qt) and m_11 -> (1+q)(1-t)^2
    f = j_hhl((1, 1))
    assert f.coeffs == {
        (2,): P("1 - t") * P("1 - q*t"),
        (1, 1): P("1 + q") * P("1 - t") ** 2,
    }
    # single row gives the dual value
    g = j_hhl((2,))
    assert g.coeffs == {(1, 1): P("1 - t") * P("1 - t^2")}


def test_known_schur_coefficient_of_j31():
    s = j_schur((2, 1, 1))
    expected = P("1 - t") ** 2 * P("q - t") * P("1 - q*t") * P("1 + q*t")
    assert str(s.get((2, 2))) == str(expected)
    assert convert(j_hhl((2, 1, 1)), "schur").get((2, 2)) == expected


def test_ift_enumerate_type_211_shape_22():
    found = [t for t in ift_enumerate((2, 1, 1)) if t.shape == (2, 2)]
    assert sorted(t.rows for t in found) == [
        ((1, 3), (2, 4)),
        ((1, 4), (2, 3)),
        ((2, 3), (1, 4)),
        ((2, 4), (1, 3)),
    ]


def test_ift_contains_reference_tableau():
    target = IFTableau((2, 2, 2), (3, 2, 1), ((1, 4, 6), (3, 5), (2,)))
    assert target in list(ift_enumerate((2, 2, 2)))


def test_ift_brute_force_filter_oracle():
    # independent enumeration: filter every bijective filling of every shape
    def brute(mu):
        data = attacking_data(mu)
        n = sum(mu)
        out = set()
        for lam in partitions_of(n):
            rows_template = [list(range(width)) for width in lam]
            for perm in permutations(range(1, n + 1)):
                it = iter(perm)
                rows = tuple(tuple(next(it) for _ in row) for row in rows_template)
                ok = True
                for r, row in enumerate(rows):
                    for c, val in enumerate(row):
                        if c + 1 < len(row):
                            right = row[c + 1]
                            if val > right or data.g.has_edge(val, right):
                                ok = False
                        if r + 1 <= len(rows) - 1 and c < len(rows[r + 1]):
                            above = rows[r + 1][c]
                            if above < val and not data.g_plus.has_edge(above, val):
                                ok = False
                if ok:
                    out.add((lam, rows))
        return out

    for n in range(1, 6):
        for mu in partitions_of(n):
            mine = {(t.shape, t.rows) for t in ift_enumerate(mu)}
            assert mine == brute(mu)


def test_ift_deterministic_order():
    first = [(t.shape, t.rows) for t in ift_enumerate((2, 2))]
    assert first == [(t.shape, t.rows) for t in ift_enumerate((2, 2))]
    shapes = [t.shape for t in ift_enumerate((2, 2))]
    assert shapes == sorted(shapes, reverse=True)


def test_wt_mu_values_type_211():
    weights = {
        ((1, 3), (2, 4)): P("q") * P("1 - t") ** 2,
        ((1, 4), (2, 3)): P("q*t") * P("1 - t") * P("1 - q^2*t"),
        ((2, 3), (1, 4)): P("-t") * P("1 - q") * P("1 - q^2*t"),
        ((2, 4), (1, 3)): P("-q^2*t^2") * P("1 - q") * P("1 - t"),
    }
    for tableau in ift_enumerate((2, 1, 1)):
        if tableau.shape == (2, 2):
            assert wt_mu(tableau) == weights[tableau.rows]


def test_wt_mu_value_type_222():
    tableau = IFTableau((2, 2, 2), (3, 2, 1), ((1, 4, 6), (3, 5), (2,)))
    expected = P("q*t^2") * P("1 - t") ** 2 * P("1 - q^2*t") * P("1 - q^2*t^2")
    assert str(wt_mu(tableau)) == str(expected)


def test_wt_mu_polynomiality():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for tableau in ift_enumerate(mu):
                w = wt_mu(tableau)
                assert not w.has_negative_exponents()
                assert w.is_integral()


def test_filling_statistics_identity():
    for n in range(1, 6):
        for mu in partitions_of(n):
            data = attacking_data(mu)
            pairs = len(data.g.edges)
            expected = 2 * n_stat(conjugate(mu)) - mu[0] * (mu[0] - 1) // 2
            assert pairs == expected
            for values, maj, inv, arm_des, mask in non_attacking_fillings(mu):
                coinv = sum(
                    1 for u, v in data.g.edges if values[u - 1] < values[v - 1]
                )
                assert inv + coinv == expected
                assert 0 <= arm_des <= sum(a for _, a, _ in data.down_edges)


def test_prefactor():
    assert prefactor((1,)) == P("1 - t")
    assert prefactor((3, 2)) == LaurentQT.term(1, 0, -1) * P("1 - t") ** 3


def test_chromatic_expansion_structure():
    # single-row shapes have exactly one summand, so the routes agree trivially
    assert j_chromatic((3,)) == j_hhl((3,))
    assert j_chromatic((4,)) == j_hhl((4,))


def test_chromatic_sum_factors_for_32():
    # the two down-edges of (3,2) carry (arm,leg) = (1,0) and (0,0), so the
    # four sandwich terms pick up (1-qt^2)(1-qt), -(1-qt)^2, -(1-qt^2)(1-q),
    # (1-qt)(1-q), with global factor t^-1 (1-t)^3
    data = attacking_data((3, 2))
    out = [P("1 - q*t^2"), P("1 - q*t")]
    inn = [P("-1 + q*t"), P("-1 + q")]
    expected = {
        0b00: out[0] * out[1],
        0b01: inn[0] * out[1],
        0b10: out[0] * inn[1],
        0b11: inn[0] * inn[1],
    }
    for i, (_, arm_u, leg_u) in enumerate(data.down_edges):
        assert P("1") - LaurentQT.term(1, leg_u + 1, arm_u + 1) == out[i]
        assert -(P("1") - LaurentQT.term(1, leg_u + 1, arm_u)) == inn[i]
    assert expected[0b01] == -(P("1 - q*t") * P("1 - q*t"))
    assert prefactor((3, 2)) == LaurentQT.term(1, 0, -1) * P("1 - t") ** 3


def test_four_way_equality_small():
    for n in range(1, 6):
        for mu in partitions_of(n):
            reference = j_hhl(mu)
            assert j_chromatic(mu) == reference
            assert convert(j_schur(mu), "monomial") == reference
            assert convert(j_power(mu), "monomial") == reference


def test_hhl_output_is_polynomial():
    for n in range(1, 6):
        for mu in partitions_of(n):
            for c in j_hhl(mu).coeffs.values():
                assert not c.has_negative_exponents()
                assert c.is_integral()


def test_wt_p_membership_check():
    data = attacking_data((2, 1, 1))
    valid = n_lambda(data.g_plus, (2, 2))
    for bp in valid:
        wt_p(bp, (2, 1, 1))
    from macchroma.chromatic import BlockPermutation

    sigmas = {bp.sigma for bp in valid}
    for sigma in permutations(range(1, 5)):
        if sigma not in sigmas:
            with pytest.raises(ValueError):
                wt_p(BlockPermutation((2, 2), sigma), (2, 1, 1))
            break


def test_wt_p_degree_one():
    bp = n_lambda(attacking_data((1,)).g_plus, (1,))[0]
    assert wt_p(bp, (1,)) == LaurentQT.one()


def test_degree_zero_expansions():
    for fn in (j_hhl, j_chromatic, j_schur, j_power):
        f = fn(())
        assert f.coeffs == {(): LaurentQT.one()}
