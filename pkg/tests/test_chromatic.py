from fractions import Fraction
from itertools import permutations

import pytest

from macchroma.chromatic import (
    IdentityViolation,
    BlockPermutation,
    llt_g,
    llt_power_tilde,
    n_lambda,
    n_tilde,
    perm_inv,
    t_analogue,
    verify_plethysm,
    x_g,
    x_g_power,
    x_g_schur,
)
from macchroma.graphs import UGraph, attacking_data, sandwich_graphs
from macchroma.rings import LaurentQT, RatFunQT
from macchroma.shapes import partitions_of
from macchroma.symfunc import convert, omega

P = LaurentQT.parse


def test_x_g_empty_graph():
    f = x_g(UGraph(2))
    assert f.coeffs == {(2,): LaurentQT.one(), (1, 1): LaurentQT.from_int(2)}


def test_x_g_single_edge():
    f = x_g(UGraph(2, [(1, 2)]))
    assert f.coeffs == {(1, 1): P("1 + t")}
    flat = x_g(UGraph(2, [(1, 2)]), with_t=False)
    assert flat.coeffs == {(1, 1): LaurentQT.from_int(2)}


def test_x_g_symmetry_audit():
    complete = UGraph(3, [(1, 2), (1, 3), (2, 3)])
    f = x_g(complete)
    assert f.coeffs[(1, 1, 1)] == P("1 + 2*t + 2*t^2 + t^3")
    # the cherry with both edges into vertex 3 has asymmetric ascent counts:
    # content (1,1,2) forces ascents on both edges, content (2,2,1) forces none
    crooked = UGraph(3, [(1, 3), (2, 3)])
    with pytest.raises(IdentityViolation):
        x_g(crooked)


def test_x_g_schur_small_graphs():
    empty = x_g_schur(UGraph(2))
    assert empty.coeffs == {(2,): LaurentQT.one(), (1, 1): LaurentQT.one()}
    edge = x_g_schur(UGraph(2, [(1, 2)]))
    assert edge.coeffs == {(1, 1): P("1 + t")}


def test_x_g_schur_requires_claw_free():
    with pytest.raises(ValueError):
        x_g_schur(UGraph(4, [(1, 2), (1, 3), (1, 4)]))


def test_n_lambda_small_cases():
    empty = UGraph(2)
    assert n_lambda(empty, (2,)) == []
    assert [bp.sigma for bp in n_lambda(empty, (1, 1))] == [(1, 2), (2, 1)]
    edge = UGraph(2, [(1, 2)])
    assert [bp.sigma for bp in n_lambda(edge, (2,))] == [(1, 2), (2, 1)]


def test_n_lambda_singleton_blocks_admit_everything():
    for n in range(1, 6):
        g = UGraph(n, [(i, i + 1) for i in range(1, n)])
        assert len(n_lambda(g, (1,) * n)) == len(list(permutations(range(n))))


def test_n_lambda_brute_filter_oracle():
    # independent filter written from the two conditions directly
    def oracle(h, lam):
        n = sum(lam)
        bounds = []
        start = 0
        for part in lam:
            bounds.append((start, start + part))
            start += part
        out = []
        for sigma in permutations(range(1, n + 1)):
            ok = True
            for lo, hi in bounds:
                block = sigma[lo:hi]
                for i in range(len(block) - 1):
                    if block[i] > block[i + 1] and not h.has_edge(block[i + 1], block[i]):
                        ok = False
                for j in range(1, len(block)):
                    if all(block[i] < block[j] and not h.has_edge(block[i], block[j])
                           for i in range(j)):
                        ok = False
            if ok:
                out.append(sigma)
        return out

    for mu in partitions_of(4):
        data = attacking_data(mu)
        for h in sandwich_graphs(data):
            for lam in partitions_of(4):
                assert [bp.sigma for bp in n_lambda(h, lam)] == oracle(h, lam)


def test_perm_inv():
    g = UGraph(3, [(1, 2), (2, 3)])
    assert perm_inv(g, (3, 2, 1)) == 2  # pairs (3,2) and (2,1) are edges; (3,1) is not
    assert perm_inv(g, (1, 2, 3)) == 0


def test_x_g_power_reproduces_direct_expansion():
    for edges in ([], [(1, 2)]):
        h = UGraph(2, edges)
        assert omega(x_g_power(h)) == convert(x_g(h), "power")
    chain = UGraph(3, [(1, 2), (2, 3)])
    assert omega(x_g_power(chain)) == convert(x_g(chain), "power")


def test_block_permutation_validation():
    bp = BlockPermutation((2, 1), (2, 1, 3))
    assert bp.block_of == (0, 0, 1)
    with pytest.raises(ValueError):
        BlockPermutation((2, 1), (1, 1, 2))


def test_llt_small_graphs():
    assert llt_g(UGraph(2)).coeffs == {(2,): LaurentQT.one(), (1, 1): LaurentQT.from_int(2)}
    got = llt_g(UGraph(2, [(1, 2)]))
    assert got.coeffs == {(2,): LaurentQT.one(), (1, 1): P("1 + t")}


def test_llt_at_t_equals_one_counts_all_colorings():
    for mu in partitions_of(3):
        data = attacking_data(mu)
        f = llt_g(data.g_plus)
        total = sum(
            (c.substitute_t(1, 0).constant_value() * _count_rearrangements(lam, 3)
             for lam, c in f.coeffs.items()),
            Fraction(0),
        )
        assert total == 3**3


def _count_rearrangements(lam, n):
    from math import factorial

    padded = list(lam) + [0] * (n - len(lam))
    count = factorial(n)
    for v in set(padded):
        count //= factorial(padded.count(v))
    return count


def test_llt_of_edgeless_graph_is_first_power_sum_to_the_n():
    f = convert(llt_g(UGraph(3)), "power")
    assert f.coeffs == {(1, 1, 1): LaurentQT.one()}


def test_n_tilde_membership():
    edge = UGraph(2, [(1, 2)])
    assert [bp.sigma for bp in n_tilde(edge, (2,))] == [(1, 2)]
    empty = UGraph(2)
    assert [bp.sigma for bp in n_tilde(empty, (2,))] == []
    assert len(n_tilde(empty, (1, 1))) == 2


def test_t_analogue():
    assert t_analogue(1) == LaurentQT.one()
    assert t_analogue(3) == P("1 + t + t^2")


def test_llt_power_tilde_small():
    h = UGraph(2, [(1, 2)])
    tilde = llt_power_tilde(h)
    direct = omega(convert(llt_g(h), "power"))
    for lam in partitions_of(2):
        assert tilde.get(lam) == RatFunQT(direct.get(lam))


def test_verify_plethysm_small_graphs():
    assert verify_plethysm(UGraph(2))
    assert verify_plethysm(UGraph(2, [(1, 2)]))
    data = attacking_data((2, 1))
    for h in sandwich_graphs(data):
        assert verify_plethysm(h)


def test_tilde_sum_times_analogue_matches_plain_sum():
    # the inversion sum over the unrestricted set factors through the t-analogues
    for mu in partitions_of(4):
        data = attacking_data(mu)
        for h in sandwich_graphs(data):
            for lam in partitions_of(4):
                plain = LaurentQT.zero()
                for bp in n_lambda(h, lam):
                    plain = plain + LaurentQT.term(1, 0, perm_inv(h, bp.sigma))
                tilde = LaurentQT.zero()
                for bp in n_tilde(h, lam):
                    tilde = tilde + LaurentQT.term(1, 0, perm_inv(h, bp.sigma))
                product = tilde
                for part in lam:
                    product = product * t_analogue(part)
                assert product == plain


def test_x_g_with_t_specializes_to_plain():
    for mu in partitions_of(4):
        data = attacking_data(mu)
        for h in sandwich_graphs(data):
            weighted = x_g(h, with_t=True)
            plain = x_g(h, with_t=False)
            assert weighted.map_coeffs(lambda c: c.substitute_t(1, 0)) == plain
