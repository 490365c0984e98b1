import random
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from macchroma.rings import AlphaPoly, LaurentQT
from macchroma.shapes import conjugate, partitions_of
from macchroma.symfunc import (
    SymFunc,
    convert,
    kostka,
    multiply_monomial,
    omega,
    schur_positive,
    transition_table,
    z_of,
)

P = LaurentQT.parse


def random_symfunc(rng, n, basis="monomial"):
    coeffs = {}
    for lam in partitions_of(n):
        if rng.random() < 0.6:
            coeffs[lam] = LaurentQT.term(rng.randint(-5, 5), rng.randint(0, 2), rng.randint(0, 2))
    return SymFunc(n, basis, coeffs, LaurentQT)


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    for n in range(8):
        for lam in partitions_of(n):
            assert kostka(lam, lam) == 1
    with pytest.raises(ValueError):
        kostka((2,), (1, 1, 1))


def test_kostka_dominance_triangularity():
    # nonzero only when the shape dominates the content
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if kostka(lam, mu):
                    assert all(
                        sum(lam[: i + 1]) >= sum(mu[: i + 1]) for i in range(len(lam))
                    )


def test_z_values():
    assert z_of((2, 2)) == 8
    assert z_of((1,) * 5) == 120
    assert z_of(()) == 1


def test_z_matches_cycle_type_census():
    # independent census: count permutations by cycle type, compare n!/z
    for n in range(1, 8):
        census = {}
        for sigma in permutations(range(n)):
            seen = [False] * n
            lengths = []
            for start in range(n):
                if seen[start]:
                    continue
                length, v = 0, start
                while not seen[v]:
                    seen[v] = True
                    v = sigma[v]
                    length += 1
                lengths.append(length)
            key = tuple(sorted(lengths, reverse=True))
            census[key] = census.get(key, 0) + 1
        for lam in partitions_of(n):
            assert census.get(lam, 0) == factorial(n) // z_of(lam)


def test_monomial_to_schur_degree_two():
    f = SymFunc(2, "monomial", {(2,): LaurentQT.one()}, LaurentQT)
    s = convert(f, "schur")
    assert s.coeffs == {(2,): LaurentQT.one(), (1, 1): LaurentQT.from_int(-1)}


def test_power_to_monomial_degree_two():
    f = SymFunc(2, "power", {(1, 1): LaurentQT.one()}, LaurentQT)
    m = convert(f, "monomial")
    assert m.coeffs == {(2,): LaurentQT.one(), (1, 1): LaurentQT.from_int(2)}


def test_conversion_round_trips():
    rng = random.Random(31337)
    for n in range(0, 7):
        for basis in ("monomial", "schur", "power"):
            for _ in range(4):
                f = random_symfunc(rng, n, basis)
                for target in ("monomial", "schur", "power"):
                    assert convert(convert(f, target), basis) == f


def test_multiply_monomial_basic():
    e1 = SymFunc(1, "monomial", {(1,): LaurentQT.one()}, LaurentQT)
    prod = multiply_monomial(e1, e1)
    assert prod.coeffs == {(2,): LaurentQT.one(), (1, 1): LaurentQT.from_int(2)}
    one = SymFunc(0, "monomial", {(): LaurentQT.one()}, LaurentQT)
    f = random_symfunc(random.Random(5), 3)
    assert multiply_monomial(f, one) == f


def _evaluate(f: SymFunc, point):
    """Evaluation oracle: expand each monomial symmetric function at a point."""
    from macchroma.symfunc import _monomial_vectors

    total = Fraction(0)
    for lam, c in f.coeffs.items():
        s = Fraction(0)
        for vec in _monomial_vectors(lam, len(point)):
            term = Fraction(1)
            for x, e in zip(point, vec):
                term *= x**e
            s += term
        total += c.constant_value() * s
    return total


def test_multiply_monomial_against_evaluation_oracle():
    rng = random.Random(777)
    for _ in range(30):
        na, nb = rng.randint(1, 3), rng.randint(1, 2)
        f = SymFunc(na, "monomial",
                    {lam: LaurentQT.from_int(rng.randint(-4, 4)) for lam in partitions_of(na)},
                    LaurentQT)
        g = SymFunc(nb, "monomial",
                    {lam: LaurentQT.from_int(rng.randint(-4, 4)) for lam in partitions_of(nb)},
                    LaurentQT)
        prod = multiply_monomial(f, g)
        point = tuple(Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(na + nb))
        assert _evaluate(prod, point) == _evaluate(f, point) * _evaluate(g, point)


def test_multiply_monomial_commutes():
    rng = random.Random(11)
    for _ in range(10):
        f = random_symfunc(rng, 2)
        g = random_symfunc(rng, 3)
        assert multiply_monomial(f, g) == multiply_monomial(g, f)


def test_omega():
    s = SymFunc(3, "schur", {(2, 1): LaurentQT.one()}, LaurentQT)
    assert omega(s) == s
    p = SymFunc(3, "power", {(2, 1): LaurentQT.one()}, LaurentQT)
    assert omega(p).coeffs == {(2, 1): LaurentQT.from_int(-1)}
    rng = random.Random(2)
    for n in range(1, 7):
        for basis in ("schur", "power"):
            f = random_symfunc(rng, n, basis)
            assert omega(omega(f)) == f
    with pytest.raises(ValueError):
        omega(random_symfunc(rng, 3, "monomial"))


def test_omega_routes_commute():
    rng = random.Random(3)
    for n in range(1, 7):
        f = random_symfunc(rng, n, "schur")
        assert convert(omega(f), "power") == omega(convert(f, "power"))


def test_schur_positive():
    good = SymFunc(2, "schur", {(2,): P("1 + q*t")}, LaurentQT)
    assert schur_positive(good) == (True, None)
    bad = SymFunc(2, "schur", {(2,): P("q - t")}, LaurentQT)
    ok, witness = schur_positive(bad)
    assert not ok and witness == ((2,), "-t")
    laurent = SymFunc(2, "schur", {(1, 1): P("t^-1")}, LaurentQT)
    ok, witness = schur_positive(laurent)
    assert not ok and witness == ((1, 1), "t^-1")


def test_unitriangularity_of_kostka_table():
    for n in range(1, 7):
        table = transition_table(n)
        for i, lam in enumerate(table.partitions):
            assert table.kostka[i][i] == 1
            for j in range(i):
                # earlier in descending lex means not dominated; entry must vanish
                assert table.kostka[i][j] == 0


def test_alpha_ring_conversions():
    f = SymFunc(3, "monomial",
                {(3,): AlphaPoly.parse("1 + a"), (2, 1): AlphaPoly.parse("2"),
                 (1, 1, 1): AlphaPoly.parse("a^2")},
                AlphaPoly)
    for target in ("schur", "power"):
        assert convert(convert(f, target), "monomial") == f


def test_degree_zero():
    unit = SymFunc(0, "monomial", {(): LaurentQT.one()}, LaurentQT)
    assert convert(unit, "schur").coeffs == {(): LaurentQT.one()}
    assert convert(unit, "power").coeffs == {(): LaurentQT.one()}


def test_json_shape():
    f = SymFunc(4, "schur", {(2, 2): P("1 - q*t")}, LaurentQT)
    blob = f.to_json_dict()
    assert blob == {
        "object": "symfunc",
        "degree": 4,
        "basis": "schur",
        "ring": "laurent_qt",
        "terms": [{"index": [2, 2], "coeff": "1 - q*t"}],
    }


def test_conjugate_index_consistency():
    # omega on schur moves coefficients to conjugate indices
    f = SymFunc(4, "schur", {(3, 1): P("q")}, LaurentQT)
    assert omega(f).coeffs == {conjugate((3, 1)): P("q")}
