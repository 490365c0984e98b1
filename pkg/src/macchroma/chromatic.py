"""Chromatic symmetric and quasisymmetric functions of labeled graphs.

Expansion routes implemented here:

* monomial basis by direct enumeration of proper colorings with palette n,
  ascent-weighted (``x_g``), plus the all-colorings variant (``llt_g``);
* Schur basis through graph tableaux for claw-free graphs (``x_g_schur``);
* power sum basis through block permutations free of graph descents and of
  nontrivial left-to-right graph maxima (``x_g_power``).

Every enumeration collects coefficients of full exponent vectors first and
audits that the result is genuinely symmetric before reading off monomial
coefficients; an asymmetric result means the graph is outside the class the
expansion theorems cover, and raises ``IdentityViolation``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .graphs import UGraph, all_colorings, is_claw_free, proper_colorings
from .rings import LaurentQT, RatFunQT
from .shapes import partitions_of
from .symfunc import SymFunc, convert, omega, z_of

__all__ = [
    "IdentityViolation",
    "x_g",
    "x_g_schur",
    "x_g_power",
    "llt_g",
    "llt_power_tilde",
    "verify_plethysm",
    "n_lambda",
    "n_tilde",
    "graph_tableaux",
    "tableau_inv",
    "perm_inv",
    "BlockPermutation",
    "t_analogue",
    "coloring_census",
]


class IdentityViolation(ArithmeticError):
    """A theorem-level identity failed; signals a bug or an input outside scope."""


# ---------------------------------------------------------------------------
# Coloring census and monomial collection
# ---------------------------------------------------------------------------

def coloring_census(h: UGraph, proper: bool = True):
    """Histogram {exponent vector: {ascents: count}} over palette-n colorings."""
    n = h.n
    census: dict[tuple[int, ...], dict[int, int]] = {}
    source = proper_colorings(h, n) if proper else all_colorings(h, n)
    for coloring, asc in source:
        vec = [0] * n
        for c in coloring:
            vec[c - 1] += 1
        key = tuple(vec)
        hist = census.setdefault(key, {})
        hist[asc] = hist.get(asc, 0) + 1
    return census


def _rearrangement_count(typ) -> int:
    mult: dict[int, int] = {}
    for x in typ:
        mult[x] = mult.get(x, 0) + 1
    count = factorial(len(typ))
    for m in mult.values():
        count //= factorial(m)
    return count


def _audit_symmetry(census, n, what: str):
    groups: dict[tuple[int, ...], list] = {}
    for vec, hist in census.items():
        groups.setdefault(tuple(sorted(vec, reverse=True)), []).append(hist)
    for typ, hists in groups.items():
        first = hists[0]
        if any(h != first for h in hists[1:]) or len(hists) != _rearrangement_count(typ):
            raise IdentityViolation(f"{what} not symmetric (type {typ})")


def _census_to_monomial(census, n: int, with_t: bool) -> SymFunc:
    coeffs = {}
    for lam in partitions_of(n):
        hist = census.get(lam + (0,) * (n - len(lam)))
        if not hist:
            continue
        if with_t:
            coeffs[lam] = LaurentQT({(0, asc): Fraction(c) for asc, c in hist.items()})
        else:
            coeffs[lam] = LaurentQT.from_int(sum(hist.values()))
    return SymFunc(n, "monomial", coeffs, LaurentQT)


def x_g(h: UGraph, with_t: bool = True) -> SymFunc:
    """Chromatic (quasi)symmetric function in the monomial basis.

    With ``with_t`` the coefficient of each monomial is the ascent generating
    polynomial in t; without it every coloring counts 1.
    """
    if h.n == 0:
        return SymFunc(0, "monomial", {(): LaurentQT.one()}, LaurentQT)
    census = coloring_census(h, proper=True)
    _audit_symmetry(census, h.n, "X_H")
    return _census_to_monomial(census, h.n, with_t)


def llt_g(h: UGraph) -> SymFunc:
    """Ascent generating function over all (not necessarily proper) colorings."""
    if h.n == 0:
        return SymFunc(0, "monomial", {(): LaurentQT.one()}, LaurentQT)
    census = coloring_census(h, proper=False)
    _audit_symmetry(census, h.n, "LLT_G")
    return _census_to_monomial(census, h.n, True)


# ---------------------------------------------------------------------------
# Graph tableaux and the Schur expansion
# ---------------------------------------------------------------------------

def graph_tableaux(shape, n: int, horiz: UGraph, vert: UGraph):
    """Yield bijective fillings of a French shape under graph constraints.

    Rows increase left to right; horizontally adjacent entries must not be an
    edge of ``horiz``; for ``u`` directly above ``v``, either u > v or {u,v}
    is an edge of ``vert``.  Cells are filled bottom row first, left to
    right, trying values in ascending order, so the output order is fixed.
    """
    shape = tuple(shape)
    if sum(shape) != n:
        raise ValueError("shape size must equal n")
    rows = [[0] * width for width in shape]
    used = [False] * (n + 1)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]

    def place(idx):
        if idx == len(cells):
            yield tuple(tuple(row) for row in rows)
            return
        r, c = cells[idx]
        left = rows[r][c - 1] if c > 0 else 0
        below = rows[r - 1][c] if r > 0 else 0
        for val in range(left + 1, n + 1):
            if used[val]:
                continue
            if left and horiz.has_edge(left, val):
                continue
            if below and val < below and not vert.has_edge(val, below):
                continue
            rows[r][c] = val
            used[val] = True
            yield from place(idx + 1)
            used[val] = False
        rows[r][c] = 0

    yield from place(0)


def tableau_inv(rows, graph: UGraph) -> int:
    """Edges {u,v}, u < v, whose smaller endpoint sits in a strictly higher row."""
    row_of = {}
    for r, row in enumerate(rows):
        for val in row:
            row_of[val] = r
    return sum(1 for u, v in graph.edges if row_of[u] > row_of[v])


def x_g_schur(h: UGraph) -> SymFunc:
    """Schur expansion of X_H(x;t) via graph tableaux; requires claw-free H."""
    if not is_claw_free(h):
        raise ValueError("graph has an induced claw; Schur tableau expansion needs claw-free input")
    n = h.n
    coeffs = {}
    for lam in partitions_of(n):
        total = LaurentQT.zero()
        for rows in graph_tableaux(lam, n, h, h):
            total = total + LaurentQT.term(1, 0, tableau_inv(rows, h))
        if not total.is_zero():
            coeffs[lam] = total
    return SymFunc(n, "schur", coeffs, LaurentQT)


# ---------------------------------------------------------------------------
# Block permutations and the power sum expansion
# ---------------------------------------------------------------------------

class BlockPermutation:
    """A permutation in one-line notation cut into blocks of lengths lam."""

    __slots__ = ("lam", "sigma", "block_of")

    def __init__(self, lam, sigma):
        lam = tuple(lam)
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, sum(lam) + 1)):
            raise ValueError("sigma must be a permutation of 1..n")
        block_of = []
        for b, length in enumerate(lam):
            block_of.extend([b] * length)
        self.lam = lam
        self.sigma = sigma
        self.block_of = tuple(block_of)

    def __eq__(self, other):
        return (
            isinstance(other, BlockPermutation)
            and self.lam == other.lam
            and self.sigma == other.sigma
        )

    def __hash__(self):
        return hash((self.lam, self.sigma))

    def __repr__(self):
        return f"BlockPermutation(lam={self.lam}, sigma={self.sigma})"


def _has_graph_descent(sigma, block_of, h: UGraph) -> bool:
    for i in range(len(sigma) - 1):
        if block_of[i] != block_of[i + 1]:
            continue
        if sigma[i] > sigma[i + 1] and not h.has_edge(sigma[i + 1], sigma[i]):
            return True
    return False


def _has_nontrivial_lr_maximum(sigma, block_of, h: UGraph) -> bool:
    for j in range(1, len(sigma)):
        if block_of[j] != block_of[j - 1]:
            continue
        i = j - 1
        ok = True
        while i >= 0 and block_of[i] == block_of[j]:
            if sigma[i] > sigma[j] or h.has_edge(sigma[i], sigma[j]):
                ok = False
                break
            i -= 1
        if ok:
            return True
    return False


def n_lambda(h: UGraph, lam) -> list:
    """Permutations with no graph descents and no nontrivial LR graph maxima."""
    from itertools import permutations

    lam = tuple(lam)
    n = sum(lam)
    if n != h.n:
        raise ValueError("partition size must equal vertex count")
    block_of = []
    for b, length in enumerate(lam):
        block_of.extend([b] * length)
    out = []
    for sigma in permutations(range(1, n + 1)):
        if _has_graph_descent(sigma, block_of, h):
            continue
        if _has_nontrivial_lr_maximum(sigma, block_of, h):
            continue
        out.append(BlockPermutation(lam, sigma))
    return out


def perm_inv(h: UGraph, sigma) -> int:
    """Inversions of sigma that are edges of h."""
    n = len(sigma)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if sigma[i] > sigma[j] and h.has_edge(sigma[j], sigma[i])
    )


def x_g_power(h: UGraph) -> SymFunc:
    """Power sum expansion of omega X_H(x;t); the caller un-omegas to compare."""
    n = h.n
    coeffs = {}
    for lam in partitions_of(n):
        total = LaurentQT.zero()
        for bp in n_lambda(h, lam):
            total = total + LaurentQT.term(1, 0, perm_inv(h, bp.sigma))
        if not total.is_zero():
            coeffs[lam] = total.scale(Fraction(1, z_of(lam)))
    return SymFunc(n, "power", coeffs, LaurentQT)


# ---------------------------------------------------------------------------
# LLT power sum formulas and the plethystic identity
# ---------------------------------------------------------------------------

def n_tilde(h: UGraph, lam) -> list:
    """Block permutations whose blocks start at their minimum and whose
    in-block ascents are edges of h.

    Note: the consecutive-ascent condition must read "is an edge"; the
    non-edge reading contradicts the divided form already at two vertices.
    """
    from itertools import permutations

    lam = tuple(lam)
    n = sum(lam)
    if n != h.n:
        raise ValueError("partition size must equal vertex count")
    bounds = []
    start = 0
    for length in lam:
        bounds.append((start, start + length))
        start += length
    out = []
    for sigma in permutations(range(1, n + 1)):
        ok = True
        for lo, hi in bounds:
            block = sigma[lo:hi]
            if block[0] != min(block):
                ok = False
                break
            for i in range(len(block) - 1):
                if block[i] < block[i + 1] and not h.has_edge(block[i], block[i + 1]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(BlockPermutation(lam, sigma))
    return out


def t_analogue(k: int) -> LaurentQT:
    """1 + t + ... + t^(k-1)."""
    return LaurentQT({(0, i): Fraction(1) for i in range(k)})


def llt_power_tilde(h: UGraph) -> SymFunc:
    """omega LLT in the power basis from the tilde permutation sets."""
    n = h.n
    t_minus_1 = LaurentQT.parse("-1 + t")
    coeffs = {}
    for lam in partitions_of(n):
        total = LaurentQT.zero()
        for bp in n_tilde(h, lam):
            total = total + LaurentQT.term(1, 0, perm_inv(h, bp.sigma))
        value = (t_minus_1 ** (n - len(lam))) * total
        if not value.is_zero():
            coeffs[lam] = RatFunQT(value.scale(Fraction(1, z_of(lam))))
    return SymFunc(n, "power", coeffs, RatFunQT)


def _llt_power_divided(h: UGraph) -> SymFunc:
    """omega LLT in the power basis from N_lambda sums divided by t-analogues."""
    n = h.n
    t_minus_1 = LaurentQT.parse("-1 + t")
    coeffs = {}
    for lam in partitions_of(n):
        total = LaurentQT.zero()
        for bp in n_lambda(h, lam):
            total = total + LaurentQT.term(1, 0, perm_inv(h, bp.sigma))
        num = (t_minus_1 ** (n - len(lam))) * total
        den = LaurentQT.one()
        for part in lam:
            den = den * t_analogue(part)
        value = RatFunQT(num.scale(Fraction(1, z_of(lam))), den)
        if not value.is_zero():
            coeffs[lam] = value
    return SymFunc(n, "power", coeffs, RatFunQT)


def verify_plethysm(h: UGraph) -> bool:
    """Cross-check every LLT power sum route against direct enumeration.

    Checks, all as exact RatFunQT identities:
      1. the tilde formula equals omega of the enumerated LLT,
      2. the divided N_lambda form equals the same,
      3. coefficientwise, LLT equals (t-1)^n X[p_k -> p_k/(t^k - 1)],
      4. each N_lambda inversion sum is exactly divisible by the product of
         the t-analogues of the parts.
    """
    n = h.n
    direct = omega(convert(llt_g(h), "power"))
    tilde = llt_power_tilde(h)
    divided = _llt_power_divided(h)
    x_power = convert(x_g(h), "power")
    llt_power = convert(llt_g(h), "power")
    t_minus_1 = LaurentQT.parse("-1 + t")

    for lam in partitions_of(n):
        want = RatFunQT(direct.get(lam))
        if tilde.get(lam) != want or divided.get(lam) != want:
            return False
        # plethystic identity LLT = (t-1)^n X[x/(t-1)]
        den = LaurentQT.one()
        for part in lam:
            den = den * (LaurentQT.term(1, 0, part) - LaurentQT.one())
        lhs = RatFunQT(llt_power.get(lam))
        rhs = RatFunQT(x_power.get(lam) * t_minus_1**n, den)
        if lhs != rhs:
            return False
        # divisibility of the N_lambda sum by the t-analogue product
        total = LaurentQT.zero()
        for bp in n_lambda(h, lam):
            total = total + LaurentQT.term(1, 0, perm_inv(h, bp.sigma))
        analogue = LaurentQT.one()
        for part in lam:
            analogue = analogue * t_analogue(part)
        try:
            total.exact_div(analogue)
        except ArithmeticError:
            return False
    return True
