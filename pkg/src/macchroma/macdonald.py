"""Four independent computations of the integral form Macdonald polynomial.

All four return the polynomial indexed by the conjugate of the input diagram
(the filling formulas naturally produce that indexing):

* ``j_hhl``        -- non-attacking fillings weighted by maj/inv statistics
                      (the defining route everything else is checked against),
* ``j_chromatic``  -- weighted sum of chromatic quasisymmetric functions over
                      the sandwich graphs between the attacking graph and its
                      augmentation,
* ``j_schur``      -- integral form tableaux with q,t edge weights,
* ``j_power``      -- block permutations with case-by-case edge weights.

Intermediate values are Laurent (negative t-exponents appear inside both the
filling and tableau weights); the final expansions must come out polynomial,
and ``j_chromatic`` raises ``IdentityViolation`` if they do not.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .chromatic import (
    IdentityViolation,
    BlockPermutation,
    _has_graph_descent,
    _has_nontrivial_lr_maximum,
    graph_tableaux,
    n_lambda,
    perm_inv,
    tableau_inv,
    x_g,
)
from .graphs import attacking_data
from .rings import LaurentQT
from .shapes import Diagram, check_partition, conjugate, n_stat, partitions_of
from .symfunc import SymFunc, omega, z_of

ONE_MINUS_T = LaurentQT.parse("1 - t")


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _one_minus_qt(q_exp: int, t_exp: int) -> LaurentQT:
    """1 - q^q_exp * t^t_exp."""
    return LaurentQT.one() - LaurentQT.term(1, q_exp, t_exp)


@lru_cache(maxsize=None)
def _attacking(mu):
    return attacking_data(mu)


def prefactor(mu) -> LaurentQT:
    """t^(-n(mu') + C(mu_1, 2)) * (1 - t)^mu_1."""
    mu = check_partition(mu)
    if not mu:
        return LaurentQT.one()
    nz = n_stat(conjugate(mu))
    return LaurentQT.term(1, 0, -nz + _binom2(mu[0])) * ONE_MINUS_T ** mu[0]


# ---------------------------------------------------------------------------
# Non-attacking fillings (shared with the Jack module)
# ---------------------------------------------------------------------------

def non_attacking_fillings(mu):
    """Yield (values, maj, inv_pairs, arm_des, equal_mask) over non-attacking
    fillings.

    ``values[label-1]`` is the entry of the reading-order cell ``label``;
    palette is {1..n}.  ``equal_mask`` has bit i set when the i-th down-edge's
    upper cell carries the same value as the cell below it.  maj adds
    leg(u)+1 for every descent cell (value exceeds the value below);
    ``inv_pairs`` counts attacking pairs (u earlier in reading order) with
    value(u) > value(v); ``arm_des`` sums arm(u) over the descent cells.  The
    filling statistic in the t-exponent is inv_pairs - arm_des: the plain
    pair count overshoots by exactly the descent arms, which is visible as a
    stray negative t-power already at the 2x2 square shape.
    """
    mu = check_partition(mu)
    diagram = Diagram(mu)
    n = diagram.n
    if n == 0:
        yield (), 0, 0, 0, 0
        return
    attack_prev = [[] for _ in range(n + 1)]
    for u, v in diagram.attacking_pairs():
        attack_prev[v].append(u)
    up_of = {v: u for u, v in diagram.down_by_label.items()}
    down_labels = sorted(diagram.down_by_label)
    bit_of_upper = {u: i for i, u in enumerate(down_labels)}
    leg1 = {u: diagram.leg_by_label[u] + 1 for u in down_labels}
    arm_of = {u: diagram.arm_by_label[u] for u in down_labels}
    values = [0] * (n + 1)

    def place(label, maj, inv, arm_des, mask):
        if label > n:
            yield tuple(values[1:]), maj, inv, arm_des, mask
            return
        upper = up_of.get(label)
        for val in range(1, n + 1):
            clash = False
            d_inv = 0
            for u in attack_prev[label]:
                if values[u] == val:
                    clash = True
                    break
                if values[u] > val:
                    d_inv += 1
            if clash:
                continue
            d_maj, d_arm, d_mask = 0, 0, 0
            if upper is not None:
                above = values[upper]
                if above == val:
                    d_mask = 1 << bit_of_upper[upper]
                elif above > val:
                    d_maj = leg1[upper]
                    d_arm = arm_of[upper]
            values[label] = val
            yield from place(label + 1, maj + d_maj, inv + d_inv, arm_des + d_arm, mask | d_mask)
        values[label] = 0

    yield from place(1, 0, 0, 0, 0)


def _monomial_from_buckets(buckets, n: int) -> SymFunc:
    coeffs = {}
    for lam in partitions_of(n):
        terms = buckets.get(lam + (0,) * (n - len(lam)))
        if terms:
            value = LaurentQT(terms)
            if not value.is_zero():
                coeffs[lam] = value
    return SymFunc(n, "monomial", coeffs, LaurentQT)


def j_hhl(mu) -> SymFunc:
    """Haglund-Haiman-Loehr filling formula, monomial basis."""
    mu = check_partition(mu)
    diagram = Diagram(mu)
    n = diagram.n
    if n == 0:
        return SymFunc(0, "monomial", {(): LaurentQT.one()}, LaurentQT)
    data = _attacking(mu)
    nz = n_stat(conjugate(mu))
    k = len(data.down_edges)
    equal_factor = [_one_minus_qt(leg + 1, arm + 1) for (_, arm, leg) in data.down_edges]
    one_minus_t_pow = [ONE_MINUS_T**i for i in range(n + 1)]
    pure = [LaurentQT.one()] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        pure[mask] = pure[mask ^ (1 << low)] * equal_factor[low]
    weight_by_mask = [
        pure[mask] * one_minus_t_pow[n - bin(mask).count("1")] for mask in range(1 << k)
    ]

    buckets: dict[tuple[int, ...], dict[tuple[int, int], Fraction]] = {}
    for values, maj, inv, arm_des, mask in non_attacking_fillings(mu):
        vec = [0] * n
        for val in values:
            vec[val - 1] += 1
        acc = buckets.setdefault(tuple(vec), {})
        t_shift = nz - (inv - arm_des)
        for (qa, tb), c in weight_by_mask[mask].terms.items():
            key = (qa + maj, tb + t_shift)
            s = acc.get(key, Fraction(0)) + c
            if s:
                acc[key] = s
            else:
                del acc[key]
    return _monomial_from_buckets(buckets, n)


def j_chromatic(mu) -> SymFunc:
    """Chromatic-sum formula over sandwich graphs, monomial basis."""
    mu = check_partition(mu)
    n = sum(mu)
    if n == 0:
        return SymFunc(0, "monomial", {(): LaurentQT.one()}, LaurentQT)
    data = _attacking(mu)
    in_factor = [-_one_minus_qt(leg + 1, arm) for (_, arm, leg) in data.down_edges]
    out_factor = [_one_minus_qt(leg + 1, arm + 1) for (_, arm, leg) in data.down_edges]
    k = len(data.down_edges)
    total = SymFunc(n, "monomial", {}, LaurentQT)
    for mask in range(1 << k):
        extra = [data.down_edges[i][0] for i in range(k) if mask >> i & 1]
        h = data.g.with_edges(extra)
        weight = LaurentQT.one()
        for i in range(k):
            weight = weight * (in_factor[i] if mask >> i & 1 else out_factor[i])
        total = total + x_g(h, with_t=True).mul_coeff(weight)
    result = total.mul_coeff(prefactor(mu))
    for lam, c in result.coeffs.items():
        if c.has_negative_exponents():
            raise IdentityViolation(f"Theorem identity violated: m_{lam} coefficient {c}")
    return result


# ---------------------------------------------------------------------------
# Integral form tableaux and the Schur formula
# ---------------------------------------------------------------------------

class IFTableau:
    """Bijective filling of a shape constrained by the attacking graphs of mu.

    ``rows`` is a tuple of row tuples, bottom row first (French convention).
    """

    __slots__ = ("mu", "shape", "rows")

    def __init__(self, mu, shape, rows):
        self.mu = tuple(mu)
        self.shape = tuple(shape)
        self.rows = tuple(tuple(r) for r in rows)

    def position_of(self, value: int):
        for r, row in enumerate(self.rows):
            for c, entry in enumerate(row):
                if entry == value:
                    return (r + 1, c + 1)
        raise ValueError(f"{value} not in tableau")

    def __eq__(self, other):
        return isinstance(other, IFTableau) and (self.mu, self.rows) == (other.mu, other.rows)

    def __hash__(self):
        return hash((self.mu, self.rows))

    def __repr__(self):
        return f"IFTableau(mu={self.mu}, rows={self.rows})"


def ift_enumerate(mu):
    """All integral form tableaux of type mu, shapes in descending lex order."""
    mu = check_partition(mu)
    n = sum(mu)
    data = _attacking(mu)
    for lam in partitions_of(n):
        for rows in graph_tableaux(lam, n, data.g, data.g_plus):
            yield IFTableau(mu, lam, rows)


def wt_mu(tableau: IFTableau) -> LaurentQT:
    """q,t-weight of an integral form tableau.

    Each down-edge {u, v} contributes one factor picked by where u sits
    relative to v in the tableau (left-adjacent, directly on top, higher row,
    or anything else); the whole product is scaled by t to the number of
    attacking edges whose smaller label sits in a strictly higher row.
    """
    data = _attacking(tableau.mu)
    pos = {}
    for r, row in enumerate(tableau.rows, start=1):
        for c, entry in enumerate(row, start=1):
            pos[entry] = (r, c)
    weight = LaurentQT.term(1, 0, tableau_inv(tableau.rows, data.g))
    for (u, v), arm_u, leg_u in data.down_edges:
        ru, cu = pos[u]
        rv, cv = pos[v]
        if ru == rv and cv == cu + 1:
            factor = LaurentQT.term(1, 0, -arm_u) * _one_minus_qt(leg_u + 1, arm_u + 1)
        elif ru == rv + 1 and cu == cv:
            factor = LaurentQT.term(-1, 0, -arm_u + 1) * _one_minus_qt(leg_u + 1, arm_u)
        elif ru > rv:
            factor = LaurentQT.term(1, 0, -arm_u) * ONE_MINUS_T
        else:
            factor = LaurentQT.term(1, leg_u + 1, 0) * ONE_MINUS_T
        weight = weight * factor
    return weight


def j_schur(mu) -> SymFunc:
    """Integral form tableau formula, Schur basis."""
    mu = check_partition(mu)
    n = sum(mu)
    if n == 0:
        return SymFunc(0, "schur", {(): LaurentQT.one()}, LaurentQT)
    scale = ONE_MINUS_T ** mu[0]
    coeffs: dict[tuple[int, ...], LaurentQT] = {}
    for tableau in ift_enumerate(mu):
        w = wt_mu(tableau)
        lam = tableau.shape
        coeffs[lam] = coeffs.get(lam, LaurentQT.zero()) + w
    return SymFunc(n, "schur", {lam: c * scale for lam, c in coeffs.items()}, LaurentQT)


# ---------------------------------------------------------------------------
# Power sum formula
# ---------------------------------------------------------------------------

def _is_lr_graph_max_at(sigma, block_of, j, graph) -> bool:
    """Nontrivial left-to-right graph maximum at position j (0-based)."""
    if j == 0 or block_of[j] != block_of[j - 1]:
        return False
    i = j - 1
    while i >= 0 and block_of[i] == block_of[j]:
        if sigma[i] > sigma[j] or graph.has_edge(sigma[i], sigma[j]):
            return False
        i -= 1
    return True


def wt_p(bp: BlockPermutation, mu) -> LaurentQT:
    """Weight of a block permutation in the power sum formula.

    The permutation must avoid graph descents and nontrivial left-to-right
    maxima with respect to the augmented attacking graph.  The weight is t to
    the number of inversion pairs lying on attacking-graph edges (the same
    role t^inv plays in the tableau weight) times one factor per down-edge
    {u, v}, picked by the first case that applies: v directly before u inside
    a block, v a nontrivial left-to-right maximum for the plain attacking
    graph, v anywhere before u, or u before v.
    """
    mu = check_partition(mu)
    data = _attacking(mu)
    sigma = bp.sigma
    block_of = bp.block_of
    if _has_graph_descent(sigma, block_of, data.g_plus) or _has_nontrivial_lr_maximum(
        sigma, block_of, data.g_plus
    ):
        raise ValueError("permutation outside N_lambda of the augmented attacking graph")
    pos_of = {val: i for i, val in enumerate(sigma)}
    weight = LaurentQT.term(1, 0, perm_inv(data.g, sigma))
    for (u, v), arm_u, leg_u in data.down_edges:
        pu, pv = pos_of[u], pos_of[v]
        if pu == pv + 1 and block_of[pu] == block_of[pv]:
            factor = LaurentQT.term(-1, 0, 1) * _one_minus_qt(leg_u + 1, arm_u)
        elif _is_lr_graph_max_at(sigma, block_of, pv, data.g):
            factor = -_one_minus_qt(leg_u + 1, arm_u)
        elif pv < pu:
            factor = ONE_MINUS_T
        else:
            factor = LaurentQT.term(1, leg_u + 1, arm_u) * ONE_MINUS_T
        weight = weight * factor
    return weight


def j_power(mu) -> SymFunc:
    """Block permutation formula, power basis (returns J itself, not omega J)."""
    mu = check_partition(mu)
    n = sum(mu)
    if n == 0:
        return SymFunc(0, "power", {(): LaurentQT.one()}, LaurentQT)
    data = _attacking(mu)
    pref = prefactor(mu)
    coeffs = {}
    for lam in partitions_of(n):
        total = LaurentQT.zero()
        for bp in n_lambda(data.g_plus, lam):
            total = total + wt_p(bp, mu)
        value = (total * pref).scale(Fraction(1, z_of(lam)))
        if not value.is_zero():
            coeffs[lam] = value
    return omega(SymFunc(n, "power", coeffs, LaurentQT))
