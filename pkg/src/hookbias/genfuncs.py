"""Generating functions for hooks of length two (and three) in odd and
distinct partitions, with and without a bound on the largest part.

Naming: ``a`` is the odd side (largest part at most ``2L - 1``), ``b`` the
distinct side (largest part at most ``L``).  ``*_inf`` drop the bound.
``*_weighted`` count each partition with ``binom(m, 2)``, ``m`` being its
number of hooks of length two.  Every constructor takes the truncation
order ``N`` explicitly.
"""
from __future__ import annotations

import math

from .errors import DomainError
from .qseries import (BivariateSeries, TruncatedSeries, binomial_series,
                      divide_exact, gaussian_binomial, geometric_ratio,
                      invert_unit, pad, poch)

INF = math.inf


def _check_L(L: int):
    if L < 1:
        raise DomainError("L must be a positive integer")


def _q(exp: int, N: int, coeff=1) -> TruncatedSeries:
    return TruncatedSeries.monomial(exp, N, coeff)


def _inv_odd_poch(L, N) -> TruncatedSeries:
    """``1 / (q; q^2)_L``: partitions into odd parts at most ``2L - 1``."""
    return invert_unit(poch(+1, 1, 2, L, N))


def _inv(factor_exp: int, N: int, sign: int = +1) -> TruncatedSeries:
    """``1 / (1 - sign*q^e)``."""
    return invert_unit(binomial_series(N, (0, 1), (factor_exp, -sign)))


def _gauss(m, n, r, N) -> TruncatedSeries:
    return pad(gaussian_binomial(m, n, r), N)


# --------------------------------------------------------------------------
# Total counts of hooks of length two
# --------------------------------------------------------------------------

def gf_a2(L: int, N: int) -> TruncatedSeries:
    _check_L(L)
    bracket = (_q(2, N)
               + geometric_ratio(2 * L - 2, 2, N).shift(3)
               + geometric_ratio(4 * L - 4, 4, N).shift(6))
    return _inv_odd_poch(L, N) * bracket


def gf_b2(L: int, N: int) -> TruncatedSeries:
    _check_L(L)
    return geometric_ratio(L - 1, 1, N).shift(2) * poch(-1, 2, 1, L - 2, N)


def gf_a2_inf(N: int) -> TruncatedSeries:
    terms = {2: 1}
    for n in range(2, N + 2):
        for e in (2 * n - 1, 4 * n - 2):
            if e <= N:
                terms[e] = terms.get(e, 0) + 1
    return _inv_odd_poch(INF, N) * TruncatedSeries.from_terms(terms, N)


def gf_b2_inf(N: int) -> TruncatedSeries:
    return _inv(1, N).shift(2) * poch(-1, 2, 1, INF, N)


def gf_a3_inf(N: int) -> TruncatedSeries:
    first = poch(-1, 3, 1, INF, N) * binomial_series(N, (3, 1), (6, 1)) * _inv(2, N)
    second = poch(-1, 1, 1, INF, N) * (_inv(4, N).shift(6) + _inv(6, N).shift(3))
    return first + second


def gf_b3_inf(N: int) -> TruncatedSeries:
    inner = TruncatedSeries.zero(N)
    for m in range(2, N + 1):
        inner = inner + _inv(m, N, sign=-1).shift(m)
    return poch(-1, 1, 1, INF, N) * inner - _inv(2, N).shift(2) * poch(-1, 3, 1, INF, N)


# --------------------------------------------------------------------------
# binom(m, 2)-weighted counts
# --------------------------------------------------------------------------

def quotient_middle_term(L: int, N: int | None = None) -> TruncatedSeries:
    """``(1-q^2)/(1-q^{2L}) [L;3]_{q^2} ((1+q^2)(1+q^{2L-2}) + q^2 + q^{2L})``.

    With ``N=None`` the division must be exact as polynomials and raises
    :class:`ExactnessError` otherwise (it does whenever ``3 | L``).  With an
    explicit ``N`` the quotient is expanded as a power series to order ``N``.
    """
    _check_L(L)
    if L < 3:
        return TruncatedSeries.zero(0 if N is None else N)
    gauss = gaussian_binomial(L, 3, 2)
    deg = gauss.trunc + 2 * L + 2
    window = deg if N is None else max(deg, N)
    tail = (binomial_series(window, (0, 1), (2, 1)) * binomial_series(window, (0, 1), (2 * L - 2, 1))
            + binomial_series(window, (2, 1), (2 * L, 1)))
    num = binomial_series(window, (0, 1), (2, -1)) * pad(gauss, window) * tail
    den = binomial_series(window, (0, 1), (2 * L, -1))
    if N is None:
        quot = divide_exact(num, den, polynomial=True)
        return quot.truncate(max(quot.degree(), 0))
    return divide_exact(num, den).truncate(N)


def odd_weighted_middle_term(L: int) -> TruncatedSeries:
    """Mixed cross terms of the odd-side weighted count, returned in full.

    Equals ``q^{-2} [(1-y)(1-y^2)/((1-x)(1-x^2)) - (1-y^3)/(1-x^3)]`` with
    ``x = q^2`` and ``y = x^{L-1}``, i.e. the sum of ``q^{p + 2p' - 11}`` over
    ordered pairs of different odd parts ``3 <= p, p' <= 2L - 1``.  Every
    division is checked to be exact as polynomials.
    """
    _check_L(L)
    if L < 3:
        return TruncatedSeries.zero(0)
    k = L - 1
    deg = 6 * k
    pair = geometric_ratio(2 * k, 2, deg) * geometric_ratio(4 * k, 4, deg)
    triple = geometric_ratio(6 * k, 6, deg)
    diff = (pair - triple).shift_down(2)
    return diff.truncate(max(diff.degree(), 0))


def gf_a2_weighted(L: int, N: int) -> TruncatedSeries:
    _check_L(L)
    return _odd_weighted(L, N, pad(odd_weighted_middle_term(L), N))


def gf_a2_weighted_quotient(L: int, N: int) -> TruncatedSeries:
    """The five-term closed form with :func:`quotient_middle_term` in the middle slot."""
    _check_L(L)
    return _odd_weighted(L, N, quotient_middle_term(L, N))


def _odd_weighted(L: int, N: int, middle: TruncatedSeries) -> TruncatedSeries:
    bracket = (geometric_ratio(2 * L - 2, 2, N).shift(5)
               + geometric_ratio(4 * L - 4, 4, N) * binomial_series(N, (6, 1), (8, 1))
               + _gauss(L - 1, 2, 2, N).shift(8)
               + middle.shift(11)
               + _gauss(L - 1, 2, 4, N).shift(16))
    return _inv_odd_poch(L, N) * bracket


def gf_a2_second_derivative(L: int, N: int) -> TruncatedSeries:
    """``sum_m m(m-1) a_2(L,m,n) q^n`` from the logarithmic second derivative of ``F_2``."""
    _check_L(L)
    s = (_q(2, N) + geometric_ratio(2 * L - 2, 2, N).shift(3)
         + geometric_ratio(4 * L - 4, 4, N).shift(6))
    correction = (-_q(4, N) + geometric_ratio(4 * L - 4, 4, N).shift(6)
                  - geometric_ratio(6 * L - 6, 6, N).shift(9).scale(2)
                  - geometric_ratio(8 * L - 8, 8, N).shift(12))
    return _inv_odd_poch(L, N) * (s * s + correction)


def gf_b2_weighted(L: int, N: int) -> TruncatedSeries:
    _check_L(L)
    return _gauss(L - 2, 2, 1, N).shift(6) * poch(-1, 3, 1, L - 4, N)


def gf_weighted_inf_a(N: int) -> TruncatedSeries:
    bracket = (_inv(2, N).shift(5)
               + _inv(4, N) * binomial_series(N, (6, 1), (8, 1))
               + (_inv(2, N) * _inv(4, N)).shift(8)
               + (_inv(4, N) * _inv(6, N)) * binomial_series(N, (11, 1), (13, 2))
               + (_inv(4, N) * _inv(8, N)).shift(16))
    return _inv_odd_poch(INF, N) * bracket


def gf_weighted_inf_b(N: int) -> TruncatedSeries:
    return (_inv_odd_poch(INF, N) * _inv(2, N) * _inv(4, N)).shift(6)


_DIFF_NUMERATOR = ((0, 1), (2, 2), (3, 1), (4, 2), (5, 1), (6, 2), (7, 1), (8, 2),
                   (10, 1), (12, 1), (14, 1))


def weighted_difference_closed_form(N: int) -> TruncatedSeries:
    """Closed form for ``gf_weighted_inf_a - gf_weighted_inf_b``; visibly non-negative."""
    num = binomial_series(N, (5, 1), (6, 1)) * binomial_series(N, *_DIFF_NUMERATOR)
    den = invert_unit(poch(+1, 3, 2, INF, N)) * _inv(4, N) * _inv(6, N) * _inv(8, N)
    return num * den


# --------------------------------------------------------------------------
# Pair decomposition used for the bounded bias
# --------------------------------------------------------------------------

def pair_decomposition(L: int, N: int):
    """Return ``(A_L, B_L, C_L)`` with ``gf_a2 - gf_b2 = q^2 (A_L - B_L) + C_L``.

    ``A_L`` and ``B_L`` generate the A and B pair sets; ``C_L`` has
    non-negative coefficients by construction.
    """
    _check_L(L)
    inv = _inv_odd_poch(L, N)
    a = inv * (TruncatedSeries.one(N) + geometric_ratio(2 * L - 2, 2, N).shift(1))
    b = poch(-1, 2, 1, L - 2, N) * geometric_ratio(L - 1, 1, N)
    c = inv * geometric_ratio(4 * L - 4, 4, N).shift(6)
    return a, b, c


def conj_weighted_lhs(L: int, N: int) -> TruncatedSeries:
    """``(1/(q;q^2)_L) ((1-q^{2L-2})/(1-q^2) + q^3 [L-2;2]_{q^2})``."""
    _check_L(L)
    return _inv_odd_poch(L, N) * (geometric_ratio(2 * L - 2, 2, N)
                                  + _gauss(L - 2, 2, 2, N).shift(3))


def conj_weighted_rhs(L: int, N: int) -> TruncatedSeries:
    """``q [L-2;2]_q (-q^3;q)_{L-4}``."""
    _check_L(L)
    return _gauss(L - 2, 2, 1, N).shift(1) * poch(-1, 3, 1, L - 4, N)


# --------------------------------------------------------------------------
# Bivariate generating functions, marker z counts hooks of length two
# --------------------------------------------------------------------------

def gf_F2(L: int, N: int) -> BivariateSeries:
    """Odd partitions with parts at most ``2L - 1``; ``[z^m q^n]`` counts those with ``m`` 2-hooks.

    Part size 1: multiplicity one contributes no 2-hook, multiplicity two or
    more contributes one.  Part size ``p >= 3``: multiplicity one contributes
    one, two or more contributes two.
    """
    _check_L(L)
    first = {(0, 0): 1}
    if N >= 1:
        first[(0, 1)] = 1
    for k in range(2, N + 1):
        first[(1, k)] = 1
    result = BivariateSeries(first, N)
    for n in range(2, L + 1):
        p = 2 * n - 1
        if p > N:
            break
        factor = {(0, 0): 1, (1, p): 1}
        for k in range(2, N // p + 1):
            factor[(2, k * p)] = 1
        result = result * BivariateSeries(factor, N)
    return result


def _marker_minus_one_power(j: int, N: int) -> BivariateSeries:
    """``(z - 1)^j``."""
    return BivariateSeries({(i, 0): math.comb(j, i) * (-1) ** (j - i) for i in range(j + 1)}, N)


def gf_G2(L: int, N: int) -> BivariateSeries:
    """Distinct partitions with parts at most ``L``, marker counting 2-hooks.

    Includes the empty partition (the ``n = 0`` term of the outer sum).
    """
    _check_L(L)
    total = BivariateSeries({}, N)
    for n in range(0, L + 1):
        tri = n * (n + 1) // 2
        if tri > N:
            break
        for j in range(0, n + 1):
            qpart = (_gauss(L - j, n, 1, N) * _gauss(n, j, 1, N)).shift(tri + j * (j + 1) // 2)
            total = total + _marker_minus_one_power(j, N) * qpart
    return total


def h_series(L: int, i: int, N: int) -> BivariateSeries:
    """Partitions into exactly ``i`` non-negative parts, each at most ``L``,
    weighted by ``(1 - y)^(number of distinct positive parts)``; marker is ``y``."""
    if L < 0 or i < 0:
        raise DomainError("L and i must be non-negative")
    total = BivariateSeries({}, N)
    for j in range(0, i + 1):
        tri = j * (j + 1) // 2
        if tri > N:
            break
        qpart = (_gauss(L + i - j, i, 1, N) * _gauss(i, j, 1, N)).shift(tri)
        total = total + BivariateSeries({(j, n): (-1) ** j * v for n, v in enumerate(qpart) if v}, N)
    return total


def G2_from_h(L: int, N: int) -> BivariateSeries:
    """Distinct-partition series rebuilt from ``h`` by removing the staircase."""
    _check_L(L)
    total = BivariateSeries({(0, 0): 1}, N)
    for n in range(1, L + 1):
        tri = n * (n + 1) // 2
        if tri > N:
            break
        h = h_series(L - n, n, N).substitute(1, -1)
        total = total + h * TruncatedSeries.monomial(tri, N)
    return total


GF_NAMES = {
    "a2": lambda L, N: gf_a2(L, N),
    "b2": lambda L, N: gf_b2(L, N),
    "a2w": lambda L, N: gf_a2_weighted(L, N),
    "a2w-quotient": lambda L, N: gf_a2_weighted_quotient(L, N),
    "b2w": lambda L, N: gf_b2_weighted(L, N),
    "a2inf": lambda L, N: gf_a2_inf(N),
    "b2inf": lambda L, N: gf_b2_inf(N),
    "a3inf": lambda L, N: gf_a3_inf(N),
    "b3inf": lambda L, N: gf_b3_inf(N),
    "w-a-inf": lambda L, N: gf_weighted_inf_a(N),
    "w-b-inf": lambda L, N: gf_weighted_inf_b(N),
    "AL": lambda L, N: pair_decomposition(L, N)[0],
    "BL": lambda L, N: pair_decomposition(L, N)[1],
    "CL": lambda L, N: pair_decomposition(L, N)[2],
    "rhs314": lambda L, N: weighted_difference_closed_form(N),
    "conj41-lhs": lambda L, N: conj_weighted_lhs(L, N),
    "conj41-rhs": lambda L, N: conj_weighted_rhs(L, N),
}

NEEDS_L = {"a2", "b2", "a2w", "a2w-quotient", "b2w", "AL", "BL", "CL", "conj41-lhs", "conj41-rhs"}


def expand(name: str, L: int | None, N: int) -> TruncatedSeries:
    """Look up a generating function by its short name."""
    try:
        builder = GF_NAMES[name]
    except KeyError:
        raise DomainError(f"unknown generating function {name!r}") from None
    if name in NEEDS_L and L is None:
        raise DomainError(f"{name} needs L")
    return builder(L, N)
