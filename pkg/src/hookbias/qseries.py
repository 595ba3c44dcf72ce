"""Exact truncated power series in ``q`` and bivariate series in a marker.

Coefficients are Python integers, or :class:`fractions.Fraction` where a
rational genuinely appears.  A series carries its truncation order ``N``:
coefficients ``c_0 .. c_N`` are exact, everything above is unknown.
Operations on series with different orders truncate to the smaller one.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

from .errors import DomainError, ExactnessError

Number = Union[int, Fraction]


def _norm(c) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class TruncatedSeries:
    """``c_0 + c_1 q + ... + c_N q^N + O(q^(N+1))``.

    >>> s = TruncatedSeries([1, -1], 4)
    >>> invert_unit(s)
    TruncatedSeries(1 + q + q^2 + q^3 + q^4 + O(q^5))
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Number], trunc: int):
        if trunc < 0:
            raise DomainError("truncation order must be non-negative")
        c = [_norm(x) for x in coeffs][: trunc + 1]
        c.extend([0] * (trunc + 1 - len(c)))
        self._c = tuple(c)

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls((1,), trunc)

    @classmethod
    def monomial(cls, exp: int, trunc: int, coeff: Number = 1) -> "TruncatedSeries":
        if exp < 0:
            raise DomainError("negative exponent")
        c = [0] * (trunc + 1)
        if exp <= trunc:
            c[exp] = coeff
        return cls(c, trunc)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Number], trunc: int) -> "TruncatedSeries":
        c = [0] * (trunc + 1)
        for e, v in terms.items():
            if e < 0:
                raise DomainError("negative exponent")
            if e <= trunc:
                c[e] += v
        return cls(c, trunc)

    # access ---------------------------------------------------------------
    @property
    def trunc(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, k):
        return self._c[k]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient inside the window, -1 for zero."""
        for k in range(len(self._c) - 1, -1, -1):
            if self._c[k]:
                return k
        return -1

    def valuation(self) -> Optional[int]:
        for k, v in enumerate(self._c):
            if v:
                return k
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c)

    # arithmetic -----------------------------------------------------------
    def truncate(self, trunc: int) -> "TruncatedSeries":
        if trunc > self.trunc:
            raise DomainError(f"cannot extend a series known to order {self.trunc}")
        return TruncatedSeries(self._c, trunc)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries((other,), self.trunc)
        n = min(self.trunc, other.trunc)
        return TruncatedSeries([self._c[k] + other._c[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-v for v in self._c], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: Number) -> "TruncatedSeries":
        return TruncatedSeries([factor * v for v in self._c], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(self.trunc, other.trunc)
        a, b = self._c, other._c
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return invert_unit(self) ** (-e)
        result = TruncatedSeries.one(self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q^k`` (``k >= 0``)."""
        if k < 0:
            raise DomainError("use shift_down for negative shifts")
        return TruncatedSeries((0,) * k + self._c, self.trunc)

    monomial_shift = shift

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by ``q^k``; the low coefficients must vanish."""
        if any(self._c[:k]):
            raise ExactnessError(f"series is not divisible by q^{k}")
        return TruncatedSeries(self._c[k:], self.trunc - k)

    def dilate(self, r: int) -> "TruncatedSeries":
        """Substitute ``q -> q^r``; the result is exact to order ``r*(N+1) - 1``."""
        if r < 1:
            raise DomainError("dilation factor must be positive")
        out = [0] * (r * (self.trunc + 1))
        for k, v in enumerate(self._c):
            out[r * k] = v
        return TruncatedSeries(out, len(out) - 1)

    def value_at_one(self) -> Number:
        """Sum of coefficients (meaningful for polynomials held in full)."""
        return _norm(sum(self._c, 0))

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.trunc, other.trunc)
            return self._c[: n + 1] == other._c[: n + 1]
        return NotImplemented

    __hash__ = None

    # serialization --------------------------------------------------------
    def to_dict(self) -> dict:
        return {"trunc": self.trunc,
                "coeffs": [v if isinstance(v, int) else f"{v.numerator}/{v.denominator}"
                           for v in self._c]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "TruncatedSeries":
        coeffs = [Fraction(v) if isinstance(v, str) else v for v in data["coeffs"]]
        return cls(coeffs, data["trunc"])

    def __repr__(self):
        return f"TruncatedSeries({self.pretty()})"

    def pretty(self) -> str:
        terms = []
        for k, v in enumerate(self._c):
            if not v:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                body = str(v)
            elif v == 1:
                body = mono
            elif v == -1:
                body = "-" + mono
            else:
                body = f"{v}*{mono}" if isinstance(v, int) else f"({v})*{mono}"
            terms.append(body)
        terms.append(f"O(q^{self.trunc + 1})")
        return " + ".join(terms).replace("+ -", "- ")


def invert_unit(s: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal of a series whose constant term is a unit."""
    c0 = s[0]
    if c0 not in (1, -1):
        if c0 == 0:
            raise DomainError("constant term is zero; not invertible")
        c0 = Fraction(c0)
    n = s.trunc
    out = [0] * (n + 1)
    out[0] = 1 / c0 if not isinstance(c0, int) else c0
    for k in range(1, n + 1):
        acc = 0
        for j in range(1, k + 1):
            if s[j]:
                acc += s[j] * out[k - j]
        out[k] = -acc / c0 if not isinstance(c0, int) else -acc * c0
    return TruncatedSeries(out, n)


def polydiv(num: Iterable[Number], den: Iterable[Number]) -> tuple[list, list]:
    """Polynomial long division on coefficient lists (lowest degree first)."""
    num = list(num)
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise DomainError("division by the zero polynomial")
    while num and num[-1] == 0:
        num.pop()
    lead = den[-1]
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [], num
    quot = [0] * (len(num) - dd)
    rem = num[:]
    for k in range(len(num) - 1, dd - 1, -1):
        c = rem[k]
        if not c:
            continue
        f = c // lead if isinstance(c, int) and isinstance(lead, int) and c % lead == 0 \
            else Fraction(c) / lead
        quot[k - dd] = _norm(f)
        for j in range(dd + 1):
            rem[k - dd + j] -= f * den[j]
    while rem and rem[-1] == 0:
        rem.pop()
    return [_norm(x) for x in quot], [_norm(x) for x in rem]


def divide_exact(a: TruncatedSeries, b: TruncatedSeries, *, polynomial: bool = False
                 ) -> TruncatedSeries:
    """``a / b`` where ``b = q^k u`` with ``u(0) = +-1``.

    With ``polynomial=True`` both arguments are taken as polynomials held in
    full and the quotient must be a polynomial: a nonzero remainder raises
    :class:`ExactnessError`.  The result keeps the truncation order of ``a``.
    Otherwise the quotient is a power series, exact to order ``min(N_a, N_b) - k``.
    """
    k = b.valuation()
    if k is None:
        raise DomainError("division by a series that vanishes in its window")
    if b[k] not in (1, -1):
        raise DomainError(f"lowest coefficient of the divisor is {b[k]}, not a unit")
    if polynomial:
        quot, rem = polydiv(a.coeffs, b.coeffs)
        if rem:
            raise ExactnessError(f"nonzero remainder {rem} in exact polynomial division")
        if len(quot) - 1 > a.trunc:
            raise ExactnessError("quotient exceeds the truncation window")
        return TruncatedSeries(quot, a.trunc)
    n = min(a.trunc, b.trunc)
    lowered = a.truncate(n).shift_down(k)
    return lowered * invert_unit(b.truncate(n).shift_down(k))


def poch(sign: int, start_exp: int, step: int, length, trunc: int) -> TruncatedSeries:
    """``prod_{i < length} (1 - sign * q^(start_exp + i*step))`` truncated at ``trunc``.

    ``length`` may be ``math.inf`` or ``None`` for the infinite product; a
    negative length is the empty product.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if step < 1:
        raise DomainError("step must be positive")
    c = [1] + [0] * trunc
    i = 0
    while length is None or i < length:
        e = start_exp + i * step
        if e > trunc:
            break
        if e == 0:
            # factor is the constant 1 - sign
            c = [(1 - sign) * v for v in c]
        else:
            for n in range(trunc, e - 1, -1):
                c[n] -= sign * c[n - e]
        i += 1
    return TruncatedSeries(c, trunc)


@lru_cache(maxsize=None)
def _gauss(m: int, n: int) -> tuple:
    """Coefficients of the Gaussian binomial ``[m; n]_q`` via the q-Pascal rule."""
    if n < 0 or n > m:
        return ()
    if n == 0 or n == m:
        return (1,)
    # [m; n] = [m-1; n-1] + q^n [m-1; n]
    a = _gauss(m - 1, n - 1)
    b = _gauss(m - 1, n)
    out = [0] * (n * (m - n) + 1)
    for k, v in enumerate(a):
        out[k] += v
    for k, v in enumerate(b):
        out[k + n] += v
    return tuple(out)


def gaussian_binomial(m: int, n: int, r: int = 1, trunc: Optional[int] = None
                      ) -> TruncatedSeries:
    """Gaussian binomial ``[m; n]`` evaluated at ``q^r``.

    Zero unless ``0 <= n <= m``.  With ``trunc=None`` the polynomial is
    returned in full (truncation order equal to its degree).
    """
    if r < 1:
        raise DomainError("r must be positive")
    coeffs = _gauss(m, n) if m < 300 else _gauss_iterative(m, n)
    if not coeffs:
        return TruncatedSeries.zero(0 if trunc is None else trunc)
    full = [0] * (r * (len(coeffs) - 1) + 1)
    for k, v in enumerate(coeffs):
        full[r * k] = v
    return TruncatedSeries(full, len(full) - 1 if trunc is None else trunc)


def _gauss_iterative(m: int, n: int) -> tuple:
    row = [(1,)]
    for mm in range(1, m + 1):
        new = [(1,)]
        for nn in range(1, min(mm, n) + 1):
            a = row[nn - 1]
            b = row[nn] if nn < len(row) else ()
            out = [0] * (nn * (mm - nn) + 1)
            for k, v in enumerate(a):
                out[k] += v
            for k, v in enumerate(b):
                out[k + nn] += v
            new.append(tuple(out))
        row = new
    return row[n] if n < len(row) else ()


def binomial_series(trunc: int, *terms: tuple[int, Number]) -> TruncatedSeries:
    """Small polynomial from ``(exponent, coefficient)`` pairs."""
    out: dict[int, Number] = {}
    for e, c in terms:
        out[e] = out.get(e, 0) + c
    return TruncatedSeries.from_terms(out, trunc)


def geometric_ratio(top: int, step: int, trunc: Optional[int] = None) -> TruncatedSeries:
    """The polynomial ``(1 - q^top) / (1 - q^step)``, checked to divide exactly."""
    if top < 0:
        raise DomainError("negative exponent")
    deg = max(top, step)
    num = binomial_series(deg, (0, 1), (top, -1))
    den = binomial_series(deg, (0, 1), (step, -1))
    quot = divide_exact(num, den, polynomial=True)
    if trunc is None:
        return quot
    if trunc <= quot.trunc:
        return quot.truncate(trunc)
    return TruncatedSeries(quot.coeffs, trunc)


def pad(s: TruncatedSeries, trunc: int) -> TruncatedSeries:
    """Re-window a polynomial held in full; extending is only valid for polynomials."""
    if trunc <= s.trunc:
        return s.truncate(trunc)
    return TruncatedSeries(s.coeffs, trunc)


# --------------------------------------------------------------------------
# Bivariate series
# --------------------------------------------------------------------------

class BivariateSeries:
    """Sparse ``sum c(m, n) z^m q^n`` with ``n <= N``; ``z`` is a marker variable."""

    __slots__ = ("trunc", "_c")

    def __init__(self, coeffs: Mapping[tuple[int, int], Number], trunc: int):
        self.trunc = trunc
        self._c = {(m, n): _norm(v) for (m, n), v in coeffs.items() if v and n <= trunc}

    @classmethod
    def from_series(cls, s: TruncatedSeries, marker_exp: int = 0) -> "BivariateSeries":
        return cls({(marker_exp, n): v for n, v in enumerate(s) if v}, s.trunc)

    @classmethod
    def marker_power(cls, base: int, exp: int, trunc: int, offset: Number = 0,
                     scale: Number = 1) -> "BivariateSeries":
        """``(offset + scale*z)^exp`` as a bivariate constant in ``q``."""
        return cls({(i, 0): math.comb(exp, i) * scale ** i * offset ** (exp - i)
                    for i in range(exp + 1)}, trunc)

    def items(self):
        return self._c.items()

    def __getitem__(self, key: tuple[int, int]) -> Number:
        return self._c.get(key, 0)

    def max_marker(self) -> int:
        return max((m for m, _ in self._c), default=0)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        n = min(self.trunc, other.trunc)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return BivariateSeries(out, n)

    def __neg__(self):
        return BivariateSeries({k: -v for k, v in self._c.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            other = BivariateSeries.from_series(other)
        if not isinstance(other, BivariateSeries):
            return BivariateSeries({k: other * v for k, v in self._c.items()}, self.trunc)
        n = min(self.trunc, other.trunc)
        out: dict[tuple[int, int], Number] = {}
        for (m1, n1), v1 in self._c.items():
            for (m2, n2), v2 in other._c.items():
                if n1 + n2 <= n:
                    key = (m1 + m2, n1 + n2)
                    out[key] = out.get(key, 0) + v1 * v2
        return BivariateSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        a = {k: v for k, v in self._c.items() if k[1] <= n}
        b = {k: v for k, v in other._c.items() if k[1] <= n}
        return a == b

    __hash__ = None

    def specialize(self, z: Number) -> TruncatedSeries:
        out = [0] * (self.trunc + 1)
        for (m, n), v in self._c.items():
            out[n] += v * z ** m
        return TruncatedSeries(out, self.trunc)

    def moment(self, weight) -> TruncatedSeries:
        """``sum_m weight(m) * [z^m]`` as a series in ``q``."""
        out = [0] * (self.trunc + 1)
        for (m, n), v in self._c.items():
            out[n] += weight(m) * v
        return TruncatedSeries(out, self.trunc)

    def substitute(self, offset: Number, scale: Number) -> "BivariateSeries":
        """Replace the marker ``y`` by ``offset + scale*z``."""
        out: dict[tuple[int, int], Number] = {}
        for (m, n), v in self._c.items():
            for i in range(m + 1):
                c = v * math.comb(m, i) * scale ** i * offset ** (m - i)
                if c:
                    out[(i, n)] = out.get((i, n), 0) + c
        return BivariateSeries(out, self.trunc)

    def table(self) -> dict[tuple[int, int], Number]:
        return dict(sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def to_dict(self) -> dict:
        return {"trunc": self.trunc,
                "coeffs": [[m, n, v if isinstance(v, int) else str(v)]
                           for (m, n), v in self.table().items()]}

    def __repr__(self):
        return f"BivariateSeries(trunc={self.trunc}, {len(self._c)} terms)"
