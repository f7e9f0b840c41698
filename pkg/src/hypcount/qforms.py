"""The named q-series: MacMahon A_k / C_k (two independent constructions),
the odd-divisor series E, the discriminant-inverse series, q-Pochhammer
products, the fourth power of the half-integer theta function, and the
weight-2 Eisenstein normalization used by the genus-2 remark.

Every builder returns an immutable Series and is memoized on (params, order);
correctness never depends on the cache.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .fps import Series
from .numtheory import sigma1_table

# ---------------------------------------------------------------------------
# sigma-based series
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def series_A1(order: int) -> Series:
    """A_1(q) = sum sigma_1(n) q^n."""
    table = sigma1_table(order)
    return Series([0] + [table[n] for n in range(1, order + 1)], order)


@lru_cache(maxsize=None)
def series_E(order: int) -> Series:
    """E(q) = sum sigma_1(2k+1) q^(2k+1), the odd-exponent divisor series."""
    table = sigma1_table(order)
    return Series(
        [table[n] if n % 2 == 1 else 0 for n in range(order + 1)], order
    )


@lru_cache(maxsize=None)
def series_E2(order: int) -> Series:
    """Weight-2 Eisenstein series normalized as -1/24 + sum sigma_1(n) q^n,
    so that the genus-2 divisor series equals E2 + 1/24 verbatim."""
    return series_A1(order) + Fraction(-1, 24)


# ---------------------------------------------------------------------------
# MacMahon sums: direct nested-tuple construction
# ---------------------------------------------------------------------------


def _mul_divisor_factor(coeffs: list, m: int, order: int) -> list:
    """Multiply a coefficient list by q^m/(1-q^m)^2 = sum_{j>=1} j q^(jm),
    truncated at ``order``."""
    out = [0] * (order + 1)
    for i, c in enumerate(coeffs):
        if c and i <= order:
            for j in range(1, (order - i) // m + 1):
                out[i + j * m] += c * j
    return out


def _nested_sum(k: int, order: int, odd_steps: bool) -> Series:
    """Sum over strictly increasing index tuples of products of
    q^m/(1-q^m)^2 factors (indices themselves, or the odd numbers 2m-1).

    Tuples are enumerated depth-first with index-sum pruning: a partial
    product with valuation v and r indices left to choose (each above the
    last index) can only contribute at exponents >= v + minimal completion,
    so branches past the truncation order are omitted exactly, and partial
    products are truncated to order minus that completion bound.
    """
    if k == 0:
        return Series.one(order)
    total = [0] * (order + 1)
    step = 2 if odd_steps else 1
    start = 1

    def min_completion(m: int, r: int) -> int:
        # r further indices, strictly increasing from m by >= step
        return r * m + step * r * (r + 1) // 2

    def rec(partial: list, val: int, m_prev: int, r: int):
        m = m_prev + step if m_prev else start
        while val + m + min_completion(m, r - 1) <= order:
            cap = order - min_completion(m, r - 1)
            new = _mul_divisor_factor(partial, m, cap)
            if r == 1:
                for n, c in enumerate(new):
                    if c:
                        total[n] += c
            else:
                rec(new, val + m, m, r - 1)
            m += step

    rec([1], 0, 0, k)
    return Series(total, order)


@lru_cache(maxsize=None)
def macmahon_A_direct(k: int, order: int) -> Series:
    """A_k(q) = sum over 0<m_1<...<m_k of
    q^(m_1+...+m_k) / prod (1-q^(m_i))^2, truncated at ``order``."""
    if k < 0 or order < 0:
        raise DomainError("k and order must be >= 0")
    return _nested_sum(k, order, odd_steps=False)


@lru_cache(maxsize=None)
def macmahon_C_direct(k: int, order: int) -> Series:
    """C_k(q) = sum over 0<m_1<...<m_k of
    q^(2m_1+...+2m_k-k) / prod (1-q^(2m_i-1))^2; equivalently the nested
    divisor sum over strictly increasing odd indices."""
    if k < 0 or order < 0:
        raise DomainError("k and order must be >= 0")
    return _nested_sum(k, order, odd_steps=True)


# ---------------------------------------------------------------------------
# MacMahon sums: differential recursions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def macmahon_A_recursive(k: int, order: int) -> Series:
    """A_k via the quasi-modular recursion
    A_k = ((6 A_1 + k(k-1)) A_{k-1} - 2 q dA_{k-1}/dq) / ((2k+1) 2k),
    seeded by A_1 = sum sigma_1(n) q^n."""
    if k < 1:
        raise DomainError("recursion defined for k >= 1 (A_0 = 1 by convention)")
    if k == 1:
        return series_A1(order)
    prev = macmahon_A_recursive(k - 1, order)
    num = (series_A1(order) * 6 + k * (k - 1)) * prev - prev.qderiv() * 2
    return num * Fraction(1, (2 * k + 1) * 2 * k)


@lru_cache(maxsize=None)
def macmahon_C_recursive(k: int, order: int) -> Series:
    """C_k via C_1 = A_1(q) - A_1(q^2) and
    C_k = ((2 C_1 + (k-1)^2) C_{k-1} - q dC_{k-1}/dq) / (2k (2k-1))."""
    if k < 1:
        raise DomainError("recursion defined for k >= 1 (C_0 = 1 by convention)")
    if k == 1:
        a1 = series_A1(order)
        return a1 - a1.compose_monomial(2)
    prev = macmahon_C_recursive(k - 1, order)
    c1 = macmahon_C_recursive(1, order)
    num = (c1 * 2 + (k - 1) ** 2) * prev - prev.qderiv()
    return num * Fraction(1, 2 * k * (2 * k - 1))


def macmahon_A(k: int, order: int) -> Series:
    """A_k with the empty-product convention A_0 = 1."""
    if k == 0:
        return Series.one(order)
    return macmahon_A_recursive(k, order)


def macmahon_C(k: int, order: int) -> Series:
    """C_k with the empty-product convention C_0 = 1."""
    if k == 0:
        return Series.one(order)
    return macmahon_C_recursive(k, order)


# ---------------------------------------------------------------------------
# Pochhammer products, discriminant, theta
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def pochhammer(sign: int, scale: int, order: int) -> Series:
    """The product prod_{k>=1} (1 - sign * q^(k*scale)).

    (q;q)oo is (sign=+1, scale=1); (-q;q)oo is (sign=-1, scale=1);
    (q^2;q^2)oo is (sign=+1, scale=2), and so on.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if scale < 1:
        raise DomainError("scale must be >= 1")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    k = 1
    while k * scale <= order:
        s = k * scale
        for n in range(order, s - 1, -1):
            coeffs[n] -= sign * coeffs[n - s]
        k += 1
    return Series(coeffs, order)


@lru_cache(maxsize=None)
def delta_inv_times_q(order: int) -> Series:
    """q/Delta(q) = prod (1-q^k)^(-24): the rational-curve count series for
    K3 surfaces, with prefix 1 + 24q + 324q^2 + 3200q^3."""
    return (pochhammer(1, 1, order) ** 24).invert()


@lru_cache(maxsize=None)
def legendre_series(order: int) -> Series:
    """((q;q)oo (-q;q)oo^2)^4, which equals sum sigma_1(2k+1) q^k."""
    minus = pochhammer(-1, 1, order)
    return (pochhammer(1, 1, order) * minus * minus) ** 4


@lru_cache(maxsize=None)
def theta2_fourth(order: int) -> Series:
    """Fourth power of the half-integer theta sum_{k in Z} q^((k+1/2)^2).

    The sum is two-sided: k and -k-1 contribute the same exponent, so each
    odd square (2k+1)^2/4 carries coefficient 2.  (The one-sided sum fails
    the required sixteenth-of-E identity by a factor 16 already at q^1.)
    Intermediate work runs at denom 4; every exponent of the fourth power
    is integral, and the result is returned at denom 1.
    """
    num_order = 4 * order
    terms = {}
    k = 0
    while (2 * k + 1) ** 2 <= num_order:
        terms[(2 * k + 1) ** 2] = 2
        k += 1
    theta = Series.from_terms(terms, num_order, denom=4)
    fourth = theta ** 4
    if any(c for n, c in enumerate(fourth.coeffs) if n % 4):
        raise DomainError("theta fourth power produced a fractional exponent")
    return Series(list(fourth.coeffs[::4]), order, 1)


# ---------------------------------------------------------------------------
# named-form envelope (CLI / cache surface)
# ---------------------------------------------------------------------------

FORM_NAMES = ("A", "C", "E", "delta_inv", "legendre", "theta2_4", "E2")


@dataclass(frozen=True)
class NamedForm:
    name: str
    params: tuple
    series: Series

    def to_json(self) -> dict:
        data = {"name": self.name, "params": list(self.params)}
        data.update(self.series.to_json())
        return data

    def key(self) -> str:
        params = "_".join(str(p) for p in self.params)
        params = f"_{params}" if params else ""
        return f"{self.name}{params}_o{self.series.order}"


def named_form(name: str, k: int | None = None, order: int = 32) -> NamedForm:
    """Build one of the exported named series by name."""
    if name == "A":
        if k is None or k < 0:
            raise DomainError("form A requires k >= 0")
        return NamedForm("A", (k,), macmahon_A(k, order))
    if name == "C":
        if k is None or k < 0:
            raise DomainError("form C requires k >= 0")
        return NamedForm("C", (k,), macmahon_C(k, order))
    if name == "E":
        return NamedForm("E", (), series_E(order))
    if name == "delta_inv":
        return NamedForm("delta_inv", (), delta_inv_times_q(order))
    if name == "legendre":
        return NamedForm("legendre", (), legendre_series(order))
    if name == "theta2_4":
        return NamedForm("theta2_4", (), theta2_fourth(order))
    if name == "E2":
        return NamedForm("E2", (), series_E2(order))
    raise DomainError(f"unknown form name {name!r}; expected one of {FORM_NAMES}")
