"""Chebyshev polynomials, the per-point theta blocks h and g, their
series expansions (Chebyshev form and raw truncated lattice-sum form),
the Andrews-Rose product expansions, and the sine substitution calculus.

Two formal variables are in play: the per-point marking variable x, tied to
the angle variable z by x = 2 sin(z/2), and the counting variable u (or q:
the q-convention blocks use q = u^2, halving every u-exponent).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import BoundTooSmall, DomainError
from .fps import Series, XPoly
from .numtheory import odd_split_count
from . import qforms

# ---------------------------------------------------------------------------
# Chebyshev polynomials (first kind), exact integer coefficients
# ---------------------------------------------------------------------------


class ChebPoly:
    """T_n in the monomial basis; coeffs[i] is the x^i coefficient."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ChebPoly is immutable")

    def __eq__(self, other):
        return isinstance(other, ChebPoly) and self.coeffs == other.coeffs

    __hash__ = None

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"ChebPoly(T_{self.n})"


@lru_cache(maxsize=None)
def chebyshev(n: int) -> ChebPoly:
    """T_n by the recurrence T_n = 2x T_(n-1) - T_(n-2)."""
    if n < 0:
        raise DomainError("Chebyshev index must be >= 0")
    if n == 0:
        return ChebPoly(0, (1,))
    if n == 1:
        return ChebPoly(1, (0, 1))
    a = chebyshev(n - 1).coeffs
    b = chebyshev(n - 2).coeffs
    coeffs = [0] * (n + 1)
    for i, c in enumerate(a):
        coeffs[i + 1] += 2 * c
    for i, c in enumerate(b):
        coeffs[i] -= c
    return ChebPoly(n, coeffs)


@lru_cache(maxsize=None)
def cheb_half_doubled(n: int) -> tuple:
    """Integer coefficients of 2 T_n(x/2) (these are always integral)."""
    out = []
    for i, c in enumerate(chebyshev(n).coeffs):
        num = 2 * c
        if num % (1 << i):
            raise DomainError("2 T_n(x/2) failed integrality")
        out.append(num >> i)
    return tuple(out)


def cheb_even_identity_exact(n: int) -> bool:
    """T_n(1 - 2x^2) == (-1)^n T_(2n)(x) as an exact polynomial identity."""
    inner = (1, 0, -2)  # 1 - 2x^2
    acc = [0] * (2 * n + 1)
    acc[0] = 1
    result = [0] * (2 * n + 1)
    tn = chebyshev(n).coeffs
    for i, c in enumerate(tn):
        if i > 0:
            nxt = [0] * (2 * n + 1)
            for a, ca in enumerate(acc):
                if ca:
                    for b, cb in enumerate(inner):
                        if cb and a + b <= 2 * n:
                            nxt[a + b] += ca * cb
            acc = nxt
        if c:
            for a, ca in enumerate(acc):
                result[a] += c * ca
    target = [(-1) ** n * c for c in chebyshev(2 * n).coeffs]
    return result == list(target) + [0] * (2 * n + 1 - len(target))


# ---------------------------------------------------------------------------
# theta blocks, Chebyshev form
# ---------------------------------------------------------------------------


def _block_terms(kind: str, order: int):
    """Yield (n, u_exponent) for the block's Chebyshev terms up to order.

    h carries u^(2n^2+2n) for n >= 0, g carries u^(2n^2) for n >= 1; the
    loop stops at the first exponent above order, which is safe because the
    exponents increase monotonically (bound n <= sqrt(order/2) + 1).
    """
    if kind not in ("h", "g"):
        raise DomainError("block kind must be 'h' or 'g'")
    n = 0 if kind == "h" else 1
    while True:
        e = 2 * n * n + 2 * n if kind == "h" else 2 * n * n
        if e > order:
            return
        yield n, e
        n += 1


def block_xdeg(kind: str, order: int) -> int:
    """Largest x-degree with a nonzero coefficient at this u-order."""
    deg = 0
    for n, _ in _block_terms(kind, order):
        deg = 2 * n + 1 if kind == "h" else 2 * n
    return deg


@lru_cache(maxsize=None)
def theta_block(kind: str, order: int, xdeg: int | None = None) -> XPoly:
    """The per-point block as an x-polynomial with u-series coefficients.

    h = 2 sum_n T_(2n+1)(x/2) u^(2n^2+2n)   (odd x-degrees only)
    g = 1 + 2 sum_(n>=1) T_(2n)(x/2) u^(2n^2)   (even x-degrees only)
    """
    if xdeg is None:
        xdeg = block_xdeg(kind, order)
    cols = [dict() for _ in range(xdeg + 1)]
    for n, e in _block_terms(kind, order):
        deg = 2 * n + 1 if kind == "h" else 2 * n
        for i, c in enumerate(cheb_half_doubled(deg)):
            if c and i <= xdeg:
                cols[i][e] = cols[i].get(e, 0) + c
    if kind == "g":
        cols[0][0] = cols[0].get(0, 0) + 1  # bare constant term; the sum starts at n = 1
    return XPoly([Series.from_terms(col, order) for col in cols])


def theta_block_q(kind: str, order: int, xdeg: int | None = None) -> XPoly:
    """Same block in the q-convention (q = u^2): exponents n^2+n and n^2."""
    block = theta_block(kind, 2 * order, xdeg)
    halved = []
    for s in block.xcoeffs:
        if any(c for n, c in enumerate(s.coeffs) if n % 2):
            raise DomainError("u-block has an odd exponent; cannot halve")
        halved.append(Series(list(s.coeffs[::2]), order))
    return XPoly(halved)


# ---------------------------------------------------------------------------
# Andrews-Rose expansions (q-convention)
# ---------------------------------------------------------------------------


def andrews_rose_H(order: int, xdeg: int) -> XPoly:
    """H(x,q) = (q^2;q^2)oo^3 * sum_k A_k(q^2) x^(2k+1)."""
    prefac = qforms.pochhammer(1, 2, order) ** 3
    cols = [Series.zero(order) for _ in range(xdeg + 1)]
    for k in range(0, (xdeg - 1) // 2 + 1):
        ak = qforms.macmahon_A(k, order).compose_monomial(2)
        cols[2 * k + 1] = prefac * ak
    return XPoly(cols)


def andrews_rose_G(order: int, xdeg: int) -> XPoly:
    """G(x,q) = ((q;q)oo / (-q;q)oo) * sum_k C_k(q) x^(2k)."""
    prefac = qforms.pochhammer(1, 1, order) * qforms.pochhammer(-1, 1, order).invert()
    cols = [Series.zero(order) for _ in range(xdeg + 1)]
    for k in range(0, xdeg // 2 + 1):
        cols[2 * k] = prefac * qforms.macmahon_C(k, order)
    return XPoly(cols)


# ---------------------------------------------------------------------------
# exact trig series and the x <-> z change of variable
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def sin_series(order: int) -> Series:
    """sin z as an exact rational series."""
    terms = {}
    for j in range(0, (order - 1) // 2 + 1):
        terms[2 * j + 1] = Fraction((-1) ** j, factorial(2 * j + 1))
    return Series.from_terms(terms, order)


@lru_cache(maxsize=None)
def two_sin_half(order: int) -> Series:
    """2 sin(z/2) = sum_l (-1/4)^l z^(2l+1) / (2l+1)!."""
    terms = {}
    for l in range(0, (order - 1) // 2 + 1):
        terms[2 * l + 1] = Fraction(-1, 4) ** l * Fraction(1, factorial(2 * l + 1))
    return Series.from_terms(terms, order)


def scaled_sin(m: Fraction, order: int) -> Series:
    """sin(m z) for rational m, as an exact z-series."""
    terms = {}
    for j in range(0, (order - 1) // 2 + 1):
        terms[2 * j + 1] = Fraction((-1) ** j) * m ** (2 * j + 1) / factorial(2 * j + 1)
    return Series.from_terms(terms, order)


def scaled_cos(m: Fraction, order: int) -> Series:
    """cos(m z) for rational m."""
    terms = {0: 1}
    for j in range(1, order // 2 + 1):
        terms[2 * j] = Fraction((-1) ** j) * m ** (2 * j) / factorial(2 * j)
    return Series.from_terms(terms, order)


@lru_cache(maxsize=None)
def z_of_x(order: int) -> Series:
    """Inverse of x = 2 sin(z/2): z = 2 arcsin(x/2) as an x-series."""
    terms = {}
    for n in range(0, (order - 1) // 2 + 1):
        terms[2 * n + 1] = Fraction(comb(2 * n, n), 16 ** n * (2 * n + 1))
    return Series.from_terms(terms, order)


# ---------------------------------------------------------------------------
# theta blocks, raw truncated lattice-sum form
# ---------------------------------------------------------------------------


def theta_block_from_lattice_sum(
    kind: str, bound: int, order: int, xdeg: int | None = None
) -> XPoly:
    """Rebuild a block from the truncated two-sided exponential sums.

    g-points carry sum_{|k|<=bound} (-1)^k u^(2k^2) e^(ikz); conjugate terms
    pair into cosines.  h-points carry e^(iz/2) sum (-1)^k u^(2k^2+2k) e^(ikz);
    the k and -k-1 terms pair into 2 sin((2k+1)z/2) factors (the unpaired
    k = bound term sits above u^order once 2 bound^2 > order).  Each exact
    z-series is then rewritten in x through z = 2 arcsin(x/2).

    This route never touches Chebyshev polynomials, so comparing it with
    theta_block checks the closed Chebyshev forms end to end.
    """
    if bound < 1 or 2 * bound * bound <= order:
        raise BoundTooSmall(f"need 2*bound^2 > order (bound={bound}, order={order})")
    if xdeg is None:
        xdeg = block_xdeg(kind, order)
    zx = z_of_x(xdeg)
    cols = [dict() for _ in range(xdeg + 1)]

    def add(e: int, sign: int, zser: Series):
        xser = zser.substitute(zx)
        for i, c in enumerate(xser.coeffs[: xdeg + 1]):
            if c:
                cols[i][e] = cols[i].get(e, 0) + sign * c

    if kind == "g":
        cols[0][0] = 1
        for k in range(1, bound + 1):
            e = 2 * k * k
            if e <= order:
                add(e, 2 * (-1) ** k, scaled_cos(Fraction(k), xdeg))
    elif kind == "h":
        for k in range(0, bound):
            e = 2 * k * k + 2 * k
            if e <= order:
                add(e, 2 * (-1) ** k, scaled_sin(Fraction(2 * k + 1, 2), xdeg))
    else:
        raise DomainError("block kind must be 'h' or 'g'")
    return XPoly([Series.from_terms(col, order) for col in cols])


# ---------------------------------------------------------------------------
# sine substitution (marked-point collapse calculus)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _transfer(k_out: int, k_in: int) -> Fraction | int:
    """Exponential-coefficient transfer: k_out!/k_in! times the z^k_out
    coefficient of (2 sin(z/2))^k_in."""
    if k_out < k_in or (k_out - k_in) % 2:
        return 0
    power = two_sin_half(k_out) ** k_in if k_in else Series.one(k_out)
    c = power[k_out]
    return c * Fraction(factorial(k_out), factorial(k_in)) if c else 0


def sine_substitute(coeffs: dict, order: int) -> dict:
    """Push exponential coefficients through x_v = 2 sin(z_v/2).

    ``coeffs`` maps marking tuples (one nonnegative entry per point) to
    rational coefficients of prod x_v^k(v) / k(v)!; the result maps tuples
    k' to the coefficients of prod z_v^k'(v) / k'(v)! after substitution,
    keeping |k'| <= order.  The substitution expands each variable
    independently, so the transfer factorizes over points.
    """
    out: dict = {}
    for base, gw in coeffs.items():
        if gw == 0:
            continue
        room = order - sum(base)
        if room < 0:
            continue
        support = [v for v, kv in enumerate(base) if kv > 0]

        def extend(idx: int, shifted: tuple, weight, budget: int):
            if idx == len(support):
                if weight:
                    out[shifted] = out.get(shifted, 0) + weight
                    if out[shifted] == 0:
                        del out[shifted]
                return
            v = support[idx]
            for l in range(0, budget // 2 + 1):
                t = _transfer(base[v] + 2 * l, base[v])
                if t:
                    nxt = list(shifted)
                    nxt[v] = base[v] + 2 * l
                    extend(idx + 1, tuple(nxt), weight * t, budget - 2 * l)

        extend(0, base, gw, room)
    return out


def sine_substitute_combinatorial(coeffs: dict, order: int) -> dict:
    """The same pushforward via the closed sum: the coefficient at k' is
    sum over shifts l of coeffs[k'-2l] * (-1/4)^|l| * prod s(k'(v), (k'-2l)(v)),
    with s the odd-block split count."""
    out: dict = {}
    quarter = Fraction(-1, 4)
    for base, gw in coeffs.items():
        if gw == 0:
            continue
        room = order - sum(base)
        if room < 0:
            continue
        support = [v for v, kv in enumerate(base) if kv > 0]

        def extend(idx: int, shifted: tuple, weight, total_l: int, budget: int):
            if idx == len(support):
                if weight:
                    w = weight * quarter ** total_l
                    out[shifted] = out.get(shifted, 0) + w
                    if out[shifted] == 0:
                        del out[shifted]
                return
            v = support[idx]
            for l in range(0, budget // 2 + 1):
                s = odd_split_count(base[v] + 2 * l, base[v])
                if s:
                    nxt = list(shifted)
                    nxt[v] = base[v] + 2 * l
                    extend(idx + 1, tuple(nxt), weight * s, total_l + l, budget - 2 * l)

        extend(0, base, gw, 0, room)
    return out


# ---------------------------------------------------------------------------
# the h-function differential identities
# ---------------------------------------------------------------------------


def ode_residuals(h: Series):
    """Residuals (h'' + h/4, h' h'' + h h'/4) for a candidate h-series."""
    d1 = h.deriv()
    d2 = d1.deriv()
    r1 = d2 + h.truncate(d2.order) * Fraction(1, 4)
    r2 = d1.truncate(d2.order) * d2 + h.truncate(d2.order) * d1.truncate(d2.order) * Fraction(1, 4)
    return r1, r2


def h_ode_check(order: int) -> bool:
    """True iff h = 2 sin(q/2) satisfies h'' + h/4 = 0 and
    h' h'' + h h'/4 = 0 as formal series to the given order."""
    r1, r2 = ode_residuals(two_sin_half(order + 2))
    return r1.truncate(order).is_zero() and r2.truncate(order).is_zero()
