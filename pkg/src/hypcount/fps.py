"""Truncated formal power series with exact rational coefficients.

A Series stores a dense coefficient vector: entry ``n`` is the coefficient
of ``q**(n/denom)`` for ``n = 0..order``.  ``denom`` is 1 for ordinary
series; the theta-function work uses ``denom = 4`` to hold quarter-integer
exponents.  Coefficients are Python ints or Fractions, never floats, so
every computation in the package is bit-exact.

Truncation discipline: binary operations first rescale both operands to the
least common denom, then truncate the result to the minimum common order.
A Series is never silently re-extended; a zero tail means "known zero up to
order", not "unknown".
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DomainError,
    FractionalExponent,
    NonzeroConstantTerm,
    ZeroConstantTerm,
)

Rational = int | Fraction


def _norm(c) -> Rational:
    """Canonical coefficient: integral Fractions collapse to int."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _rat_str(c: Rational) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _rat_parse(s: str) -> Rational:
    if "/" in s:
        num, den = s.split("/")
        return _norm(Fraction(int(num), int(den)))
    return int(s)


class Series:
    """Immutable truncated power series; safe to share across threads."""

    __slots__ = ("coeffs", "order", "denom")

    def __init__(self, coeffs, order: int | None = None, denom: int = 1):
        coeffs = [_norm(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1 if coeffs else 0
        if order < 0:
            raise DomainError("order must be >= 0")
        if denom < 1:
            raise DomainError("denom must be >= 1")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "denom", denom)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int, denom: int = 1) -> "Series":
        return Series([0], order, denom)

    @staticmethod
    def one(order: int, denom: int = 1) -> "Series":
        return Series([1], order, denom)

    @staticmethod
    def from_terms(terms, order: int, denom: int = 1) -> "Series":
        """Build from {exponent-index: coefficient}; indices above order drop."""
        coeffs = [0] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                coeffs[n] = _norm(coeffs[n] + c)
        return Series(coeffs, order, denom)

    # -- alignment ---------------------------------------------------------

    def rescale(self, denom: int) -> "Series":
        """Re-express with a larger exponent denominator (lossless)."""
        if denom == self.denom:
            return self
        if denom % self.denom != 0:
            raise DomainError(f"cannot rescale denom {self.denom} to {denom}")
        step = denom // self.denom
        coeffs = [0] * (self.order * step + 1)
        for n, c in enumerate(self.coeffs):
            coeffs[n * step] = c
        return Series(coeffs, self.order * step, denom)

    def reduce_denom(self) -> "Series":
        """Drop to the smallest denom supporting the stored exponents."""
        if self.denom == 1:
            return self
        from math import gcd

        g = self.denom
        for n, c in enumerate(self.coeffs):
            if c != 0:
                g = gcd(g, n)
        if g <= 1:
            return self
        return Series(list(self.coeffs[::g]), self.order // g, self.denom // g)

    def _align(self, other: "Series"):
        from math import lcm

        d = lcm(self.denom, other.denom)
        a, b = self.rescale(d), other.rescale(d)
        order = min(a.order, b.order)
        return a, b, order, d

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series([other], self.order, self.denom)
        a, b, order, d = self._align(other)
        return Series([x + y for x, y in zip(a.coeffs, b.coeffs)], order, d)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.denom)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series([other], self.order, self.denom)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order, self.denom)
        a, b, order, d = self._align(other)
        ac, bc = a.coeffs, b.coeffs
        # skip leading zero runs; partial products in nested sums start high
        alo = next((i for i, c in enumerate(ac[: order + 1]) if c), order + 1)
        blo = next((i for i, c in enumerate(bc[: order + 1]) if c), order + 1)
        out = [0] * (order + 1)
        for i in range(alo, order + 1 - blo):
            ai = ac[i]
            if ai:
                for j in range(blo, order + 1 - i):
                    bj = bc[j]
                    if bj:
                        out[i + j] += ai * bj
        return Series(out, order, d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if not isinstance(k, int):
            raise DomainError("series power must be an integer")
        if k < 0:
            return self.invert() ** (-k)
        result = Series.one(self.order, self.denom)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def invert(self) -> "Series":
        """Multiplicative inverse up to truncation; needs a nonzero constant."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        inv0 = _norm(Fraction(1, 1) / a0)
        out = [inv0] + [0] * self.order
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if ak:
                    acc += ak * out[n - k]
            out[n] = _norm(-Fraction(acc) / a0) if acc else 0
        return Series(out, self.order, self.denom)

    # -- structural operations ----------------------------------------------

    def compose_monomial(self, m: int) -> "Series":
        """Substitute q -> q**m.  Output keeps this order; the tail of the
        input beyond order//m cannot contribute and is dropped."""
        if m < 1:
            raise DomainError("monomial exponent must be >= 1")
        out = [0] * (self.order + 1)
        for n in range(0, self.order // m + 1):
            out[n * m] = self.coeffs[n]
        return Series(out, self.order, self.denom)

    def qderiv(self) -> "Series":
        """The operator q d/dq (multiplies the q**n coefficient by n)."""
        if self.denom != 1:
            raise FractionalExponent("q d/dq requires integer exponents")
        return Series([n * c for n, c in enumerate(self.coeffs)], self.order, 1)

    def deriv(self) -> "Series":
        """Plain d/dq; order drops by one."""
        if self.denom != 1:
            raise FractionalExponent("d/dq requires integer exponents")
        if self.order == 0:
            return Series([0], 0, 1)
        return Series(
            [(n + 1) * self.coeffs[n + 1] for n in range(self.order)],
            self.order - 1,
            1,
        )

    def shift(self, m: int) -> "Series":
        """Multiply by q**m (exponent-index units); top m entries fall off."""
        if m < 0:
            raise DomainError("shift must be >= 0")
        return Series([0] * m + list(self.coeffs), self.order, self.denom)

    def substitute(self, inner: "Series") -> "Series":
        """Formal composition self(inner); inner must have no constant term."""
        if inner.coeffs[0] != 0:
            raise NonzeroConstantTerm("inner series must have zero constant term")
        if self.denom != 1:
            raise FractionalExponent("outer series must have integer exponents")
        # Horner from the top; only the first inner.order outer terms matter
        top = min(self.order, inner.order)
        result = Series([self.coeffs[top]], inner.order, inner.denom)
        for n in range(top - 1, -1, -1):
            result = result * inner + self.coeffs[n]
        return result

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(list(self.coeffs[: order + 1]), order, self.denom)

    # -- queries -------------------------------------------------------------

    def __getitem__(self, n: int) -> Rational:
        """Coefficient of q**(n/denom); zero above the truncation order is a
        phantom, so reads past order raise instead of returning 0."""
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent index {n} outside stored order {self.order}")
        return self.coeffs[n]

    def coefficient(self, num: int, den: int = 1) -> Rational:
        """Coefficient of q**(num/den)."""
        if num * self.denom % den != 0:
            return 0
        return self[num * self.denom // den]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        """Lowest exponent index with a nonzero coefficient, or None for 0."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series([other], self.order, self.denom)
        if not isinstance(other, Series):
            return NotImplemented
        a, b, order, _ = self._align(other)
        return a.coeffs[: order + 1] == b.coeffs[: order + 1]

    __hash__ = None

    def __repr__(self):
        return f"Series(order={self.order}, denom={self.denom}, {self.format()!r})"

    def format(self, var: str = "q", max_terms: int | None = None) -> str:
        """Human-readable sum, e.g. ``1 + 24q + 324q^2``."""
        parts = []
        truncated = False
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if max_terms is not None and len(parts) >= max_terms:
                truncated = True
                break
            if n == 0:
                mono = ""
            else:
                if self.denom == 1:
                    exp = "" if n == 1 else f"^{n}"
                else:
                    from math import gcd

                    g = gcd(n, self.denom)
                    num, den = n // g, self.denom // g
                    exp = f"^({num}/{den})" if den > 1 else ("" if num == 1 else f"^{num}")
                mono = f"{var}{exp}"
            mag = abs(c)
            coef = "" if (mag == 1 and mono) else _rat_str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{coef}{mono}"))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        if truncated:
            out += " + ..."
        return out

    # -- serialization (cache / golden-file format) ---------------------------

    def to_json(self) -> dict:
        return {
            "denom": self.denom,
            "order": self.order,
            "coeffs": [_rat_str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "Series":
        return Series(
            [_rat_parse(s) for s in data["coeffs"]],
            data["order"],
            data["denom"],
        )


class XPoly:
    """Polynomial in a formal variable x whose coefficients are Series.

    All coefficient Series share one (order, denom); multiplication truncates
    the x-degree at a caller-supplied bound.
    """

    __slots__ = ("xcoeffs", "xdeg")

    def __init__(self, xcoeffs):
        xcoeffs = list(xcoeffs)
        if not xcoeffs:
            raise DomainError("XPoly needs at least the x^0 coefficient")
        order = min(s.order for s in xcoeffs)
        denom = xcoeffs[0].denom
        if any(s.denom != denom for s in xcoeffs):
            raise DomainError("XPoly coefficients must share one denom")
        xcoeffs = [s.truncate(order) for s in xcoeffs]
        object.__setattr__(self, "xcoeffs", tuple(xcoeffs))
        object.__setattr__(self, "xdeg", len(xcoeffs) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @property
    def order(self) -> int:
        return self.xcoeffs[0].order

    @property
    def denom(self) -> int:
        return self.xcoeffs[0].denom

    @staticmethod
    def zero(xdeg: int, order: int, denom: int = 1) -> "XPoly":
        return XPoly([Series.zero(order, denom) for _ in range(xdeg + 1)])

    def coefficient(self, i: int) -> Series:
        """Series coefficient of x**i (zero Series above the stored degree)."""
        if i < 0:
            raise DomainError("x-degree must be >= 0")
        if i > self.xdeg:
            return Series.zero(self.order, self.denom)
        return self.xcoeffs[i]

    def pad(self, xdeg: int) -> "XPoly":
        if xdeg <= self.xdeg:
            return self
        extra = [Series.zero(self.order, self.denom)] * (xdeg - self.xdeg)
        return XPoly(list(self.xcoeffs) + extra)

    def __add__(self, other: "XPoly") -> "XPoly":
        deg = max(self.xdeg, other.xdeg)
        a, b = self.pad(deg), other.pad(deg)
        return XPoly([x + y for x, y in zip(a.xcoeffs, b.xcoeffs)])

    def __sub__(self, other: "XPoly") -> "XPoly":
        deg = max(self.xdeg, other.xdeg)
        a, b = self.pad(deg), other.pad(deg)
        return XPoly([x - y for x, y in zip(a.xcoeffs, b.xcoeffs)])

    def scale(self, s) -> "XPoly":
        """Multiply every x-coefficient by a Series or scalar."""
        return XPoly([c * s for c in self.xcoeffs])

    def mul(self, other: "XPoly", xdeg: int) -> "XPoly":
        """Product truncated at x-degree ``xdeg``."""
        out = [Series.zero(min(self.order, other.order), self.denom)
               for _ in range(xdeg + 1)]
        for i, a in enumerate(self.xcoeffs):
            if i > xdeg or a.is_zero():
                continue
            for j, b in enumerate(other.xcoeffs):
                if i + j > xdeg:
                    break
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        deg = max(self.xdeg, other.xdeg)
        a, b = self.pad(deg), other.pad(deg)
        return all(x == y for x, y in zip(a.xcoeffs, b.xcoeffs))

    __hash__ = None

    def __repr__(self):
        terms = [
            f"({s.format(max_terms=4)})*x^{i}"
            for i, s in enumerate(self.xcoeffs)
            if not s.is_zero()
        ]
        return "XPoly[" + " + ".join(terms[:6]) + ("]" if len(terms) <= 6 else " ...]")
