"""Per-profile counting series and their genus aggregates.

The main entry point f_gk evaluates the closed product formula for a
multiplicity profile k: with S its odd support (which must be admissible),

    E(u)^(|S|/2 - 2) * prod_{v in S} A_((k(v)-1)/2)(u^4)
                     * prod_{v not in S} C_(k(v)/2)(u^2)

and zero for inadmissible profiles.  The coefficient of u^(h-1) counts the
curves of arithmetic genus h; the CLI reports both indice conventions.

f_gk_via_potential recomputes the same coefficient along a fully
independent route: it extracts the profile's monomial from the sum over
Pi_3 classes of theta-block products weighted by the K3 rational-curve
series q/Delta.  That route is built from Chebyshev blocks and Pochhammer
products only (no divisor sums, no recursions), so agreement between the
two is a strong end-to-end check of the whole calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .fps import Series
from . import kummer, qforms, trig


@lru_cache(maxsize=None)
def _A_u4(j: int, order: int) -> Series:
    return qforms.macmahon_A(j, order).compose_monomial(4)


@lru_cache(maxsize=None)
def _C_u2(j: int, order: int) -> Series:
    return qforms.macmahon_C(j, order).compose_monomial(2)


def shape_label(config) -> str:
    """Multiset of named factors, e.g. ``E^2``, ``A1(u^4)*C1(u^2)``, ``1``."""
    P = kummer.odd_support(config)
    epow = kummer.mask_size(P) // 2 - 2
    factors: dict = {}
    for v, kv in enumerate(config):
        if P >> v & 1:
            j = (kv - 1) // 2
            if j:
                name = f"A{j}(u^4)"
                factors[name] = factors.get(name, 0) + 1
        elif kv:
            name = f"C{kv // 2}(u^2)"
            factors[name] = factors.get(name, 0) + 1
    parts = []
    if epow == 1:
        parts.append("E")
    elif epow > 1:
        parts.append(f"E^{epow}")
    for name in sorted(factors):
        mult = factors[name]
        parts.append(name if mult == 1 else f"{name}^{mult}")
    return "*".join(parts) if parts else "1"


def _check_profile(config):
    if len(config) != 16 or any(kv < 0 for kv in config):
        raise DomainError("profile must assign a nonnegative count to each of 16 points")
    total = sum(config)
    if total % 2:
        raise DomainError(f"profile total {total} must be even")
    if total < 4:
        raise DomainError(f"profile total {total} must be >= 4")
    return total


@dataclass(frozen=True)
class CountSeries:
    config: tuple
    coset: str | None
    series: Series

    @property
    def shape(self) -> str:
        return shape_label(self.config)

    def to_json(self) -> dict:
        data = {
            "config": list(self.config),
            "coset": self.coset or "none",
            "shape": self.shape if self.coset else "0",
        }
        data.update(self.series.to_json())
        return data


def f_gk(config, order: int) -> CountSeries:
    """Counting series of one multiplicity profile (closed product route)."""
    config = tuple(config)
    _check_profile(config)
    P = kummer.odd_support(config)
    coset = kummer.admissible(P)
    if coset is None:
        return CountSeries(config, None, Series.zero(order))
    psize = kummer.mask_size(P)
    if psize % 2:
        raise DomainError("odd support of even-total profile cannot have odd size")
    acc = qforms.series_E(order) ** (psize // 2 - 2)
    for v, kv in enumerate(config):
        if P >> v & 1:
            j = (kv - 1) // 2
            if j:
                acc = acc * _A_u4(j, order)
        elif kv:
            acc = acc * _C_u2(kv // 2, order)
    return CountSeries(config, coset, acc)


def f_gk_via_potential(config, order: int) -> Series:
    """Same coefficient via the orbifold potential: sum over the Pi_3
    classes eta and both cosets of the theta-block product, extracting the
    profile's monomial point by point.

    Parity kills every class except eta = P + eps_i (h blocks are odd in x,
    g blocks even), so only those classes are assembled; an inadmissible
    profile finds no class at all and returns zero.
    """
    config = tuple(config)
    _check_profile(config)
    P = kummer.odd_support(config)
    h_block = trig.theta_block("h", order)
    g_block = trig.theta_block("g", order)
    yz = qforms.delta_inv_times_q(order).compose_monomial(2)
    acc = Series.zero(order)
    for eps in (kummer.EPS0_MASK, kummer.EPS1_MASK):
        eta = P ^ eps
        if not kummer.in_Pi3(eta):
            continue
        term = yz.shift(kummer.mask_size(P) // 2 - 2)
        for v, kv in enumerate(config):
            block = h_block if P >> v & 1 else g_block
            factor = block.coefficient(kv)
            if factor.is_zero():
                term = Series.zero(order)
                break
            term = term * factor
        acc = acc + term
    return acc


def min_arith_genus(config) -> int:
    """Smallest arithmetic genus carrying the profile:
    -1 + sum k(v)^2 / 2.  Must equal 1 + the u-valuation of f_gk."""
    config = tuple(config)
    _check_profile(config)
    if kummer.admissible(kummer.odd_support(config)) is None:
        raise DomainError("profile is not admissible")
    twice = sum(kv * kv for kv in config)
    return -1 + twice // 2


def smooth_genus_bound() -> int:
    """Largest genus of a profile with every multiplicity <= 1, i.e. with
    the largest admissible support size; scans both cosets."""
    best = max(
        kummer.mask_size(P)
        for which in ("even", "odd")
        for P in kummer.coset_members(which)
    )
    return (best - 2) // 2


def gottsche_reconcile(order: int) -> bool:
    """Two genus-2 consistency identities: the aggregated series
    E + 3 A_1(u^2) - 2 A_1(u^4) collapses to A_1(u), and applying (q d/dq)^2
    to A_1 gives sum n^2 sigma_1(n) q^n."""
    a1 = qforms.series_A1(order)
    lhs = qforms.series_E(order) + a1.compose_monomial(2) * 3 - a1.compose_monomial(4) * 2
    if lhs != a1:
        return False
    from .numtheory import sigma1_table

    table = sigma1_table(order)
    want = Series([n * n * table[n] if n else 0 for n in range(order + 1)], order)
    return a1.qderiv().qderiv() == want


@dataclass(frozen=True)
class OrbitEntry:
    rep: tuple
    size: int
    coset: str
    shape: str
    series: Series

    def to_json(self) -> dict:
        data = {
            "rep": list(self.rep),
            "orbit_size": self.size,
            "coset": self.coset,
            "shape": self.shape,
        }
        data.update(self.series.to_json())
        return data


@dataclass(frozen=True)
class CountReport:
    genus: int
    order: int
    orbits: tuple
    total: Series

    def shape_multiplicities(self) -> dict:
        counts: dict = {}
        for entry in self.orbits:
            counts[entry.shape] = counts.get(entry.shape, 0) + 1
        return counts

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "order": self.order,
            "orbits": [entry.to_json() for entry in self.orbits],
            "total": self.total.to_json()["coeffs"],
        }

    def table_rows(self):
        """Rows shaped like the reference coefficient table: one row per
        shape with the bare shape series, then the aggregated total; columns
        are the u-exponents 2..order."""
        shapes: dict = {}
        for entry in self.orbits:
            shapes.setdefault(entry.shape, (entry.series, 0))
            series, mult = shapes[entry.shape]
            shapes[entry.shape] = (series, mult + 1)
        rows = []
        for shape in sorted(shapes, key=lambda s: (shapes[s][0].valuation(), s)):
            series, mult = shapes[shape]
            rows.append((shape, mult, [series[n] for n in range(2, self.order + 1)]))
        rows.append(
            (f"F_{self.genus}(u)", None, [self.total[n] for n in range(2, self.order + 1)])
        )
        return rows

    def to_csv(self) -> str:
        header = ["shape", "multiplicity"] + [f"q^{n}" for n in range(2, self.order + 1)]
        lines = [",".join(header)]
        for shape, mult, coeffs in self.table_rows():
            cells = [shape, "" if mult is None else str(mult)]
            cells += [str(c) if c else "" for c in coeffs]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def genus_total(g: int, order: int) -> CountReport:
    """Aggregate the counting series over one representative per translation
    orbit at degree 2g + 2 (counting classes up to surface translation)."""
    if g < 1:
        raise DomainError("genus must be >= 1")
    entries = []
    total = Series.zero(order)
    for orbit in kummer.translation_orbits(2 * g + 2):
        cs = f_gk(orbit.rep, order)
        entries.append(
            OrbitEntry(orbit.rep, orbit.size, orbit.coset, cs.shape, cs.series)
        )
        total = total + cs.series
    return CountReport(g, order, tuple(entries), total)
