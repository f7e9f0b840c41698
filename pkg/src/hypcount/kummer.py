"""Affine F_2^4 geometry of the sixteen 2-torsion points.

Points are labels 0..15 with coordinates (c, r) packed as 4c + r, where c
and r are 2-bit vectors; the group law is label XOR.  In the reference
grid, column c comes from one elliptic-curve factor and row r from the
other: row 0 is {0, 4, 8, 12}.

Subsets are 16-bit masks under symmetric difference.  The subgroup Pi_k of
the power set is generated by the affine k-planes; Pi_3 (32 elements: the
empty set, the 30 affine 3-planes, everything) governs which half-integer
exceptional-class combinations live in the ambient primitive lattice, and
through that which odd-multiplicity supports P admit curve counts: P must
differ from one of the two reference sets eps0/eps1 by a Pi_3 element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BoundTooSmall, DomainError
from .fps import Series, XPoly
from . import qforms, trig

POINTS = tuple(range(16))
FULL_MASK = 0xFFFF

EPS0_MASK = sum(1 << v for v in (0, 4, 8, 12))
EPS1_MASK = sum(1 << v for v in (1, 2, 3, 4, 8, 12))


def mask_from_points(points) -> int:
    m = 0
    for v in points:
        if not 0 <= v <= 15:
            raise DomainError(f"point label {v} outside 0..15")
        m |= 1 << v
    return m


def points_of_mask(mask: int):
    return [v for v in POINTS if mask >> v & 1]


def mask_size(mask: int) -> int:
    return bin(mask & FULL_MASK).count("1")


def translate_mask(mask: int, t: int) -> int:
    out = 0
    for v in POINTS:
        if mask >> v & 1:
            out |= 1 << (v ^ t)
    return out


# ---------------------------------------------------------------------------
# affine subspaces and the Pi_k chain
# ---------------------------------------------------------------------------


def is_affine_plane(mask: int, k: int) -> bool:
    """True iff the subset is an affine k-plane: size 2^k and closed under
    the affine combination x + y + z."""
    if not 0 <= k <= 4:
        raise DomainError("plane dimension must be 0..4")
    pts = points_of_mask(mask)
    if len(pts) != 1 << k:
        return False
    member = [bool(mask >> v & 1) for v in range(16)]
    for x in pts:
        for y in pts:
            for z in pts:
                if not member[x ^ y ^ z]:
                    return False
    return True


def in_Pi3(mask: int) -> bool:
    """Membership in Pi_3 by the affine-indicator criterion: the indicator
    of the subset must be an affine functional on F_2^4.

    Equivalent form used here: 1_S(x) + 1_S(y) + 1_S(0) + 1_S(x+y) = 0 for
    all x, y (the three-point form follows by affineness), which costs 16^2
    bit tests instead of 16^3.
    """
    mask &= FULL_MASK
    base = mask & 1  # 1_S(0)
    bits = [(mask >> v & 1) ^ base for v in range(16)]
    for x in range(16):
        bx = bits[x]
        for y in range(x, 16):
            if bits[x ^ y] != bx ^ bits[y]:
                return False
    return True


def affine_threeplanes() -> list:
    """All 30 affine 3-planes, i.e. level sets of nonzero linear functionals."""
    planes = []
    for f in range(1, 16):
        for a in (0, 1):
            m = 0
            for v in POINTS:
                if bin(f & v).count("1") % 2 == a:
                    m |= 1 << v
            planes.append(m)
    return planes


def pi3_by_closure() -> frozenset:
    """Generate Pi_3 from the affine 3-planes by symmetric-difference closure;
    kept as a cross-check against the affine-indicator criterion."""
    gens = affine_threeplanes()
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                c = m ^ g
                if c not in members:
                    members.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(members)


_PI3 = pi3_by_closure()
if len(_PI3) != 32 or not all(in_Pi3(m) for m in _PI3):
    raise AssertionError("Pi_3 closure generation disagrees with the affine test")
if in_Pi3(EPS0_MASK ^ EPS1_MASK):
    raise AssertionError("eps0 and eps1 must lie in distinct Pi_3 cosets")


def pi3_members() -> frozenset:
    return _PI3


# ---------------------------------------------------------------------------
# half-lattice vectors and the intersection pairing
# ---------------------------------------------------------------------------


def subset_hat(mask: int) -> tuple:
    """The half-lattice vector with numerator 1 over each member point
    (the vector sum of E_v/2 over the subset)."""
    return tuple(1 if mask >> v & 1 else 0 for v in POINTS)


def basis_vector(v: int) -> tuple:
    """E_v itself, i.e. numerator 2 at v."""
    return tuple(2 if u == v else 0 for u in POINTS)


def reduction(w) -> int:
    """Odd-numerator support of a half-lattice vector, as a subset mask."""
    m = 0
    for v, a in enumerate(w):
        if a % 2:
            m |= 1 << v
    return m


def kummer_member(w) -> bool:
    """A half-integer combination of the E_v lies in the primitive lattice
    iff its odd-numerator support is in Pi_3."""
    return in_Pi3(reduction(w))


def pairing(w1, w2):
    """Bilinear extension of <E_u, E_v> = -2 delta_uv to half-integer
    vectors: -(1/2) sum a_v b_v."""
    acc = sum(a * b for a, b in zip(w1, w2))
    out = -Fraction(acc, 2)
    return int(out) if out.denominator == 1 else out


# ---------------------------------------------------------------------------
# admissibility and translation orbits of multiplicity profiles
# ---------------------------------------------------------------------------


def admissible(mask: int):
    """Which coset (if either) the odd-multiplicity support lies in:
    'even' iff P + eps0 is in Pi_3, 'odd' iff P + eps1 is, else None."""
    if in_Pi3(mask ^ EPS0_MASK):
        return "even"
    if in_Pi3(mask ^ EPS1_MASK):
        return "odd"
    return None


@lru_cache(maxsize=4)
def coset_members(which: str) -> tuple:
    """All 32 admissible supports of one coset, sorted by mask."""
    eps = {"even": EPS0_MASK, "odd": EPS1_MASK}[which]
    return tuple(sorted(eta ^ eps for eta in _PI3))


# configs are plain 16-tuples of nonnegative ints: entry v is the number of
# branch points (Weierstrass-point images) at the torsion point v


def config_total(config) -> int:
    return sum(config)


def odd_support(config) -> int:
    m = 0
    for v, kv in enumerate(config):
        if kv % 2:
            m |= 1 << v
    return m


_TRANSLATION = tuple(tuple(v ^ t for v in POINTS) for t in POINTS)


def translate_config(config, t: int):
    perm = _TRANSLATION[t]
    return tuple(config[perm[v]] for v in POINTS)


def orbit_of(config) -> set:
    return {translate_config(config, t) for t in POINTS}


def orbit_rep(config):
    """Canonical representative: lexicographically least translate."""
    return min(orbit_of(config))


@dataclass(frozen=True)
class Orbit:
    rep: tuple
    size: int
    coset: str

    def to_json(self) -> dict:
        return {"rep": list(self.rep), "orbit_size": self.size, "coset": self.coset}


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, slots - 1):
            yield (head,) + tail


def translation_orbits(degree: int) -> list:
    """All admissible multiplicity profiles of the given total, grouped under
    the sixteen-point translation action; one Orbit per class, sorted by
    representative.

    A profile is odd exactly on its support P, so it decomposes as 1 on P
    plus twice a composition of (degree - |P|)/2 over all sixteen slots;
    admissibility depends only on P, so the scan walks the two coset tables.
    """
    if degree < 4 or degree % 2:
        raise DomainError("degree must be an even integer >= 4")
    orbits: dict = {}
    for which in ("even", "odd"):
        for P in coset_members(which):
            size = mask_size(P)
            if size > degree:
                continue
            spread = (degree - size) // 2
            support = points_of_mask(P)
            base = [1 if P >> v & 1 else 0 for v in POINTS]
            for comp in _compositions(spread, 16):
                config = tuple(
                    base[v] + 2 * comp[v] for v in POINTS
                )
                rep = orbit_rep(config)
                if rep not in orbits:
                    orbits[rep] = Orbit(rep, len(orbit_of(config)), which)
    return [orbits[rep] for rep in sorted(orbits)]


# ---------------------------------------------------------------------------
# the lattice-sum oracle for the per-class potential factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeOracle:
    """Per-point factor data of one orbifold potential class: points in
    h_mask carry the h block, the rest carry g, and the whole product is
    weighted by q/Delta at u^2 times u^(|h_mask|/2 - 2)."""

    eta: int
    coset: str
    h_mask: int
    h_poly: XPoly
    g_poly: XPoly
    order: int

    def prefactor(self) -> Series:
        size = mask_size(self.h_mask)
        yz = qforms.delta_inv_times_q(self.order).compose_monomial(2)
        return yz.shift(size // 2 - 2)

    def monomial_coefficient(self, config) -> Series:
        """Coefficient of prod x_v^k(v) in the class's potential term."""
        acc = self.prefactor()
        for v, kv in enumerate(config):
            poly = self.h_poly if self.h_mask >> v & 1 else self.g_poly
            factor = poly.coefficient(kv)
            if factor.is_zero():
                return Series.zero(self.order)
            acc = acc * factor
        return acc


def lattice_sum_oracle(eta: int, coset: str, bound: int, order: int) -> LatticeOracle:
    """Assemble the truncated lattice-sum factors for one Pi_3 class and
    coset.  Raises BoundTooSmall unless 2*bound^2 exceeds the order."""
    if coset not in ("even", "odd"):
        raise DomainError("coset must be 'even' or 'odd'")
    if not in_Pi3(eta):
        raise DomainError("eta must be a Pi_3 member")
    if bound < 1 or 2 * bound * bound <= order:
        raise BoundTooSmall(f"need 2*bound^2 > order (bound={bound}, order={order})")
    eps = EPS0_MASK if coset == "even" else EPS1_MASK
    h_mask = eta ^ eps
    h_poly = trig.theta_block_from_lattice_sum("h", bound, order)
    g_poly = trig.theta_block_from_lattice_sum("g", bound, order)
    return LatticeOracle(eta, coset, h_mask, h_poly, g_poly, order)
