import random
from fractions import Fraction

import pytest

from hypcount.errors import BoundTooSmall, DomainError
from hypcount.fps import Series
from hypcount import kummer, qforms, trig


ROW0 = kummer.EPS0_MASK
COLUMN0 = kummer.mask_from_points((0, 1, 2, 3))


# -- affine planes -------------------------------------------------------------


def test_row_is_a_2plane():
    assert kummer.is_affine_plane(ROW0, 2)


def test_singleton_is_a_0plane():
    assert kummer.is_affine_plane(1 << 5, 0)


def test_wrong_cardinality_is_no_plane():
    m = kummer.mask_from_points((0, 1, 2))
    assert not any(kummer.is_affine_plane(m, k) for k in range(5))


def test_threeplane_count():
    planes = kummer.affine_threeplanes()
    assert len(planes) == 30
    assert all(kummer.is_affine_plane(p, 3) for p in planes)


# -- Pi_3 -----------------------------------------------------------------------


def test_pi3_examples():
    assert kummer.in_Pi3(0)
    assert kummer.in_Pi3(kummer.FULL_MASK)
    assert all(kummer.in_Pi3(p) for p in kummer.affine_threeplanes())
    assert not kummer.in_Pi3(ROW0)


def test_pi3_closure_matches_indicator_everywhere():
    members = kummer.pi3_members()
    assert len(members) == 32
    hits = {m for m in range(1 << 16) if kummer.in_Pi3(m)}
    assert hits == set(members)


def test_pi3_sizes():
    sizes = sorted(kummer.mask_size(m) for m in kummer.pi3_members())
    assert sizes == [0] + [8] * 30 + [16]


# -- half-lattice vectors and pairing --------------------------------------------


def test_kummer_member_examples():
    assert kummer.kummer_member(kummer.basis_vector(3))  # reduction empty
    plane = kummer.affine_threeplanes()[0]
    assert kummer.kummer_member(kummer.subset_hat(plane))
    assert not kummer.kummer_member(kummer.subset_hat(kummer.mask_from_points((0, 4))))


def test_pairing_reference_values():
    e0 = kummer.subset_hat(kummer.EPS0_MASK)
    e1 = kummer.subset_hat(kummer.EPS1_MASK)
    assert kummer.pairing(e0, e0) == -2
    assert kummer.pairing(e0, e1) == Fraction(-3, 2)  # overlap {4, 8, 12}
    v = kummer.basis_vector(7)
    assert kummer.pairing(v, v) == -2


def test_pairing_bilinear_symmetric():
    rng = random.Random(3)
    for _ in range(50):
        w1 = tuple(rng.randint(-3, 3) for _ in range(16))
        w2 = tuple(rng.randint(-3, 3) for _ in range(16))
        w3 = tuple(rng.randint(-3, 3) for _ in range(16))
        assert kummer.pairing(w1, w2) == kummer.pairing(w2, w1)
        s = tuple(a + b for a, b in zip(w2, w3))
        assert kummer.pairing(w1, s) == kummer.pairing(w1, w2) + kummer.pairing(w1, w3)


# -- admissibility -----------------------------------------------------------------


def test_admissible_reference_sets():
    assert kummer.admissible(kummer.EPS0_MASK) == "even"
    assert kummer.admissible(kummer.EPS1_MASK) == "odd"
    assert kummer.admissible(COLUMN0) is None


def test_coset_tables():
    even = kummer.coset_members("even")
    odd = kummer.coset_members("odd")
    assert len(even) == len(odd) == 32
    assert not set(even) & set(odd)
    esizes = sorted(map(kummer.mask_size, even))
    osizes = sorted(map(kummer.mask_size, odd))
    assert esizes == [4] * 4 + [8] * 24 + [12] * 4
    assert osizes == [6] * 16 + [10] * 16
    assert max(esizes + osizes) == 12


def test_size4_even_sets_are_the_rows():
    rows = {kummer.translate_mask(ROW0, t) for t in (0, 1, 2, 3)}
    small = {m for m in kummer.coset_members("even") if kummer.mask_size(m) == 4}
    assert small == rows


# -- translation orbits --------------------------------------------------------------


def profile_from(mask, extra=()):
    profile = [1 if mask >> v & 1 else 0 for v in range(16)]
    for v, add in extra:
        profile[v] += add
    return tuple(profile)


def test_orbits_degree4():
    orbits = kummer.translation_orbits(4)
    assert len(orbits) == 1
    assert orbits[0].size == 4
    # the orbit is the four rows; its lex-least member marks row 3
    assert profile_from(ROW0) in kummer.orbit_of(orbits[0].rep)
    assert orbits[0].rep == min(kummer.orbit_of(profile_from(ROW0)))
    assert orbits[0].coset == "even"


def test_orbits_degree6():
    orbits = kummer.translation_orbits(6)
    assert len(orbits) == 5
    from hypcount.counting import shape_label

    shapes = sorted(shape_label(o.rep) for o in orbits)
    assert shapes == ["A1(u^4)", "C1(u^2)", "C1(u^2)", "C1(u^2)", "E"]
    assert sum(o.size for o in orbits) == 80


def test_orbits_degree8_shape_multiplicities():
    from hypcount.counting import shape_label

    orbits = kummer.translation_orbits(8)
    counts = {}
    for o in orbits:
        label = shape_label(o.rep)
        counts[label] = counts.get(label, 0) + 1
    assert counts["A2(u^4)"] == 1
    assert counts["C2(u^2)"] == 3
    assert counts["A1(u^4)*C1(u^2)"] == 12
    assert counts["C1(u^2)^2"] == 21
    assert counts["E*C1(u^2)"] == 10
    assert counts["E*A1(u^4)"] == 6
    assert counts["E^2"] == 3
    # the full enumeration also contains the two-triple classes
    assert counts["A1(u^4)^2"] == 3
    assert len(orbits) == 59


def test_orbit_sizes_partition_configs():
    # independent recount of all admissible profiles at degrees 4 and 6
    def brute_count(degree):
        count = 0

        def scan(v, remaining, profile):
            nonlocal count
            if v == 15:
                profile.append(remaining)
                if kummer.admissible(kummer.odd_support(profile)) is not None:
                    count += 1
                profile.pop()
                return
            for kv in range(remaining + 1):
                profile.append(kv)
                scan(v + 1, remaining - kv, profile)
                profile.pop()

        scan(0, degree, [])
        return count

    for degree in (4, 6):
        orbits = kummer.translation_orbits(degree)
        assert sum(o.size for o in orbits) == brute_count(degree)
    assert sum(o.size for o in kummer.translation_orbits(8)) == 824


def test_orbit_rep_is_lex_least():
    rng = random.Random(77)
    orbits = kummer.translation_orbits(8)
    for o in rng.sample(orbits, 10):
        assert o.rep == min(kummer.orbit_of(o.rep))


def test_orbits_reject_bad_degree():
    with pytest.raises(DomainError):
        kummer.translation_orbits(5)
    with pytest.raises(DomainError):
        kummer.translation_orbits(2)


# -- lattice-sum oracle ----------------------------------------------------------------


def test_oracle_blocks_match_trig():
    oracle = kummer.lattice_sum_oracle(0, "even", 4, 12)
    assert oracle.h_mask == kummer.EPS0_MASK
    assert oracle.h_poly == trig.theta_block("h", 12)
    assert oracle.g_poly == trig.theta_block("g", 12)
    assert oracle.h_poly.coefficient(1)[0] == 1  # per-point h sum at u^0 x^1


def test_oracle_genus1_extraction():
    oracle = kummer.lattice_sum_oracle(0, "even", 4, 12)
    series = oracle.monomial_coefficient(profile_from(ROW0))
    assert series == Series.one(12)


def test_oracle_prefactor_structure():
    oracle = kummer.lattice_sum_oracle(0, "even", 4, 8)
    # |eta + eps_0| = 4 for eta = 0, so the u-power prefactor is u^0 q/Delta(u^2)
    assert oracle.prefactor() == qforms.delta_inv_times_q(8).compose_monomial(2)


def test_oracle_bound_guard():
    with pytest.raises(BoundTooSmall):
        kummer.lattice_sum_oracle(0, "even", 2, 12)
    with pytest.raises(DomainError):
        kummer.lattice_sum_oracle(ROW0, "even", 4, 12)  # eta not in Pi_3
