"""Lattice laws, compatibility, gamma sets and family enumeration."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import diamond_lattice, level_family, pentagon_lattice
from fnideals.lattice import (
    BoundedLattice,
    ClosedFamily,
    LimitExceeded,
    SpaceModel,
    _exhaustive_compatible,
    _pairwise_compatible,
    boolean_lattice,
    chain_lattice,
    compute_gamma,
    enumerate_compatible_families,
    family_from_lists,
    family_to_lists,
    find_order_isomorphism,
    gamma_table,
    is_compatible,
    lattice_from_dict,
    lattice_to_dict,
    mask_to_points,
    points_to_mask,
    product_lattice,
    union_over_gamma,
    validate_lattice,
)

B4 = boolean_lattice(2)
POOL = [chain_lattice(2), chain_lattice(3), chain_lattice(5), B4, boolean_lattice(3),
        diamond_lattice(), pentagon_lattice()]


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_validate_chain_and_boolean():
    assert validate_lattice(chain_lattice(2)) is None
    assert validate_lattice(B4) is None
    assert validate_lattice(diamond_lattice()) is None
    assert validate_lattice(pentagon_lattice()) is None


def test_validate_reports_corrupted_absorption_cell():
    meet = [list(r) for r in B4.meet]
    meet[1][2] = meet[2][1] = 3  # should be 0
    bad = BoundedLattice(4, meet, B4.join, 0, 3)
    violation = validate_lattice(bad)
    assert violation is not None
    assert "absorption" in violation
    assert "(1,2)" in violation


def test_malformed_tables_raise():
    with pytest.raises(ValueError):
        BoundedLattice(2, ((0,),), ((0, 1), (1, 1)), 0, 1)
    with pytest.raises(ValueError):
        BoundedLattice(2, ((0, 5), (5, 1)), ((0, 1), (1, 1)), 0, 1)
    with pytest.raises(ValueError):
        BoundedLattice(2, ((0, 0), (0, 1)), ((0, 1), (1, 1)), 0, 9)


def test_lattice_dict_roundtrip():
    doc = lattice_to_dict(B4)
    assert lattice_from_dict(doc) == B4
    with pytest.raises(ValueError):
        lattice_from_dict({"size": 2})


# ---------------------------------------------------------------------------
# compatibility
# ---------------------------------------------------------------------------

def family(lat, sets, points=2):
    return ClosedFamily(lat, SpaceModel(points), tuple(sets))


def test_all_full_family_is_compatible():
    fam = family(B4, (3, 3, 3, 3))
    assert is_compatible(fam)
    assert is_compatible(fam, exhaustive=True)


def test_boolean_examples():
    good = family(B4, (0b00, 0b01, 0b10, 0b11))
    bad = family(B4, (0b00, 0b01, 0b01, 0b11))
    assert is_compatible(good)
    assert is_compatible(good, exhaustive=True)
    assert not is_compatible(bad)  # S_2 cap S_3 = {0} != S_1
    assert not is_compatible(bad, exhaustive=True)


def test_compatibility_requires_full_top():
    fam = family(B4, (0, 0, 0, 0b01))
    with pytest.raises(ValueError):
        is_compatible(fam)


def test_family_shape_validation():
    with pytest.raises(ValueError):
        ClosedFamily(B4, SpaceModel(1), (0, 0, 0))
    with pytest.raises(ValueError):
        ClosedFamily(B4, SpaceModel(1), (0, 0, 0, 4))


@pytest.mark.parametrize("lat", POOL)
@pytest.mark.parametrize("points", [1, 2])
def test_pairwise_agrees_with_exhaustive(lat, points):
    full = (1 << points) - 1
    for assignment in itertools.product(range(full + 1), repeat=lat.size):
        assert _pairwise_compatible(lat, assignment) == _exhaustive_compatible(lat, assignment)


@given(st.sampled_from(POOL), st.data())
@settings(max_examples=60, deadline=None)
def test_level_families_are_compatible(lat, data):
    points = data.draw(st.integers(0, 3))
    levels = [data.draw(st.integers(0, lat.size - 1)) for _ in range(points)]
    fam = level_family(lat, levels)
    assert is_compatible(fam)
    assert is_compatible(fam, exhaustive=True)


# ---------------------------------------------------------------------------
# gamma
# ---------------------------------------------------------------------------

def test_gamma_of_bottom_is_empty():
    for lat in POOL:
        assert compute_gamma(lat, lat.bottom) == frozenset()


def test_gamma_chain3():
    lat = chain_lattice(3)
    assert compute_gamma(lat, 1) == frozenset({0})
    assert compute_gamma(lat, 2) == frozenset({0, 1})


def test_gamma_never_contains_top_and_gamma_top_is_everything_else():
    for lat in POOL:
        for j in range(lat.size):
            assert lat.top not in compute_gamma(lat, j)
        assert compute_gamma(lat, lat.top) == frozenset(range(lat.size)) - {lat.top}


def test_gamma_monotone():
    for lat in POOL:
        for j in range(lat.size):
            for jp in range(lat.size):
                if lat.leq(j, jp):
                    assert compute_gamma(lat, j) <= compute_gamma(lat, jp)


def test_gamma_table_skips_bottom():
    table = gamma_table(B4)
    assert sorted(table) == [1, 2, 3]


def test_compatible_family_never_forces_containment_inside_gamma():
    """For i in gamma_j, some compatible S has S_j not inside S_i."""
    for lat in POOL:
        for j in range(lat.size):
            fam = level_family(lat, [j])
            assert is_compatible(fam)
            for i in compute_gamma(lat, j):
                assert fam.sets[j] & ~fam.sets[i]


def test_union_over_gamma_on_chain_is_previous_set():
    lat = chain_lattice(5)
    fam = level_family(lat, [0, 2, 3])
    for j in range(1, 5):
        assert union_over_gamma(fam, j) == fam.sets[j - 1]
    assert union_over_gamma(fam, lat.bottom) == 0


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def test_enumerate_two_chain_single_point():
    fams = enumerate_compatible_families(chain_lattice(2), SpaceModel(1))
    assert [f.sets for f in fams] == [(0, 1), (1, 1)]


def test_enumerate_counts_match_lattice_size_power():
    for lat, points in [(B4, 1), (B4, 2), (chain_lattice(3), 2), (diamond_lattice(), 2)]:
        fams = enumerate_compatible_families(lat, SpaceModel(points))
        assert len(fams) == lat.size**points


def test_enumerate_is_lexicographic_and_all_compatible():
    fams = enumerate_compatible_families(B4, SpaceModel(2))
    tuples = [f.sets for f in fams]
    assert tuples == sorted(tuples)
    assert all(is_compatible(f) for f in fams)


def test_enumerate_bound():
    with pytest.raises(LimitExceeded):
        enumerate_compatible_families(boolean_lattice(3), SpaceModel(3))


def test_enumerate_zero_points():
    fams = enumerate_compatible_families(B4, SpaceModel(0))
    assert len(fams) == 1
    assert fams[0].sets == (0, 0, 0, 0)


# ---------------------------------------------------------------------------
# masks, families, isomorphism
# ---------------------------------------------------------------------------

def test_mask_helpers():
    assert mask_to_points(0b101) == (0, 2)
    assert points_to_mask([0, 2], 3) == 0b101
    with pytest.raises(ValueError):
        points_to_mask([3], 3)


def test_family_list_roundtrip():
    fam = family_from_lists(B4, SpaceModel(2), [[], [0], [1], [0, 1]])
    assert fam.sets == (0, 1, 2, 3)
    assert family_to_lists(fam) == [[], [0], [1], [0, 1]]


def test_order_isomorphism_found_and_rejected():
    assert find_order_isomorphism(chain_lattice(2), boolean_lattice(1)) == (0, 1)
    assert find_order_isomorphism(chain_lattice(4), B4) is None
    # relabeled Boolean 4-lattice: swap the two atoms
    perm = (0, 2, 1, 3)
    meet = [[perm[B4.meet[i][j]] for j in range(4)] for i in range(4)]
    join = [[perm[B4.join[i][j]] for j in range(4)] for i in range(4)]
    relabeled = BoundedLattice(
        4,
        [[meet[perm.index(i)][perm.index(j)] for j in range(4)] for i in range(4)],
        [[join[perm.index(i)][perm.index(j)] for j in range(4)] for i in range(4)],
        0,
        3,
    )
    iso = find_order_isomorphism(B4, relabeled)
    assert iso is not None
    for i in range(4):
        for j in range(4):
            assert iso[B4.meet[i][j]] == relabeled.meet[iso[i]][iso[j]]


def test_product_lattice_shape():
    p = product_lattice(chain_lattice(3), chain_lattice(3))
    assert p.size == 9
    assert validate_lattice(p) is None
    assert p.bottom == 0 and p.top == 8
