"""Lie normalizers, sandwich characterization, CQP and weak centrality."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fnideals.fdalgebra import AlgebraSpec, commutator_span, tracial_state_basis
from fnideals.function_algebra import (
    PointwiseIdeal,
    PointwiseSubspace,
    enumerate_all_ideals,
    function_algebra,
    theta,
)
from fnideals.lattice import ClosedFamily, SpaceModel, enumerate_compatible_families
from fnideals.lie import (
    LieCandidate,
    check_cqp,
    commutator_ideal_span,
    cqp_transfer_check,
    is_lie_ideal,
    lie_normalizer,
    maximal_ideals,
    normalizer_decomposition_check,
    random_subspace,
    sandwich_random_suite,
    sandwich_witness,
    weak_centrality,
)
from fnideals.linalg import Scalar, Subspace, intersect, rref, vec_dot

M2 = AlgebraSpec((2,))
M3 = AlgebraSpec((3,))
M11 = AlgebraSpec((1, 1))
M12 = AlgebraSpec((1, 2))


def ideal_of(alg, *stalks):
    return PointwiseIdeal(alg.lattice, alg.space, stalks)


# ---------------------------------------------------------------------------
# lie_normalizer
# ---------------------------------------------------------------------------

def test_normalizer_of_whole_algebra_is_everything():
    alg = function_algebra(M2, 2)
    top = ideal_of(alg, 1, 1)
    assert lie_normalizer(alg, top) == Subspace.full(alg.dim)


def test_normalizer_of_zero_in_m2_is_centre():
    alg = function_algebra(M2, 1)
    n = lie_normalizer(alg, ideal_of(alg, 0))
    assert n.dim == 1
    assert n == alg.centre_subspace


def test_normalizer_of_vanish_on_point_ideal_has_dim_5():
    # dim J (4) + dim central functions (2) - overlap (1)
    alg = function_algebra(M2, 2)
    n = lie_normalizer(alg, ideal_of(alg, 0, 1))
    assert n.dim == 5


def test_normalizer_accepts_raw_subspaces():
    alg = function_algebra(M2, 1)
    zero = Subspace.zero(alg.dim)
    assert lie_normalizer(alg, zero) == alg.centre_subspace


@pytest.mark.parametrize("spec, points", [(M2, 1), (M2, 2), (M12, 1), (M12, 2)])
def test_normalizer_contains_ideal_and_centre(spec, points):
    alg = function_algebra(spec, points)
    for ideal in enumerate_all_ideals(alg, verify=False):
        n = lie_normalizer(alg, ideal)
        assert alg.ideal_subspace(ideal) <= n
        assert alg.centre_subspace <= n


@pytest.mark.parametrize("spec, points", [(M2, 2), (M12, 2)])
def test_normalizer_is_closed_under_multiplication(spec, points):
    alg = function_algebra(spec, points)
    for ideal in enumerate_all_ideals(alg, verify=False):
        n = lie_normalizer(alg, ideal)
        for r1 in n.basis:
            v1 = alg.element_from_vector(r1)
            for r2 in n.basis:
                v2 = alg.element_from_vector(r2)
                assert n.contains((v1 * v2).to_vector())


@pytest.mark.parametrize("spec, points", [(M2, 2), (M12, 2)])
def test_pointwise_normalizer_formula(spec, points):
    """N(theta(S)) equals the pointwise family x -> N(I_stalk(x))."""
    alg = function_algebra(spec, points)
    alg1 = function_algebra(spec, 1)
    per_stalk = {
        s: lie_normalizer(alg1, PointwiseIdeal(alg1.lattice, alg1.space, (s,)))
        for s in range(alg.lattice.size)
    }
    for fam in enumerate_compatible_families(alg.lattice, SpaceModel(points)):
        ideal = theta(fam)
        direct = lie_normalizer(alg, ideal)
        assembled = PointwiseSubspace(
            alg.space, tuple(per_stalk[s] for s in ideal.stalks)
        ).to_subspace()
        assert direct == assembled


# ---------------------------------------------------------------------------
# normalizer decomposition (unique maximal ideal)
# ---------------------------------------------------------------------------

def test_normalizer_decomposition_m2_all_ideals():
    alg = function_algebra(M2, 2)
    for ideal in enumerate_all_ideals(alg):
        check = normalizer_decomposition_check(alg, ideal)
        assert check.status == "PASS"


def test_normalizer_decomposition_single_point_zero_ideal():
    alg = function_algebra(M2, 1)
    check = normalizer_decomposition_check(alg, ideal_of(alg, 0))
    assert check.status == "PASS"
    assert check.normalizer_dim == 1


def test_normalizer_decomposition_trivial_on_whole_algebra():
    alg = function_algebra(M3, 1)
    check = normalizer_decomposition_check(alg, ideal_of(alg, 1))
    assert check.status == "PASS"
    assert check.normalizer_dim == 9


def test_normalizer_decomposition_precondition_reported():
    alg = function_algebra(M11, 1)
    check = normalizer_decomposition_check(alg, ideal_of(alg, 0))
    assert check.status == "PRECONDITION"
    assert "blocks" in check.detail


# ---------------------------------------------------------------------------
# commutator ideal span
# ---------------------------------------------------------------------------

def test_commutator_ideal_of_zero_is_zero():
    alg = function_algebra(M2, 2)
    assert commutator_ideal_span(alg, ideal_of(alg, 0, 0)) == Subspace.zero(alg.dim)


def test_commutator_ideal_of_whole_m2_is_trace_zero():
    alg = function_algebra(M2, 1)
    got = commutator_ideal_span(alg, ideal_of(alg, 1))
    assert got.dim == 3
    assert got == commutator_span(M2)


def test_commutator_ideal_commutative_algebra_is_zero():
    alg = function_algebra(M11, 2)
    top = ideal_of(alg, 3, 3)
    assert commutator_ideal_span(alg, top) == Subspace.zero(alg.dim)


@pytest.mark.parametrize("spec, points", [(M2, 1), (M2, 2), (M12, 2)])
def test_commutator_ideal_intersection_identity(spec, points):
    """span[J, B] = J intersect [B, B] for every ideal J."""
    alg = function_algebra(spec, points)
    top = ideal_of(alg, *([alg.lattice.top] * points))
    bb = commutator_ideal_span(alg, top)
    for ideal in enumerate_all_ideals(alg, verify=False):
        lhs = commutator_ideal_span(alg, ideal)
        rhs = intersect(alg.ideal_subspace(ideal), bb)
        assert lhs == rhs


@pytest.mark.parametrize("spec, points", [(M2, 1), (M3, 1), (M12, 1), (M2, 2)])
def test_tracial_states_annihilate_commutator_ideal(spec, points):
    """Pointwise block traces vanish on span[B, B]."""
    alg = function_algebra(spec, points)
    top = ideal_of(alg, *([alg.lattice.top] * points))
    bb = commutator_ideal_span(alg, top)
    d = spec.total_dim
    for x in range(points):
        for t in tracial_state_basis(spec):
            extended = [Scalar(0)] * alg.dim
            extended[x * d : (x + 1) * d] = list(t)
            for row in bb.basis:
                assert not vec_dot(extended, row)


# ---------------------------------------------------------------------------
# is_lie_ideal / sandwich
# ---------------------------------------------------------------------------

def test_zero_subspace_is_lie_ideal():
    alg = function_algebra(M2, 1)
    assert is_lie_ideal(LieCandidate(alg, Subspace.zero(alg.dim)))


def test_commutator_span_is_lie_ideal_with_top_witness():
    alg = function_algebra(M2, 1)
    sl = commutator_span(M2)
    cand = LieCandidate(alg, sl)
    assert is_lie_ideal(cand)
    assert sandwich_witness(cand).stalks == (1,)


def test_single_matrix_unit_is_not_lie_ideal():
    alg = function_algebra(M2, 1)
    e12 = rref([(Scalar(0), Scalar(1), Scalar(0), Scalar(0))], 4)
    cand = LieCandidate(alg, e12)
    assert not is_lie_ideal(cand)
    assert sandwich_witness(cand) is None


def test_centre_has_zero_ideal_witness():
    alg = function_algebra(M2, 2)
    cand = LieCandidate(alg, alg.centre_subspace)
    assert is_lie_ideal(cand)
    assert sandwich_witness(cand).stalks == (0, 0)


def test_lie_candidate_dimension_checked():
    alg = function_algebra(M2, 1)
    with pytest.raises(ValueError):
        LieCandidate(alg, Subspace.zero(3))


def test_ideal_plus_central_subspace_is_always_lie_ideal():
    alg = function_algebra(M2, 2)
    rng = random.Random(7)
    centre = alg.centre_subspace
    for ideal in enumerate_all_ideals(alg, verify=False):
        for _ in range(5):
            k_rows = []
            for row in centre.basis:
                c = Scalar(rng.randint(-2, 2))
                k_rows.append([c * v for v in row])
            sub = rref(list(alg.ideal_subspace(ideal).basis) + k_rows, alg.dim)
            assert is_lie_ideal(LieCandidate(alg, sub))


def test_sl_type_subspace_is_not_ideal_plus_centre():
    """In one matrix block the trace-zero Lie ideal escapes the ideal+centre form,
    which is why tracelessness matters for that representation."""
    alg = function_algebra(M2, 1)
    sl = commutator_span(M2)
    assert is_lie_ideal(LieCandidate(alg, sl))
    centre_subs = [Subspace.zero(4), alg.centre_subspace]
    for ideal in enumerate_all_ideals(alg, verify=False):
        for k in centre_subs:
            assert alg.ideal_subspace(ideal) + k != sl


@pytest.mark.parametrize("points", [1, 2])
def test_sandwich_random_suite_small(points):
    alg = function_algebra(M2, points)
    ok, lines = sandwich_random_suite(alg, seed=11, per_ideal=15, free_count=15)
    assert ok, lines


def test_random_lie_subspaces_equivalence():
    """Any seeded random subspace: lie ideal iff a sandwich witness exists."""
    alg = function_algebra(M2, 1)
    rng = random.Random(3)
    for _ in range(120):
        sub = random_subspace(alg.dim, rng)
        cand = LieCandidate(alg, sub)
        assert is_lie_ideal(cand) == (sandwich_witness(cand) is not None)


# ---------------------------------------------------------------------------
# CQP / weak centrality / transfer
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "spec, points",
    [(M2, 1), (M2, 2), (M11, 1), (M11, 2), (AlgebraSpec((2, 3)), 1), (AlgebraSpec((2, 3)), 2)],
)
def test_check_cqp_holds(spec, points):
    alg = function_algebra(spec, points)
    ok, lines = check_cqp(alg)
    assert ok
    assert len(lines) == alg.lattice.size**points
    assert all(line.startswith("PASS") for line in lines)


@pytest.mark.parametrize(
    "spec, points",
    [(M2, 1), (M11, 1), (AlgebraSpec((2, 2)), 2), (M12, 2)],
)
def test_weak_centrality_holds(spec, points):
    assert weak_centrality(function_algebra(spec, points))


def test_maximal_ideals_shape():
    alg = function_algebra(M11, 2)
    ideals = maximal_ideals(alg)
    assert len(ideals) == 4  # two coatoms, two points
    for ideal in ideals:
        dropped = [s for s in ideal.stalks if s != alg.lattice.top]
        assert len(dropped) == 1


@pytest.mark.parametrize(
    "spec, points",
    [(M2, 2), (AlgebraSpec((1, 1, 2)), 1), (M12, 2)],
)
def test_cqp_transfer_both_directions(spec, points):
    ok, lines = cqp_transfer_check(spec, SpaceModel(points))
    assert ok
    assert len(lines) == 4
    assert all(line.startswith("PASS") for line in lines)


def test_cqp_transfer_zero_points_skips():
    ok, lines = cqp_transfer_check(M2, SpaceModel(0))
    assert ok
    assert lines == ["SKIP points=0 function algebra is the zero algebra"]
