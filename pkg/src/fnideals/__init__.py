"""Exhaustive finite-model verification of ideal and Lie-ideal lattices of
algebra-valued function algebras.

Everything is exact (Gaussian-rational arithmetic) and every value type is
immutable, so the library is safe to drive from concurrent callers.
"""

from .decomposition import Decomposition, decompose, evaluate, verify_theorem
from .fdalgebra import (
    AlgebraSpec,
    BlockIdeal,
    Element,
    IdealLattice,
    centre,
    commutator,
    commutator_span,
    enumerate_ideals,
    multiply,
    tracial_state_basis,
)
from .fixtures import Fixture, bh2_fixture, block_fixture, chain_fixture, load_fixture
from .function_algebra import (
    FunctionAlgebra,
    FunctionElement,
    PointwiseIdeal,
    PointwiseSubspace,
    enumerate_all_ideals,
    function_algebra,
    ideal_from_Y_and_I,
    product_subspace,
    recover_S,
    theta,
)
from .lattice import (
    BoundedLattice,
    ClosedFamily,
    LimitExceeded,
    SpaceModel,
    compute_gamma,
    enumerate_compatible_families,
    gamma_table,
    is_compatible,
    union_over_gamma,
    validate_lattice,
)
from .lie import (
    LieCandidate,
    check_cqp,
    commutator_ideal_span,
    cqp_transfer_check,
    is_lie_ideal,
    lie_normalizer,
    normalizer_decomposition_check,
    sandwich_witness,
    weak_centrality,
)
from .linalg import Scalar, Subspace, annihilator, intersect, rref

__version__ = "0.1.0"
