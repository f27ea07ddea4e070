"""The finite model of algebra-valued function spaces.

For a discrete finite point set X and a block algebra A, the function
algebra B = A^X carries one copy of A per point (coordinates are laid out
point-major).  Its two-sided ideals are pointwise families x -> I_stalk(x);
the correspondence theta maps a compatible closed-set family to such an
ideal and recover_S inverts it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .fdalgebra import (
    AlgebraSpec,
    Element,
    IdealLattice,
    commutator as element_commutator,
    enumerate_ideals,
    ideal_closure,
)
from .lattice import (
    BoundedLattice,
    ClosedFamily,
    LimitExceeded,
    SpaceModel,
    is_compatible,
)
from .linalg import ONE, ZERO, Scalar, Subspace, rref


@dataclass(frozen=True)
class PointwiseIdeal:
    """Ideal of A^X as a map point -> index into the ideal lattice of A."""

    lattice: BoundedLattice
    space: SpaceModel
    stalks: tuple

    def __post_init__(self):
        object.__setattr__(self, "stalks", tuple(self.stalks))
        if len(self.stalks) != self.space.point_count:
            raise ValueError("one stalk per point is required")
        for s in self.stalks:
            if not isinstance(s, int) or not 0 <= s < self.lattice.size:
                raise ValueError(f"stalk index {s!r} out of range")


def theta(family: ClosedFamily, check: bool = True) -> PointwiseIdeal:
    """Map a compatible family to the ideal { f : f(S_i) inside I_i for all i }.

    Pointwise this is stalk(x) = meet of { i : x in S_i }; the meet set is
    nonempty because the top index always carries the full point set.
    """
    if check and not is_compatible(family):
        raise ValueError("family is not compatible with the lattice")
    lat = family.lattice
    stalks = []
    for x in family.space.points():
        bit = 1 << x
        stalks.append(lat.meet_all(i for i, s in enumerate(family.sets) if s & bit))
    return PointwiseIdeal(lat, family.space, tuple(stalks))


def recover_S(ideal: PointwiseIdeal) -> ClosedFamily:
    """Inverse of theta: S_i = { x : stalk(x) <= i }."""
    lat = ideal.lattice
    sets = []
    for i in range(lat.size):
        mask = 0
        for x, s in enumerate(ideal.stalks):
            if lat.leq(s, i):
                mask |= 1 << x
        sets.append(mask)
    return ClosedFamily(lat, ideal.space, tuple(sets))


class FunctionAlgebra:
    """B = A^X for a block algebra A and a finite discrete point set X.

    Heavy derived data (the ideal lattice of A, commutator tables, ideal
    subspaces) is computed once and cached; instances are immutable.
    """

    def __init__(self, spec: AlgebraSpec, space: SpaceModel):
        self.spec = spec
        self.space = space
        self.dim = space.point_count * spec.total_dim
        self._ideal_subspaces: dict = {}
        self._sandwich_bounds = None

    def __repr__(self):
        return f"FunctionAlgebra({self.spec.block_dims}, points={self.space.point_count})"

    @property
    def ideal_lattice(self) -> IdealLattice:
        return enumerate_ideals(self.spec)

    @property
    def lattice(self) -> BoundedLattice:
        return self.ideal_lattice.lattice

    def offset(self, x: int) -> int:
        return x * self.spec.total_dim

    def coord_info(self, index: int) -> tuple:
        """(point, block, row, col) of a flat coordinate of B."""
        d = self.spec.total_dim
        x, rem = divmod(index, d)
        b, p, q = self.spec.coord_info(rem)
        return x, b, p, q

    def basis_element(self, index: int) -> "FunctionElement":
        x, b, p, q = self.coord_info(index)
        values = [Element.zero(self.spec)] * self.space.point_count
        values[x] = Element.matrix_unit(self.spec, b, p, q)
        return FunctionElement(self.spec, self.space, tuple(values))

    def element_from_vector(self, vec) -> "FunctionElement":
        d = self.spec.total_dim
        if len(vec) != self.dim:
            raise ValueError("vector length differs from the algebra dimension")
        values = tuple(
            Element.from_vector(self.spec, vec[x * d : (x + 1) * d])
            for x in self.space.points()
        )
        return FunctionElement(self.spec, self.space, values)

    @property
    def commutator_table(self) -> tuple:
        """comm[i][b] = sparse coordinates of [e_i, e_b] for basis pairs."""
        if not hasattr(self, "_comm_table"):
            d = self.spec.total_dim
            per_point = []
            units = list(self.spec.unit_coords())
            elems = [Element.matrix_unit(self.spec, *u) for u in units]
            for i in range(d):
                row = []
                for b in range(d):
                    vec = element_commutator(elems[i], elems[b]).to_vector()
                    row.append(tuple((c, v) for c, v in enumerate(vec) if v))
                per_point.append(row)
            table = []
            for idx in range(self.dim):
                x, off = divmod(idx, d)
                row = []
                for bidx in range(self.dim):
                    xb, offb = divmod(bidx, d)
                    if xb != x:
                        row.append(())
                    else:
                        base = x * d
                        row.append(tuple((base + c, v) for c, v in per_point[off][offb]))
                table.append(tuple(row))
            self._comm_table = tuple(table)
        return self._comm_table

    @property
    def centre_subspace(self) -> Subspace:
        """Central functions: pointwise multiples of the block identities."""
        if not hasattr(self, "_centre"):
            rows = []
            for x in self.space.points():
                for b, n in enumerate(self.spec.block_dims):
                    row = [ZERO] * self.dim
                    for p in range(n):
                        row[self.offset(x) + self.spec.coord(b, p, p)] = ONE
                    rows.append(row)
            self._centre = rref(rows, self.dim)
        return self._centre

    def ideal_subspace(self, ideal: PointwiseIdeal) -> Subspace:
        """Materialize a pointwise ideal as a subspace of B's coordinate space."""
        key = ideal.stalks
        cached = self._ideal_subspaces.get(key)
        if cached is not None:
            return cached
        il = self.ideal_lattice
        rows = []
        for x, s in enumerate(ideal.stalks):
            mask = il.ideals[s].blocks_present
            base = self.offset(x)
            for b, p, q in self.spec.unit_coords():
                if mask >> b & 1:
                    row = [ZERO] * self.dim
                    row[base + self.spec.coord(b, p, q)] = ONE
                    rows.append(row)
        sub = rref(rows, self.dim)
        self._ideal_subspaces[key] = sub
        return sub

    def pointwise_parts(self, ideal: PointwiseIdeal) -> "PointwiseSubspace":
        il = self.ideal_lattice
        return PointwiseSubspace(
            self.space,
            tuple(il.ideals[s].subspace() for s in ideal.stalks),
        )


@lru_cache(maxsize=None)
def function_algebra(spec: AlgebraSpec, points: int) -> FunctionAlgebra:
    """Shared FunctionAlgebra instances so caches are reused."""
    return FunctionAlgebra(spec, SpaceModel(points))


@dataclass(frozen=True)
class FunctionElement:
    """Member of A^X: one Element per point."""

    spec: AlgebraSpec
    space: SpaceModel
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.space.point_count:
            raise ValueError("one value per point is required")
        for v in self.values:
            if v.spec != self.spec:
                raise ValueError("value belongs to a different algebra")

    def _check(self, other: "FunctionElement"):
        if self.spec != other.spec or self.space != other.space:
            raise ValueError("elements belong to different function algebras")

    def __add__(self, other):
        self._check(other)
        return FunctionElement(
            self.spec, self.space, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __sub__(self, other):
        self._check(other)
        return FunctionElement(
            self.spec, self.space, tuple(a - b for a, b in zip(self.values, other.values))
        )

    def __mul__(self, other):
        self._check(other)
        return FunctionElement(
            self.spec, self.space, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def to_vector(self) -> tuple:
        out = []
        for v in self.values:
            out.extend(v.to_vector())
        return tuple(out)


def function_commutator(x: FunctionElement, y: FunctionElement) -> FunctionElement:
    return x * y - y * x


def enumerate_all_ideals(
    alg: FunctionAlgebra, bound: int = 4096, verify: bool = True
) -> list:
    """All pointwise ideals of A^X in lexicographic stalk order.

    With verify=True each ideal's subspace is checked to be two-sided
    invariant under multiplication by every basis element of B.
    """
    lat = alg.lattice
    count = lat.size ** alg.space.point_count
    if count > bound:
        raise LimitExceeded(f"{count} stalk assignments exceed the bound {bound}")
    out = []
    for stalks in itertools.product(range(lat.size), repeat=alg.space.point_count):
        ideal = PointwiseIdeal(lat, alg.space, stalks)
        if verify:
            _verify_invariance(alg, ideal)
        out.append(ideal)
    return out


def _verify_invariance(alg: FunctionAlgebra, ideal: PointwiseIdeal):
    sub = alg.ideal_subspace(ideal)
    for row in sub.basis:
        v = alg.element_from_vector(row)
        for b in range(alg.dim):
            a = alg.basis_element(b)
            if not sub.contains((a * v).to_vector()) or not sub.contains((v * a).to_vector()):
                raise AssertionError(f"stalks {ideal.stalks} give a non-invariant subspace")


def brute_force_function_ideals(alg: FunctionAlgebra, dim_limit: int = 5) -> frozenset:
    """Closure search over basis subsets of B; completeness oracle."""
    d = alg.dim
    if d > dim_limit:
        raise LimitExceeded(f"total dimension {d} exceeds the search limit {dim_limit}")
    basis = [alg.basis_element(i) for i in range(d)]
    unit_rows = list(Subspace.full(d).basis)
    found = set()
    for r in range(d + 1):
        for subset in itertools.combinations(unit_rows, r):
            current = rref(list(subset), d)
            while True:
                rows = list(current.basis)
                for row in current.basis:
                    v = alg.element_from_vector(row)
                    for a in basis:
                        rows.append((a * v).to_vector())
                        rows.append((v * a).to_vector())
                closed = rref(rows, d)
                if closed.dim == current.dim:
                    break
                current = closed
            found.add(current)
    return frozenset(found)


@dataclass(frozen=True)
class PointwiseSubspace:
    """Family of subspaces of A, one per point of X."""

    space: SpaceModel
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) != self.space.point_count:
            raise ValueError("one part per point is required")

    def __add__(self, other: "PointwiseSubspace") -> "PointwiseSubspace":
        if self.space != other.space:
            raise ValueError("point spaces differ")
        return PointwiseSubspace(
            self.space, tuple(a + b for a, b in zip(self.parts, other.parts))
        )

    def to_subspace(self) -> Subspace:
        """Embed as a subspace of the full coordinate space of A^X."""
        if not self.parts:
            return Subspace.zero(0)
        d = self.parts[0].ambient_dim
        dim = d * self.space.point_count
        rows = []
        for x, part in enumerate(self.parts):
            for row in part.basis:
                big = [ZERO] * dim
                big[x * d : (x + 1) * d] = list(row)
                rows.append(big)
        return rref(rows, dim)


def product_subspace(alg: FunctionAlgebra, y_mask: int, c: Subspace) -> PointwiseSubspace:
    """The family vanishing on Y with values in C elsewhere.

    This is the pointwise image of the product J(Y) x C under the canonical
    identification of tensors f (x) a with the function x -> f(x) a.
    """
    if c.ambient_dim != alg.spec.total_dim:
        raise ValueError("subspace must live in the coordinate space of A")
    zero = Subspace.zero(alg.spec.total_dim)
    parts = tuple(
        zero if y_mask >> x & 1 else c for x in alg.space.points()
    )
    return PointwiseSubspace(alg.space, parts)


@dataclass(frozen=True)
class YRestrictionResult:
    """ideal_from_Y_and_I output: the ideal plus the product-sum equality check."""

    ideal: PointwiseIdeal
    sum_matches: bool


def ideal_from_Y_and_I(alg: FunctionAlgebra, y_mask: int, t: int) -> YRestrictionResult:
    """The ideal { f : f(Y) inside I_t } and its two-product-term decomposition.

    Stalks are I_t on Y and the whole algebra off Y; the result records
    whether this equals product_subspace(empty, I_t) + product_subspace(Y, A)
    computed pointwise with exact subspace sums.
    """
    lat = alg.lattice
    if not 0 <= t < lat.size:
        raise ValueError(f"ideal index {t} out of range")
    stalks = tuple(
        t if y_mask >> x & 1 else lat.top for x in alg.space.points()
    )
    ideal = PointwiseIdeal(lat, alg.space, stalks)
    it_sub = alg.ideal_lattice.ideals[t].subspace()
    full = Subspace.full(alg.spec.total_dim)
    summed = product_subspace(alg, 0, it_sub) + product_subspace(alg, y_mask, full)
    matches = summed == alg.pointwise_parts(ideal)
    return YRestrictionResult(ideal, matches)
