"""Finite-dimensional block matrix algebras and their ideal lattices.

An algebra is a direct sum of full matrix blocks M_{n_1} + ... + M_{n_k}.
Its two-sided ideals are exactly the block sums, represented as bitmasks
over the blocks; the enumeration never trusts that classification blindly,
every returned subspace is re-checked for two-sided invariance and (at
small dimension) an independent closure search confirms completeness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattice import BoundedLattice, LimitExceeded
from .linalg import ONE, ZERO, Scalar, Subspace, rref


@dataclass(frozen=True)
class AlgebraSpec:
    """Block structure [n_1, ..., n_k] of a direct sum of matrix algebras."""

    block_dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "block_dims", tuple(self.block_dims))
        if not self.block_dims:
            raise ValueError("at least one block is required")
        for n in self.block_dims:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"block dimension {n!r} must be a positive integer")

    @property
    def num_blocks(self) -> int:
        return len(self.block_dims)

    @property
    def total_dim(self) -> int:
        return sum(n * n for n in self.block_dims)

    def block_offset(self, b: int) -> int:
        return sum(n * n for n in self.block_dims[:b])

    def coord(self, b: int, p: int, q: int) -> int:
        return self.block_offset(b) + p * self.block_dims[b] + q

    def coord_info(self, index: int) -> tuple:
        """Inverse of coord: (block, row, col) of a flat coordinate."""
        for b, n in enumerate(self.block_dims):
            if index < n * n:
                return b, index // n, index % n
            index -= n * n
        raise IndexError("coordinate out of range")

    def unit_coords(self):
        """All (block, row, col) triples in flat coordinate order."""
        for b, n in enumerate(self.block_dims):
            for p in range(n):
                for q in range(n):
                    yield b, p, q


def unit_product(u: tuple, v: tuple):
    """Product of matrix units e(b,p,q) * e(b',r,s): None when zero."""
    b1, p, q = u
    b2, r, s = v
    if b1 != b2 or q != r:
        return None
    return (b1, p, s)


@dataclass(frozen=True)
class Element:
    """Member of a block algebra: one square Scalar matrix per block."""

    spec: AlgebraSpec
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(tuple(row) for row in blk) for blk in self.blocks)
        )
        dims = self.spec.block_dims
        if len(self.blocks) != len(dims):
            raise ValueError("block count differs from algebra layout")
        for blk, n in zip(self.blocks, dims):
            if len(blk) != n or any(len(row) != n for row in blk):
                raise ValueError("block shape differs from algebra layout")

    @staticmethod
    def zero(spec: AlgebraSpec) -> "Element":
        return Element(spec, tuple(((ZERO,) * n,) * n for n in spec.block_dims))

    @staticmethod
    def identity(spec: AlgebraSpec) -> "Element":
        blocks = []
        for n in spec.block_dims:
            blocks.append(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))
        return Element(spec, tuple(blocks))

    @staticmethod
    def matrix_unit(spec: AlgebraSpec, b: int, p: int, q: int) -> "Element":
        blocks = []
        for bi, n in enumerate(spec.block_dims):
            blocks.append(
                tuple(
                    tuple(ONE if (bi == b and i == p and j == q) else ZERO for j in range(n))
                    for i in range(n)
                )
            )
        return Element(spec, tuple(blocks))

    @staticmethod
    def from_vector(spec: AlgebraSpec, vec) -> "Element":
        if len(vec) != spec.total_dim:
            raise ValueError("vector length differs from algebra dimension")
        blocks = []
        pos = 0
        for n in spec.block_dims:
            blk = []
            for i in range(n):
                blk.append(tuple(v if isinstance(v, Scalar) else Scalar(v) for v in vec[pos : pos + n]))
                pos += n
            blocks.append(tuple(blk))
        return Element(spec, tuple(blocks))

    def to_vector(self) -> tuple:
        out = []
        for blk in self.blocks:
            for row in blk:
                out.extend(row)
        return tuple(out)

    def _check_spec(self, other: "Element"):
        if self.spec != other.spec:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check_spec(other)
        return Element(
            self.spec,
            tuple(
                tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(b1, b2))
                for b1, b2 in zip(self.blocks, other.blocks)
            ),
        )

    def __sub__(self, other: "Element") -> "Element":
        self._check_spec(other)
        return Element(
            self.spec,
            tuple(
                tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(b1, b2))
                for b1, b2 in zip(self.blocks, other.blocks)
            ),
        )

    def scale(self, c: Scalar) -> "Element":
        return Element(
            self.spec,
            tuple(tuple(tuple(c * a for a in row) for row in blk) for blk in self.blocks),
        )

    def __mul__(self, other: "Element") -> "Element":
        self._check_spec(other)
        blocks = []
        for blk_x, blk_y, n in zip(self.blocks, other.blocks, self.spec.block_dims):
            out = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                row = blk_x[i]
                for k in range(n):
                    f = row[k]
                    if not f:
                        continue
                    yrow = blk_y[k]
                    orow = out[i]
                    for j in range(n):
                        g = yrow[j]
                        if g:
                            orow[j] = orow[j] + f * g
            blocks.append(tuple(tuple(r) for r in out))
        return Element(self.spec, tuple(blocks))


def multiply(x: Element, y: Element) -> Element:
    return x * y


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def centre(spec: AlgebraSpec) -> Subspace:
    """Span of the block identities; one dimension per block."""
    d = spec.total_dim
    rows = []
    for b, n in enumerate(spec.block_dims):
        row = [ZERO] * d
        for p in range(n):
            row[spec.coord(b, p, p)] = ONE
        rows.append(row)
    return rref(rows, d)


@lru_cache(maxsize=None)
def commutator_span(spec: AlgebraSpec) -> Subspace:
    """Span of all commutators of basis pairs; the trace-zero part blockwise."""
    d = spec.total_dim
    units = [Element.matrix_unit(spec, *c) for c in spec.unit_coords()]
    rows = []
    for i, x in enumerate(units):
        for y in units[i + 1 :]:
            rows.append(commutator(x, y).to_vector())
    return rref(rows, d)


@dataclass(frozen=True)
class BlockIdeal:
    """Two-sided ideal: the sum of the blocks present in the bitmask."""

    spec: AlgebraSpec
    blocks_present: int

    def __post_init__(self):
        if not 0 <= self.blocks_present < (1 << self.spec.num_blocks):
            raise ValueError("block mask out of range")

    def subspace(self) -> Subspace:
        d = self.spec.total_dim
        rows = []
        for b, p, q in self.spec.unit_coords():
            if self.blocks_present >> b & 1:
                row = [ZERO] * d
                row[self.spec.coord(b, p, q)] = ONE
                rows.append(row)
        return rref(rows, d)


@dataclass(frozen=True)
class IdealLattice:
    """The full ideal lattice of a block algebra, indexed by block mask."""

    spec: AlgebraSpec
    lattice: BoundedLattice
    ideals: tuple


@lru_cache(maxsize=None)
def enumerate_ideals(spec: AlgebraSpec, max_blocks: int = 6) -> IdealLattice:
    """All 2^k block-sum ideals with meet/join = mask AND/OR.

    Every returned subspace is checked to be invariant under two-sided
    multiplication by all basis elements.
    """
    k = spec.num_blocks
    if k > max_blocks:
        raise LimitExceeded(f"{k} blocks exceeds the configured bound {max_blocks}")
    n = 1 << k
    meet = tuple(tuple(i & j for j in range(n)) for i in range(n))
    join = tuple(tuple(i | j for j in range(n)) for i in range(n))
    lat = BoundedLattice(n, meet, join, 0, n - 1)
    units = [Element.matrix_unit(spec, *c) for c in spec.unit_coords()]
    ideals = []
    for mask in range(n):
        ideal = BlockIdeal(spec, mask)
        sub = ideal.subspace()
        for row in sub.basis:
            v = Element.from_vector(spec, row)
            for a in units:
                if not sub.contains((a * v).to_vector()):
                    raise AssertionError(f"ideal mask {mask:b} not left-invariant")
                if not sub.contains((v * a).to_vector()):
                    raise AssertionError(f"ideal mask {mask:b} not right-invariant")
        ideals.append(ideal)
    return IdealLattice(spec, lat, tuple(ideals))


def tracial_state_basis(spec: AlgebraSpec) -> tuple:
    """Normalized block traces as dual coordinate vectors; never empty."""
    d = spec.total_dim
    out = []
    for b, n in enumerate(spec.block_dims):
        row = [ZERO] * d
        w = Scalar(Fraction(1, n))
        for p in range(n):
            row[spec.coord(b, p, p)] = w
        out.append(tuple(row))
    return tuple(out)


def ideal_closure(spec: AlgebraSpec, generators) -> Subspace:
    """Smallest multiplication-invariant subspace containing the generators."""
    d = spec.total_dim
    units = [Element.matrix_unit(spec, *c) for c in spec.unit_coords()]
    current = rref(list(generators), d)
    while True:
        rows = list(current.basis)
        for row in current.basis:
            v = Element.from_vector(spec, row)
            for a in units:
                rows.append((a * v).to_vector())
                rows.append((v * a).to_vector())
        closed = rref(rows, d)
        if closed.dim == current.dim:
            return closed
        current = closed


def brute_force_ideal_subspaces(spec: AlgebraSpec, dim_limit: int = 5) -> frozenset:
    """Closures of every subset of the matrix-unit basis grid.

    Independent completeness oracle for enumerate_ideals: each closure is a
    two-sided ideal, and every block-sum ideal arises from its own units, so
    the closure set must equal the enumerated lattice exactly.
    """
    d = spec.total_dim
    if d > dim_limit:
        raise LimitExceeded(f"total dimension {d} exceeds the search limit {dim_limit}")
    unit_rows = list(Subspace.full(d).basis)
    found = set()
    for r in range(d + 1):
        for subset in itertools.combinations(unit_rows, r):
            found.add(ideal_closure(spec, subset))
    return frozenset(found)
