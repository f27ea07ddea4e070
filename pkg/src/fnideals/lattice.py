"""Finite bounded lattices, compatible closed-set families and gamma sets.

The point space X is finite and discrete (every finite Hausdorff space is),
so "closed subset of X" means "any subset", stored as a bitmask over the
points 0..|X|-1.  A family assigns one subset to every lattice index; it is
compatible when every meet relation among indices is mirrored by the
intersection of the assigned subsets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


class LimitExceeded(ValueError):
    """An exhaustive enumeration was asked to exceed its configured bound."""


@dataclass(frozen=True)
class BoundedLattice:
    """Finite lattice given by explicit meet and join tables.

    `bottom` and `top` are the indices of the least and greatest elements.
    The derived order is i <= j iff meet(i, j) == i.
    """

    size: int
    meet: tuple
    join: tuple
    bottom: int
    top: int

    def __post_init__(self):
        object.__setattr__(self, "meet", tuple(tuple(r) for r in self.meet))
        object.__setattr__(self, "join", tuple(tuple(r) for r in self.join))
        n = self.size
        if n < 1:
            raise ValueError("lattice must have at least one element")
        for name, table in (("meet", self.meet), ("join", self.join)):
            if len(table) != n:
                raise ValueError(f"{name} table must have {n} rows")
            for row in table:
                if len(row) != n:
                    raise ValueError(f"{name} table rows must have {n} entries")
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise ValueError(f"{name} table entry {v!r} out of range")
        for name, idx in (("bottom", self.bottom), ("top", self.top)):
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise ValueError(f"{name} index {idx!r} out of range")

    def leq(self, i: int, j: int) -> bool:
        return self.meet[i][j] == i

    def meet_all(self, indices: Iterable[int]) -> int:
        acc = self.top
        for i in indices:
            acc = self.meet[acc][i]
        return acc

    def join_all(self, indices: Iterable[int]) -> int:
        acc = self.bottom
        for i in indices:
            acc = self.join[acc][i]
        return acc

    def coatoms(self) -> tuple:
        """Indices covered by top: maximal among the non-top elements."""
        below_top = [i for i in range(self.size) if i != self.top]
        out = []
        for i in below_top:
            if any(j != i and self.leq(i, j) for j in below_top):
                continue
            out.append(i)
        return tuple(out)


def chain_lattice(m: int) -> BoundedLattice:
    """Total order 0 < 1 < ... < m-1."""
    if m < 1:
        raise ValueError("chain length must be positive")
    meet = tuple(tuple(min(i, j) for j in range(m)) for i in range(m))
    join = tuple(tuple(max(i, j) for j in range(m)) for i in range(m))
    return BoundedLattice(m, meet, join, 0, m - 1)


def boolean_lattice(k: int) -> BoundedLattice:
    """Subsets of a k-set, indexed by bitmask."""
    n = 1 << k
    meet = tuple(tuple(i & j for j in range(n)) for i in range(n))
    join = tuple(tuple(i | j for j in range(n)) for i in range(n))
    return BoundedLattice(n, meet, join, 0, n - 1)


def product_lattice(a: BoundedLattice, b: BoundedLattice) -> BoundedLattice:
    """Componentwise product; index of (i, j) is i * b.size + j."""
    n = a.size * b.size

    def pair(i):
        return divmod(i, b.size)

    def idx(p, q):
        return p * b.size + q

    meet = tuple(
        tuple(
            idx(a.meet[pair(i)[0]][pair(j)[0]], b.meet[pair(i)[1]][pair(j)[1]])
            for j in range(n)
        )
        for i in range(n)
    )
    join = tuple(
        tuple(
            idx(a.join[pair(i)[0]][pair(j)[0]], b.join[pair(i)[1]][pair(j)[1]])
            for j in range(n)
        )
        for i in range(n)
    )
    return BoundedLattice(n, meet, join, idx(a.bottom, b.bottom), idx(a.top, b.top))


def validate_lattice(lat: BoundedLattice) -> str | None:
    """Check every lattice law; return None or the first violation with witnesses."""
    n = lat.size
    meet, join = lat.meet, lat.join
    for i in range(n):
        if meet[i][i] != i:
            return f"meet idempotence violated at ({i},{i}): got {meet[i][i]}"
        if join[i][i] != i:
            return f"join idempotence violated at ({i},{i}): got {join[i][i]}"
    for i in range(n):
        for j in range(n):
            if meet[i][j] != meet[j][i]:
                return f"meet commutativity violated at ({i},{j})"
            if join[i][j] != join[j][i]:
                return f"join commutativity violated at ({i},{j})"
    for i in range(n):
        for j in range(n):
            if meet[i][join[i][j]] != i:
                return f"absorption meet(i, join(i,j)) violated at ({i},{j})"
            if join[i][meet[i][j]] != i:
                return f"absorption join(i, meet(i,j)) violated at ({i},{j})"
    for i in range(n):
        if meet[i][lat.top] != i:
            return f"top is not a unit for meet at ({i},{lat.top})"
        if join[i][lat.bottom] != i:
            return f"bottom is not a unit for join at ({i},{lat.bottom})"
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if meet[meet[i][j]][k] != meet[i][meet[j][k]]:
                    return f"meet associativity violated at ({i},{j},{k})"
                if join[join[i][j]][k] != join[i][join[j][k]]:
                    return f"join associativity violated at ({i},{j},{k})"
    return None


@dataclass(frozen=True)
class SpaceModel:
    """Finite discrete point space; subsets of X are bitmasks over the points."""

    point_count: int

    def __post_init__(self):
        if self.point_count < 0:
            raise ValueError("point count must be nonnegative")

    @property
    def full_mask(self) -> int:
        return (1 << self.point_count) - 1

    def points(self) -> range:
        return range(self.point_count)


def mask_to_points(mask: int) -> tuple:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def points_to_mask(points: Iterable[int], point_count: int) -> int:
    mask = 0
    for p in points:
        if not 0 <= p < point_count:
            raise ValueError(f"point {p} out of range [0, {point_count})")
        mask |= 1 << p
    return mask


@dataclass(frozen=True)
class ClosedFamily:
    """Assignment of a subset of X to every lattice index."""

    lattice: BoundedLattice
    space: SpaceModel
    sets: tuple

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        if len(self.sets) != self.lattice.size:
            raise ValueError("family must assign one subset per lattice index")
        full = self.space.full_mask
        for s in self.sets:
            if not isinstance(s, int) or s < 0 or s & ~full:
                raise ValueError(f"subset mask {s!r} out of range")


def _pairwise_compatible(lat: BoundedLattice, sets: tuple) -> bool:
    meet = lat.meet
    n = lat.size
    for i in range(n):
        si = sets[i]
        for j in range(i, n):
            if si & sets[j] != sets[meet[i][j]]:
                return False
    return True


def _exhaustive_compatible(lat: BoundedLattice, sets: tuple) -> bool:
    """Check every nonempty subset gamma of indices, not just pairs."""
    n = lat.size
    meet = lat.meet
    full_space = None
    meet_of = [0] * (1 << n)
    inter_of = [0] * (1 << n)
    for gamma in range(1, 1 << n):
        low = (gamma & -gamma).bit_length() - 1
        rest = gamma & (gamma - 1)
        if rest:
            meet_of[gamma] = meet[meet_of[rest]][low]
            inter_of[gamma] = inter_of[rest] & sets[low]
        else:
            meet_of[gamma] = low
            inter_of[gamma] = sets[low]
        if inter_of[gamma] != sets[meet_of[gamma]]:
            return False
    return True


def is_compatible(family: ClosedFamily, exhaustive: bool = False) -> bool:
    """Compatibility of the family with the lattice's meet structure.

    The fast mode checks all pairs; since the index family is the whole
    (meet-closed) lattice, arbitrary meets factor through pairwise meets.
    The exhaustive mode re-checks every subset of indices directly.
    """
    lat, sets = family.lattice, family.sets
    if sets[lat.top] != family.space.full_mask:
        raise ValueError("family must assign the full point set to the top index")
    if exhaustive:
        return _exhaustive_compatible(lat, sets)
    return _pairwise_compatible(lat, sets)


def compute_gamma(lat: BoundedLattice, j: int) -> frozenset:
    """Indices i whose element does not lie above j: { i : not (j <= i) }."""
    return frozenset(i for i in range(lat.size) if not lat.leq(j, i))


def gamma_table(lat: BoundedLattice) -> dict:
    """gamma_j for every non-bottom index j, ascending."""
    return {j: compute_gamma(lat, j) for j in range(lat.size) if j != lat.bottom}


def union_over_gamma(family: ClosedFamily, j: int) -> int:
    mask = 0
    for k in compute_gamma(family.lattice, j):
        mask |= family.sets[k]
    return mask


def lattice_from_dict(doc: dict) -> BoundedLattice:
    """Build a lattice from the JSON problem-file layout."""
    try:
        return BoundedLattice(
            size=doc["size"],
            meet=doc["meet"],
            join=doc["join"],
            bottom=doc["bottom"],
            top=doc["top"],
        )
    except KeyError as exc:
        raise ValueError(f"lattice object is missing member {exc.args[0]!r}") from None


def lattice_to_dict(lat: BoundedLattice) -> dict:
    return {
        "size": lat.size,
        "meet": [list(r) for r in lat.meet],
        "join": [list(r) for r in lat.join],
        "bottom": lat.bottom,
        "top": lat.top,
    }


def family_from_lists(lat: BoundedLattice, space: SpaceModel, lists) -> ClosedFamily:
    """Build a family from per-index sorted point lists."""
    if len(lists) != lat.size:
        raise ValueError("family must list one subset per lattice index")
    sets = tuple(points_to_mask(pts, space.point_count) for pts in lists)
    return ClosedFamily(lat, space, sets)


def family_to_lists(family: ClosedFamily) -> list:
    return [list(mask_to_points(s)) for s in family.sets]


def find_order_isomorphism(a: BoundedLattice, b: BoundedLattice):
    """A bijection carrying a's meet/join tables onto b's, or None.

    Backtracking with down-set/up-set size signatures as the pruning
    invariant; intended for the small lattices this package works with.
    """
    if a.size != b.size:
        return None

    def signature(lat):
        down = [sum(lat.leq(j, i) for j in range(lat.size)) for i in range(lat.size)]
        up = [sum(lat.leq(i, j) for j in range(lat.size)) for i in range(lat.size)]
        return [(down[i], up[i]) for i in range(lat.size)]

    sig_a, sig_b = signature(a), signature(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    n = a.size
    mapping = [-1] * n
    used = [False] * n

    def consistent(i, v):
        for j in range(n):
            w = mapping[j]
            if w < 0:
                continue
            mi, mj = a.meet[i][j], a.join[i][j]
            if mapping[mi] >= 0 and b.meet[v][w] != mapping[mi]:
                return False
            if mapping[mj] >= 0 and b.join[v][w] != mapping[mj]:
                return False
        return True

    def assign(i):
        if i == n:
            for p in range(n):
                for q in range(n):
                    if mapping[a.meet[p][q]] != b.meet[mapping[p]][mapping[q]]:
                        return False
                    if mapping[a.join[p][q]] != b.join[mapping[p]][mapping[q]]:
                        return False
            return True
        for v in range(n):
            if used[v] or sig_a[i] != sig_b[v]:
                continue
            mapping[i] = v
            used[v] = True
            if consistent(i, v) and assign(i + 1):
                return True
            mapping[i] = -1
            used[v] = False
        return False

    if assign(0):
        return tuple(mapping)
    return None


def enumerate_compatible_families(
    lat: BoundedLattice, space: SpaceModel, bound: int = 16
) -> list:
    """All compatible families with S_top = X, lexicographic in the mask tuple.

    Backtracks index by index; a pair (i, j) is checked as soon as i, j and
    meet(i, j) are all assigned, which prunes incompatible prefixes early.
    """
    n = lat.size
    if n * space.point_count > bound:
        raise LimitExceeded(
            f"lattice size * points = {n * space.point_count} exceeds bound {bound}"
        )
    triggers = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = lat.meet[i][j]
            triggers[max(i, j, m)].append((i, j, m))
    full = space.full_mask
    all_masks = range(full + 1)
    sets = [0] * n
    out = []

    def assign(pos: int):
        if pos == n:
            out.append(ClosedFamily(lat, space, tuple(sets)))
            return
        candidates = (full,) if pos == lat.top else all_masks
        for mask in candidates:
            sets[pos] = mask
            if all(sets[i] & sets[j] == sets[m] for i, j, m in triggers[pos]):
                assign(pos + 1)

    assign(0)
    return out
