"""Command-line surface: load a problem, run a suite, print a stable report.

Problems are JSON documents (see README for the schema); a bundled fixture
can stand in for the lattice via --fixture.  All indices in JSON are
0-based; printed reports label ideals 1-based to match the usual I_1..I_n
numbering.  Exit codes: 0 all checks passed, 1 a checked identity failed,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import fixtures as fixtures_mod
from .decomposition import decompose, verify_theorem
from .fdalgebra import AlgebraSpec, enumerate_ideals
from .function_algebra import (
    FunctionAlgebra,
    PointwiseIdeal,
    enumerate_all_ideals,
    function_algebra,
    ideal_from_Y_and_I,
    recover_S,
    theta,
)
from .lattice import (
    BoundedLattice,
    ClosedFamily,
    LimitExceeded,
    SpaceModel,
    _exhaustive_compatible,
    _pairwise_compatible,
    compute_gamma,
    enumerate_compatible_families,
    family_from_lists,
    find_order_isomorphism,
    is_compatible,
    lattice_from_dict,
    mask_to_points,
    points_to_mask,
    validate_lattice,
)
from .lie import (
    LieCandidate,
    check_cqp,
    cqp_transfer_check,
    is_lie_ideal,
    lie_normalizer,
    normalizer_decomposition_check,
    sandwich_random_suite,
    sandwich_witness,
    weak_centrality,
)
from .linalg import Scalar, Subspace, rref

MAX_LATTICE_SIZE = 12
MAX_POINTS = 4
MAX_POINT_DIM = 32
DEFAULT_FAMILY_BOUND = 16


class InputError(Exception):
    """Bad problem input; mapped to exit code 2."""


@dataclass
class Problem:
    name: str
    lattice: BoundedLattice | None = None
    spec: AlgebraSpec | None = None
    iso: tuple | None = None  # problem lattice index -> block lattice index
    points: int | None = None
    family: ClosedFamily | None = None
    stalks: tuple | None = None
    y_points: tuple | None = None
    ideal_index: int | None = None
    subspace_rows: tuple | None = None


def _scalar_from_json(v):
    if isinstance(v, bool):
        raise InputError(f"scalar entry {v!r} is not a number")
    if isinstance(v, int):
        return Scalar(v)
    if isinstance(v, float):
        if v.is_integer():
            return Scalar(int(v))
        raise InputError(f"scalar entry {v!r} is not exact; use a rational string")
    if isinstance(v, str):
        try:
            return Scalar.parse(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse scalar {v!r}: {exc}") from None
    raise InputError(f"scalar entry {v!r} has unsupported type")


def _load_document(path: str) -> dict:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise InputError("problem file must contain a JSON object")
    return doc


def _resolve_problem(args) -> Problem:
    doc = _load_document(args.problem) if getattr(args, "problem", None) else {}
    fixture = None
    if getattr(args, "fixture", None):
        try:
            fixture = fixtures_mod.load_fixture(args.fixture)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    name = fixture.name if fixture else "problem"

    lattice = None
    spec = None
    iso = None
    if "blocks" in doc or "lattice" in doc:
        if fixture is not None:
            raise InputError("the problem file and --fixture both provide a lattice")
        if "blocks" in doc:
            try:
                spec = AlgebraSpec(tuple(doc["blocks"]))
            except (TypeError, ValueError) as exc:
                raise InputError(f"bad blocks member: {exc}") from None
        if "lattice" in doc:
            try:
                lattice = lattice_from_dict(doc["lattice"])
            except ValueError as exc:
                raise InputError(f"bad lattice member: {exc}") from None
        if spec is not None and lattice is not None:
            block_lat = enumerate_ideals(spec).lattice
            iso = find_order_isomorphism(lattice, block_lat)
            if iso is None:
                raise InputError("blocks and lattice members are not order-isomorphic")
        elif spec is not None:
            lattice = enumerate_ideals(spec).lattice
    elif fixture is not None:
        lattice = fixture.lattice
        spec = fixture.spec

    points = doc.get("points")
    if points is None and fixture is not None and fixture.family is not None:
        points = fixture.family.space.point_count
    if points is None and fixture is not None:
        points = 2
    if points is not None and (not isinstance(points, int) or points < 0):
        raise InputError(f"points must be a nonnegative integer, got {points!r}")

    problem = Problem(name=name, lattice=lattice, spec=spec, iso=iso, points=points)

    if lattice is not None and lattice.size > MAX_LATTICE_SIZE:
        raise InputError(f"lattice size {lattice.size} exceeds the limit {MAX_LATTICE_SIZE}")
    if points is not None and points > MAX_POINTS:
        raise InputError(f"points = {points} exceeds the limit {MAX_POINTS}")
    if spec is not None and spec.total_dim > MAX_POINT_DIM:
        raise InputError(
            f"algebra dimension {spec.total_dim} exceeds the per-point limit {MAX_POINT_DIM}"
        )

    if "family" in doc:
        if lattice is None or points is None:
            raise InputError("family requires a lattice and points")
        try:
            problem.family = family_from_lists(lattice, SpaceModel(points), doc["family"])
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad family member: {exc}") from None
    elif fixture is not None and fixture.family is not None:
        if points == fixture.family.space.point_count:
            problem.family = fixture.family

    if "ideal" in doc:
        stalks = doc["ideal"]
        if lattice is None or points is None:
            raise InputError("ideal requires a lattice and points")
        if not isinstance(stalks, list) or len(stalks) != points:
            raise InputError("ideal must list one stalk index per point")
        for s in stalks:
            if not isinstance(s, int) or not 0 <= s < lattice.size:
                raise InputError(f"stalk index {s!r} out of range")
        problem.stalks = tuple(stalks)

    if "Y" in doc:
        if points is None:
            raise InputError("Y requires points")
        try:
            points_to_mask(doc["Y"], points)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad Y member: {exc}") from None
        problem.y_points = tuple(doc["Y"])

    if "ideal_index" in doc:
        t = doc["ideal_index"]
        if lattice is None or not isinstance(t, int) or not 0 <= t < lattice.size:
            raise InputError(f"ideal_index {t!r} out of range")
        problem.ideal_index = t

    if "subspace" in doc:
        rows = doc["subspace"]
        if not isinstance(rows, list):
            raise InputError("subspace must be a list of rows")
        problem.subspace_rows = tuple(
            tuple(_scalar_from_json(v) for v in row) for row in rows
        )

    return problem


def _need(problem: Problem, attr: str, what: str):
    value = getattr(problem, attr)
    if value is None:
        raise InputError(f"this command needs {what}")
    return value


def _need_algebra(problem: Problem) -> FunctionAlgebra:
    spec = _need(problem, "spec", "a concrete block algebra (blocks member or fixture)")
    points = _need(problem, "points", "a points member")
    return function_algebra(spec, points)


def _to_block_index(problem: Problem, index: int) -> int:
    return index if problem.iso is None else problem.iso[index]


def _block_stalks(problem: Problem, stalks: tuple) -> tuple:
    return tuple(_to_block_index(problem, s) for s in stalks)


def _fmt_points(mask_or_points) -> str:
    pts = mask_to_points(mask_or_points) if isinstance(mask_or_points, int) else mask_or_points
    return "{" + ",".join(str(p) for p in pts) + "}"


def _fmt_indices(indices) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(indices)) + "}"


def cmd_validate(problem: Problem, args) -> int:
    lat = _need(problem, "lattice", "a lattice")
    violation = validate_lattice(lat)
    if violation is None:
        print("ok")
        return 0
    print(f"FAIL {violation}")
    return 1


def cmd_compat(problem: Problem, args) -> int:
    lat = _need(problem, "lattice", "a lattice")
    family = _need(problem, "family", "a family member")
    try:
        good = is_compatible(family, exhaustive=args.oracle)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print("compatible" if good else "incompatible")
    return 0 if good else 1


def cmd_gamma(problem: Problem, args) -> int:
    lat = _need(problem, "lattice", "a lattice")
    for j in range(lat.size):
        if j == lat.bottom:
            continue
        print(f"gamma_{j + 1} = {_fmt_indices(compute_gamma(lat, j))}")
    return 0


def cmd_theta(problem: Problem, args) -> int:
    family = _need(problem, "family", "a family member")
    try:
        ideal = theta(family)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for x, s in enumerate(ideal.stalks):
        print(f"stalk[{x}] = {s + 1}")
    return 0


def cmd_recover(problem: Problem, args) -> int:
    lat = _need(problem, "lattice", "a lattice")
    stalks = _need(problem, "stalks", "an ideal member (stalk list)")
    points = _need(problem, "points", "a points member")
    family = recover_S(PointwiseIdeal(lat, SpaceModel(points), stalks))
    for i, mask in enumerate(family.sets):
        print(f"S[{i + 1}] = {_fmt_points(mask)}")
    return 0


def cmd_decompose(problem: Problem, args) -> int:
    family = _need(problem, "family", "a family member")
    try:
        dec = decompose(family)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    full = family.space.full_mask
    for y, j in dec.terms:
        if args.minimal and y == full:
            continue
        print(f"term[{j + 1}]: Y = {_fmt_points(y)}")
    return 0


def cmd_verify_fin_sum(problem: Problem, args) -> int:
    lat = _need(problem, "lattice", "a lattice")
    points = _need(problem, "points", "a points member")
    bound = args.bound if args.bound is not None else DEFAULT_FAMILY_BOUND
    families = enumerate_compatible_families(lat, SpaceModel(points), bound=bound)
    passed = 0
    for idx, family in enumerate(families):
        report = verify_theorem(family)
        ok = all(good for _, good in report)
        passed += ok
        for identity, good in report:
            print(f"{'PASS' if good else 'FAIL'} {problem.name} {idx} {identity}")
    print(f"{passed}/{len(families)} families PASS")
    return 0 if passed == len(families) else 1


def cmd_ideal_from_y(problem: Problem, args) -> int:
    alg = _need_algebra(problem)
    y_points = _need(problem, "y_points", "a Y member")
    t = _need(problem, "ideal_index", "an ideal_index member")
    y_mask = points_to_mask(y_points, alg.space.point_count)
    result = ideal_from_Y_and_I(alg, y_mask, _to_block_index(problem, t))
    for x, s in enumerate(result.ideal.stalks):
        print(f"stalk[{x}] = {s + 1}")
    print(f"{'PASS' if result.sum_matches else 'FAIL'} product-sum-equality")
    return 0 if result.sum_matches else 1


def cmd_normalizer(problem: Problem, args) -> int:
    alg = _need_algebra(problem)
    stalks = _need(problem, "stalks", "an ideal member (stalk list)")
    ideal = PointwiseIdeal(alg.lattice, alg.space, _block_stalks(problem, stalks))
    n = lie_normalizer(alg, ideal)
    print(f"dim N(J) = {n.dim}")
    check = normalizer_decomposition_check(alg, ideal)
    print(f"{check.status} normalizer-decomposition ({check.detail})")
    return 1 if check.status == "FAIL" else 0


def cmd_sandwich(problem: Problem, args) -> int:
    alg = _need_algebra(problem)
    rows = _need(problem, "subspace_rows", "a subspace member")
    try:
        sub = rref(rows, alg.dim)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    candidate = LieCandidate(alg, sub)
    lie = is_lie_ideal(candidate)
    witness = sandwich_witness(candidate)
    print(f"lie-ideal: {'true' if lie else 'false'}")
    if witness is None:
        print("witness: none")
    else:
        print(f"witness: ({','.join(str(s + 1) for s in witness.stalks)})")
    consistent = lie == (witness is not None)
    print(f"{'PASS' if consistent else 'FAIL'} sandwich-consistency")
    return 0 if consistent else 1


def cmd_cqp(problem: Problem, args) -> int:
    alg = _need_algebra(problem)
    ok, lines = check_cqp(alg)
    for line in lines:
        print(line)
    print(f"cqp: {'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_weak_central(problem: Problem, args) -> int:
    alg = _need_algebra(problem)
    ok = weak_centrality(alg)
    print(f"weakly-central: {'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_fixtures(problem: Problem, args) -> int:
    for name in sorted(fixtures_mod.bundled_fixture_names()):
        print(name)
    return 0


def _verify_all_lines(problem: Problem, args) -> list:
    lat = _need(problem, "lattice", "a lattice")
    points = _need(problem, "points", "a points member")
    bound = args.bound if args.bound is not None else DEFAULT_FAMILY_BOUND
    space = SpaceModel(points)
    lines = []

    def record(name, ok):
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}")

    record("lattice-laws", validate_lattice(lat) is None)

    if lat.size * points <= bound:
        families = enumerate_compatible_families(lat, space, bound=bound)
        fin_ok = all(all(g for _, g in verify_theorem(f)) for f in families)
        record(f"fin-sum ({len(families)} families)", fin_ok)
    else:
        lines.append("SKIP fin-sum (enumeration bound)")

    if lat.size * points <= min(bound, 12):
        agree = True
        full = space.full_mask
        n = lat.size
        import itertools as _it

        for assignment in _it.product(range(full + 1), repeat=n):
            if _pairwise_compatible(lat, assignment) != _exhaustive_compatible(lat, assignment):
                agree = False
                break
        record("compat-oracle-agreement", agree)
    else:
        lines.append("SKIP compat-oracle-agreement (enumeration bound)")

    if problem.family is not None:
        compatible = is_compatible(problem.family)
        record("family-compatible", compatible)
        if compatible:
            record("theta-recover-roundtrip", recover_S(theta(problem.family)) == problem.family)

    if problem.spec is not None:
        alg = function_algebra(problem.spec, points)
        families = enumerate_compatible_families(alg.lattice, space, bound=max(bound, alg.lattice.size * points))
        ideals = enumerate_all_ideals(alg)
        bij = len(families) == len(ideals) and all(
            recover_S(theta(f)) == f for f in families
        )
        record(f"bijection-count ({len(families)} = {len(ideals)})", bij)

        sweep_ok = True
        for y_mask in range(space.full_mask + 1):
            for t in range(alg.lattice.size):
                if not ideal_from_Y_and_I(alg, y_mask, t).sum_matches:
                    sweep_ok = False
        record("ideal-from-y-sweep", sweep_ok)

        if alg.spec.num_blocks == 1:
            norm_ok = all(
                normalizer_decomposition_check(alg, ideal).status == "PASS"
                for ideal in ideals
            )
            record("normalizer-decomposition", norm_ok)
        else:
            lines.append("SKIP normalizer-decomposition (needs a single block)")

        sandwich_ok, sandwich_lines = sandwich_random_suite(
            alg, args.seed, per_ideal=20, free_count=20
        )
        lines.extend(sandwich_lines)

        cqp_ok, _ = check_cqp(alg)
        record("cqp", cqp_ok)
        record("weak-central", weak_centrality(alg))
        transfer_ok, transfer_lines = cqp_transfer_check(problem.spec, space)
        lines.extend(transfer_lines)

    return lines


def cmd_verify_all(problem: Problem, args) -> int:
    lines = _verify_all_lines(problem, args)
    ok = not any(line.startswith("FAIL") for line in lines)
    for line in lines:
        print(line)
    print(f"verify-all: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


_COMMANDS = {
    "validate": cmd_validate,
    "compat": cmd_compat,
    "gamma": cmd_gamma,
    "theta": cmd_theta,
    "recover": cmd_recover,
    "decompose": cmd_decompose,
    "verify-fin-sum": cmd_verify_fin_sum,
    "ideal-from-y": cmd_ideal_from_y,
    "normalizer": cmd_normalizer,
    "sandwich": cmd_sandwich,
    "cqp": cmd_cqp,
    "weak-central": cmd_weak_central,
    "verify-all": cmd_verify_all,
    "fixtures": cmd_fixtures,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fnideals",
        description="Exhaustive finite-model checks for ideal and Lie-ideal lattices "
        "of algebra-valued function algebras.",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("problem", nargs="?", help="JSON problem file")
    parser.add_argument("--fixture", help="bundled fixture name (see the fixtures command)")
    parser.add_argument("--oracle", action="store_true", help="exhaustive compatibility mode")
    parser.add_argument("--minimal", action="store_true", help="drop zero decomposition terms")
    parser.add_argument("--seed", type=int, default=0, help="seed for random-subspace suites")
    parser.add_argument("--bound", type=int, default=None, help="family enumeration bound")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        problem = _resolve_problem(args)
        return _COMMANDS[args.command](problem, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
