"""Verification experiments: structure census, lattice-point scans of the
constraint systems, relaxation comparisons, and the bundled reference checks
for the three-variable case.

Every experiment returns a VerificationReport whose canonical JSON form is
byte-identical across runs with equal parameters and seed (timing is kept on
the object but left out of the serialization).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .constraint import (
    ConstraintSystem,
    LinearConstraint,
    assemble_system,
    cluster_constraint_c,
    cluster_constraint_u,
    cluster_supermodular,
    char_specific_constraint,
    eta_system,
    is_supermodular,
    kappa_coefficients,
    nonspecific_constraints,
    specific_constraint,
    supermodular_rays,
    u_equality_system,
)
from .digraph import (
    DirectedGraph,
    enumerate_dags,
    enumerate_digraphs,
    is_acyclic,
)
from .encode import (
    eta_of,
    quasi_characteristic_of,
    standard_imset_of,
    superset_moebius,
    u_from_eta,
)
from .setfam import (
    Antichain,
    GroundSet,
    bits_of,
    enumerate_antichains,
    eta_pairs,
    p2_masks,
)

SCAN_BUDGET = 10**8
PAYLOAD_LIST_CAP = 512


@dataclass
class VerificationReport:
    """Outcome record of one experiment.

    payload holds bulky result data (point lists and similar); lists longer
    than PAYLOAD_LIST_CAP are elided from the JSON form, with their count
    kept, so reports stay small and deterministic.
    """

    experiment: str
    parameters: dict
    counts: dict
    witnesses: list
    passed: bool
    wall_time_s: float = 0.0
    payload: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        payload = {}
        for key in sorted(self.payload):
            value = self.payload[key]
            if isinstance(value, list) and len(value) > PAYLOAD_LIST_CAP:
                payload[key] = {"count": len(value), "omitted": True}
            else:
                payload[key] = value
        return {
            "experiment": self.experiment,
            "parameters": self.parameters,
            "counts": self.counts,
            "witnesses": self.witnesses,
            "passed": self.passed,
            "payload": payload,
        }

    def to_json(self) -> str:
        return (
            json.dumps(
                self.to_json_dict(), ensure_ascii=False, sort_keys=True, indent=1
            )
            + "\n"
        )


@dataclass(frozen=True)
class EnumerationBox:
    """Componentwise integer bounds for characteristic coordinates, aligned
    with the ascending list of subsets having >= 2 members."""

    ground: GroundSet
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        masks = p2_masks(self.ground)
        lower = tuple(int(x) for x in self.lower)
        upper = tuple(int(x) for x in self.upper)
        if len(lower) != len(masks) or len(upper) != len(masks):
            raise ValueError(f"box needs {len(masks)} bound pairs")
        if any(lo > hi for lo, hi in zip(lower, upper)):
            raise ValueError("box has an empty coordinate range")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def default(cls, ground: GroundSet) -> "EnumerationBox":
        """Implied bounds 0 <= c(S) <= 2^(|S|-2)."""
        masks = p2_masks(ground)
        return cls(
            ground,
            tuple(0 for _ in masks),
            tuple(2 ** (m.bit_count() - 2) for m in masks),
        )

    @classmethod
    def zero_one(cls, ground: GroundSet) -> "EnumerationBox":
        masks = p2_masks(ground)
        return cls(ground, tuple(0 for _ in masks), tuple(1 for _ in masks))

    def volume(self) -> int:
        v = 1
        for lo, hi in zip(self.lower, self.upper):
            v *= hi - lo + 1
        return v

    def points(self):
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]
        return product(*ranges)

    def to_param_dict(self) -> dict:
        keys = [self.ground.subset_key(m) for m in p2_masks(self.ground)]
        return {
            k: [lo, hi] for k, lo, hi in zip(keys, self.lower, self.upper)
        }


# ---------------------------------------------------------------------------
# census


@lru_cache(maxsize=None)
def _census_data(ground: GroundSet) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """DAG count and the sorted, deduplicated characteristic tuples."""
    masks = p2_masks(ground)
    probes = [tuple((i, s & ~(1 << i)) for i in bits_of(s)) for s in masks]
    seen: set[tuple[int, ...]] = set()
    count = 0
    for g in enumerate_dags(ground):
        pars = g.parents
        vals = []
        for probe in probes:
            c = 0
            for i, rest in probe:
                if rest & ~pars[i] == 0:
                    c += 1
            vals.append(c)
        seen.add(tuple(vals))
        count += 1
    return count, tuple(sorted(seen))


def census_characteristic_set(ground: GroundSet) -> frozenset[tuple[int, ...]]:
    """All distinct characteristic tuples of acyclic digraphs (coordinates in
    ascending order of subsets with >= 2 members)."""
    return frozenset(_census_data(ground)[1])


def census_equivalence_classes(ground: GroundSet) -> VerificationReport:
    """Count acyclic digraphs and their equivalence classes (distinct
    characteristic imsets)."""
    t0 = time.perf_counter()
    dags, classes = _census_data(ground)
    report = VerificationReport(
        experiment="census",
        parameters={"n": ground.n, "labels": list(ground.labels)},
        counts={"dags": dags, "classes": len(classes)},
        witnesses=[],
        passed=True,
        payload={
            "coordinates": [ground.subset_key(m) for m in p2_masks(ground)],
            "class_points": [list(v) for v in classes],
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# compiled row evaluation


def _as_int(x):
    # integer coefficients keep row evaluation in plain int arithmetic
    return int(x) if isinstance(x, Fraction) and x.denominator == 1 else x


def _compile_u_rows(system: ConstraintSystem):
    rows = []
    for row in system.rows:
        terms = tuple(
            sorted((mask, _as_int(coeff)) for mask, coeff in row.coeffs.items())
        )
        rows.append((terms, row.sense, _as_int(row.rhs), row.tag))
    rows.sort(key=lambda r: len(r[0]))
    return rows


def _compile_c_rows(system: ConstraintSystem):
    ground = system.ground
    index = {m: k for k, m in enumerate(p2_masks(ground))}
    rows = []
    for row in system.rows:
        terms = tuple(
            sorted((index[mask], _as_int(coeff)) for mask, coeff in row.coeffs.items())
        )
        rows.append((terms, row.sense, _as_int(row.rhs), row.tag))
    rows.sort(key=lambda r: len(r[0]))
    return rows


def _row_holds(terms, sense, rhs, vector) -> bool:
    lhs = sum(coeff * vector[k] for k, coeff in terms)
    if sense == ">=":
        return lhs >= rhs
    if sense == "<=":
        return lhs <= rhs
    return lhs == rhs


def _first_violation(compiled, vector):
    for terms, sense, rhs, tag in compiled:
        if not _row_holds(terms, sense, rhs, vector):
            return tag
    return None


def _u_dense_from_c_point(ground: GroundSet, point) -> list[int]:
    p = [0] * (1 << ground.n)
    for mask, v in zip(p2_masks(ground), point):
        p[mask] = 1 - v
    return superset_moebius(p, ground.n)


# ---------------------------------------------------------------------------
# lattice scans


def lattice_scan(
    ground: GroundSet,
    framework: str,
    families,
    box: EnumerationBox,
    rays=None,
    budget: int = SCAN_BUDGET,
    long_run: bool = False,
) -> VerificationReport:
    """Enumerate integer characteristic points of the box and keep those
    satisfying every requested row.

    Points are generated in characteristic coordinates; for the 'u' framework
    each point is pushed through the inverse characteristic transform first
    (which makes it satisfy the standardization equalities by construction).
    The scan passes when the satisfying set equals the census set.
    """
    t0 = time.perf_counter()
    if framework not in ("u", "c"):
        raise ValueError("lattice scans run over the 'u' or 'c' framework")
    volume = box.volume()
    if volume > budget and not long_run:
        raise ValueError(
            f"box holds {volume} points, over the budget of {budget}; "
            "set long_run=True to scan anyway"
        )
    system = assemble_system(ground, framework, families, rays=rays)
    census = census_characteristic_set(ground)
    satisfying: list[tuple[int, ...]] = []
    if framework == "c":
        compiled = _compile_c_rows(system)
        for point in box.points():
            if _first_violation(compiled, point) is None:
                satisfying.append(point)
    else:
        compiled = _compile_u_rows(system)
        for point in box.points():
            u = _u_dense_from_c_point(ground, point)
            if _first_violation(compiled, u) is None:
                satisfying.append(point)
    sat_set = set(satisfying)
    extra = sorted(sat_set - census)
    missing = sorted(census - sat_set)
    witnesses = [
        {"kind": "satisfies_rows_but_not_a_structure", "point": list(p)}
        for p in extra[:16]
    ] + [
        {"kind": "structure_outside_scan_set", "point": list(p)}
        for p in missing[:16]
    ]
    report = VerificationReport(
        experiment="lattice-scan",
        parameters={
            "n": ground.n,
            "labels": list(ground.labels),
            "framework": framework,
            "families": list(families),
            "box": box.to_param_dict(),
            "rays": None if rays is None else len(list(rays)),
        },
        counts={
            "box_points": volume,
            "rows": len(system),
            "satisfying": len(sat_set),
            "census_classes": len(census),
            "intersection": len(sat_set & census),
            "extra": len(extra),
            "missing": len(missing),
        },
        witnesses=witnesses,
        passed=not extra and not missing,
        payload={
            "coordinates": [ground.subset_key(m) for m in p2_masks(ground)],
            "satisfying_points": [list(p) for p in sorted(sat_set)],
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def soundness_check(
    ground: GroundSet,
    specific_sample: int = 250,
    seed: int = 0,
    rays=None,
) -> VerificationReport:
    """Check that every census structure satisfies every generated row.

    Uses all equality and cluster rows; all specific rows for n <= 4 and a
    seeded sample of them for n = 5; nonspecific rows when rays are passed.
    """
    t0 = time.perf_counter()
    rows: list[LinearConstraint] = list(u_equality_system(ground).rows)
    antichains = list(enumerate_antichains(ground))
    sampled = len(antichains) > specific_sample and ground.n >= 5
    if sampled:
        rng = random.Random(seed)
        antichains = rng.sample(antichains, specific_sample)
    for antichain in antichains:
        rows.append(specific_constraint(antichain))
    for c in p2_masks(ground):
        rows.append(cluster_constraint_u(ground, c))
    if rays is not None:
        rows.extend(nonspecific_constraints(ground, rays).rows)
    system = ConstraintSystem(ground, "u", tuple(rows))
    compiled = _compile_u_rows(system)
    witnesses = []
    checked = 0
    for point in sorted(census_characteristic_set(ground)):
        u = _u_dense_from_c_point(ground, point)
        tag = _first_violation(compiled, u)
        checked += 1
        if tag is not None:
            witnesses.append({"kind": "row_violated", "row": tag, "point": list(point)})
            if len(witnesses) >= 16:
                break
    report = VerificationReport(
        experiment="census-soundness",
        parameters={
            "n": ground.n,
            "labels": list(ground.labels),
            "specific_rows": "sampled" if sampled else "all",
            "specific_sample": specific_sample if sampled else len(antichains),
            "seed": seed,
            "rays": None if rays is None else len(list(rays)),
        },
        counts={"structures": checked, "rows": len(system)},
        witnesses=witnesses,
        passed=not witnesses,
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# relaxation comparison


def relaxation_comparison(
    ground: GroundSet, box: EnumerationBox | None = None
) -> VerificationReport:
    """Compare the lattice sets of two relaxations over a box (n <= 4):

    every point satisfying {equality, specific, nonspecific} must satisfy
    {equality, specific, cluster-u}.  Also certifies that every cluster
    function is standardized supermodular, and for n = 3 that the designated
    strictness witness u(T) = (-1)^|T| separates the cluster family from the
    nonspecific one.
    """
    t0 = time.perf_counter()
    if ground.n > 4:
        raise ValueError("relaxation comparison is limited to n <= 4")
    if box is None:
        box = EnumerationBox.default(ground)
    scan_a = lattice_scan(
        ground, "u", ("equality", "specific", "nonspecific"), box
    )
    scan_b = lattice_scan(ground, "u", ("equality", "specific", "cluster-u"), box)
    set_a = {tuple(p) for p in scan_a.payload["satisfying_points"]}
    set_b = {tuple(p) for p in scan_b.payload["satisfying_points"]}
    leaked = sorted(set_a - set_b)
    witnesses = [
        {"kind": "nonspecific_point_outside_cluster_relaxation", "point": list(p)}
        for p in leaked[:16]
    ]
    cluster_ok = True
    for c in p2_masks(ground):
        m = cluster_supermodular(ground, c)
        if not (m.is_standardized() and is_supermodular(m)):
            cluster_ok = False
            witnesses.append(
                {"kind": "cluster_function_not_supermodular", "set": ground.subset_key(c)}
            )
    witness_ok = True
    witness_info = None
    if ground.n == 3:
        alt = [(-1) ** t.bit_count() for t in range(1 << ground.n)]
        cluster_rows = [cluster_constraint_u(ground, c) for c in p2_masks(ground)]
        rays = supermodular_rays(ground, "builtin")
        nonspec = nonspecific_constraints(ground, rays)
        satisfies_cluster = all(row.holds_at(alt) for row in cluster_rows)
        violates_nonspecific = not nonspec.satisfied_by(alt)
        witness_ok = satisfies_cluster and violates_nonspecific
        witness_info = {
            "vector": "u(T) = (-1)^|T|",
            "satisfies_all_cluster_rows": satisfies_cluster,
            "violates_a_nonspecific_row": violates_nonspecific,
        }
        if not witness_ok:
            witnesses.append({"kind": "strictness_witness_failed", **witness_info})
    passed = not leaked and cluster_ok and witness_ok
    report = VerificationReport(
        experiment="relaxation-comparison",
        parameters={
            "n": ground.n,
            "labels": list(ground.labels),
            "box": box.to_param_dict(),
        },
        counts={
            "nonspecific_relaxation_points": len(set_a),
            "cluster_relaxation_points": len(set_b),
            "census_classes": len(census_characteristic_set(ground)),
            "leaked": len(leaked),
        },
        witnesses=witnesses,
        passed=passed,
        payload={} if witness_info is None else {"strictness_witness": witness_info},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# three-variable reference checks

# image types of all digraph codes under the characteristic transform,
# coordinates ordered (ab, ac, bc, abc), first three sorted descending
IMAGE_TYPES_N3 = (
    (0, 0, 0, 0),
    (1, 0, 0, 0),
    (2, 0, 0, 0),
    (2, 1, 0, 0),
    (1, 1, 0, 0),
    (1, 1, 1, 0),
    (1, 1, 0, 1),
    (2, 1, 0, 1),
    (2, 2, 0, 1),
    (1, 1, 1, 1),
    (2, 1, 1, 1),
    (2, 1, 1, 2),
    (2, 2, 1, 2),
    (2, 2, 2, 3),
)

# facet types of the convex hull of the image, one row per type:
# (coefficients on (ab, ac, bc, abc), constant term); rows read
# 0 <= constant + coefficients . c
FACET_TYPES_N3 = (
    ((1, 0, 0, 0), 0),
    ((-1, 0, 0, 0), 2),
    ((-1, -1, -1, 1), 3),
    ((0, 0, 0, 1), 0),
    ((1, 0, 0, -1), 1),
    ((1, 1, 0, -1), 0),
    ((1, 1, 1, -2), 0),
)

# vertex types of the polyhedron carved out by the facet rows
VERTEX_TYPES_N3 = (
    (0, 0, 0, 0),
    (2, 0, 0, 0),
    (2, 1, 0, 0),
    (1, 1, 0, 1),
    (2, 1, 0, 1),
    (2, 2, 0, 1),
    (2, 1, 1, 2),
    (2, 2, 2, 3),
)


def _canonical_image(point: tuple[int, ...]) -> tuple[int, ...]:
    head = tuple(sorted(point[:3], reverse=True))
    return head + (point[3],)


def _expand_facets_n3():
    """All distinct rows obtained by permuting the three pair coordinates of
    each facet type."""
    perms = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    rows = set()
    for coeffs, const in FACET_TYPES_N3:
        for perm in perms:
            permuted = tuple(coeffs[perm.index(k)] for k in range(3)) + (coeffs[3],)
            rows.add((permuted, const))
    return sorted(rows)


def _rank_rational(rows: list[tuple]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col] / pv
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def example5_image_check(ground: GroundSet | None = None) -> VerificationReport:
    """Check the image of all 64 digraph codes under the characteristic
    transform at n = 3 against the reference vertex and facet lists.

    Verifies: the permutation-reduced image equals the 14 reference types;
    every image point satisfies every expanded facet row; each reference
    vertex is an image point whose tight rows have rank 4; and [1,0,0,0] is
    the midpoint of [0,0,0,0] and [2,0,0,0].  The expanded row count is
    recorded in the report.
    """
    t0 = time.perf_counter()
    if ground is None:
        ground = GroundSet.of_size(3)
    if ground.n != 3:
        raise ValueError("this reference check is defined for n = 3")
    images = set()
    for g in enumerate_digraphs(ground):
        images.add(quasi_characteristic_of(g).values)
    reduced = {_canonical_image(p) for p in images}
    witnesses = []
    ok_types = reduced == set(IMAGE_TYPES_N3)
    if not ok_types:
        for p in sorted(reduced - set(IMAGE_TYPES_N3))[:8]:
            witnesses.append({"kind": "unexpected_image_type", "point": list(p)})
        for p in sorted(set(IMAGE_TYPES_N3) - reduced)[:8]:
            witnesses.append({"kind": "missing_image_type", "point": list(p)})
    rows = _expand_facets_n3()
    ok_rows = True
    for point in sorted(images):
        for coeffs, const in rows:
            if const + sum(a * b for a, b in zip(coeffs, point)) < 0:
                ok_rows = False
                witnesses.append(
                    {
                        "kind": "image_point_violates_facet",
                        "point": list(point),
                        "row": list(coeffs) + [const],
                    }
                )
    ok_vertices = True
    for vertex in VERTEX_TYPES_N3:
        if vertex not in images:
            ok_vertices = False
            witnesses.append({"kind": "vertex_not_in_image", "point": list(vertex)})
            continue
        tight = [
            coeffs
            for coeffs, const in rows
            if const + sum(a * b for a, b in zip(coeffs, vertex)) == 0
        ]
        if _rank_rational(tight) != 4:
            ok_vertices = False
            witnesses.append(
                {
                    "kind": "vertex_tight_rank_not_full",
                    "point": list(vertex),
                    "rank": _rank_rational(tight),
                }
            )
    midpoint = tuple(
        Fraction(a + b, 2) for a, b in zip((0, 0, 0, 0), (2, 0, 0, 0))
    )
    ok_midpoint = midpoint == (1, 0, 0, 0) and (1, 0, 0, 0) in images
    if not ok_midpoint:
        witnesses.append({"kind": "midpoint_identity_failed"})
    report = VerificationReport(
        experiment="image-of-digraph-codes",
        parameters={"n": 3, "labels": list(ground.labels)},
        counts={
            "digraphs": 64,
            "distinct_images": len(images),
            "image_types": len(reduced),
            "expanded_rows": len(rows),
            "vertex_types": len(VERTEX_TYPES_N3),
        },
        witnesses=witnesses,
        passed=ok_types and ok_rows and ok_vertices and ok_midpoint,
        payload={
            "image_types": [list(p) for p in sorted(reduced)],
            "expanded_rows": [list(c) + [k] for c, k in rows],
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def example8_fractional_check(ground: GroundSet | None = None) -> VerificationReport:
    """Check the fractional-vertex phenomenon at n = 3.

    The point (1, 1, 1, 3/2) satisfies every kappa-specific and every
    cluster row over characteristic coordinates, violates the translated
    nonspecific row c(abc) <= 1, and is the midpoint of [2,2,2,3] and
    [0,0,0,0]; the integer points of the same system over the default box
    are exactly the 11 census structures.
    """
    t0 = time.perf_counter()
    if ground is None:
        ground = GroundSet.of_size(3)
    if ground.n != 3:
        raise ValueError("this reference check is defined for n = 3")
    full = ground.full_mask
    point = {m: Fraction(1) for m in p2_masks(ground)}
    point[full] = Fraction(3, 2)
    witnesses = []
    rows = [char_specific_constraint(a) for a in enumerate_antichains(ground)]
    rows += [cluster_constraint_c(ground, c) for c in p2_masks(ground)]
    ok_rows = True
    for row in rows:
        if not row.holds_at(point):
            ok_rows = False
            witnesses.append({"kind": "fractional_point_violates_row", "row": row.tag})
    translated = LinearConstraint("c", {full: 1}, "<=", 1, "nonspecific-translated:abc")
    ok_cut = not translated.holds_at(point)
    if not ok_cut:
        witnesses.append({"kind": "translated_row_fails_to_cut"})
    segment = tuple(
        Fraction(1, 2) * a + Fraction(1, 2) * b
        for a, b in zip((2, 2, 2, 3), (0, 0, 0, 0))
    )
    target = tuple(point[m] for m in p2_masks(ground))
    ok_segment = segment == target
    if not ok_segment:
        witnesses.append({"kind": "segment_identity_failed"})
    scan = lattice_scan(
        ground,
        "c",
        ("kappa-specific", "cluster-c"),
        EnumerationBox.default(ground),
    )
    ok_scan = scan.passed and scan.counts["satisfying"] == 11
    if not ok_scan:
        witnesses.append({"kind": "integer_scan_mismatch", "counts": scan.counts})
    report = VerificationReport(
        experiment="fractional-vertex-check",
        parameters={"n": 3, "labels": list(ground.labels)},
        counts={
            "rows": len(rows),
            "integer_points": scan.counts["satisfying"],
            "census_classes": scan.counts["census_classes"],
        },
        witnesses=witnesses,
        passed=ok_rows and ok_cut and ok_segment and ok_scan,
        payload={"fractional_point": [str(point[m]) for m in p2_masks(ground)]},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# bundled reference examples 1..8


def _example_graph(ground: GroundSet) -> DirectedGraph:
    # two-cycle between a and b, plus an arrow from c into b
    return DirectedGraph.from_edges(ground, [("a", "b"), ("b", "a"), ("c", "b")])


def _report(name: str, params: dict, checks: dict, payload: dict | None = None):
    witnesses = [{"kind": "check_failed", "check": k} for k, v in checks.items() if not v]
    return VerificationReport(
        experiment=name,
        parameters=params,
        counts={"checks": len(checks)},
        witnesses=witnesses,
        passed=not witnesses,
        payload=payload or {},
    )


def run_example(example_id: int) -> VerificationReport:
    """Run one of the bundled three-variable reference checks (1..8)."""
    ground = GroundSet.of_size(3)
    t0 = time.perf_counter()
    if example_id == 1:
        g = _example_graph(ground)
        eta = eta_of(g)
        expected = {("a", "b"), ("b", "a,c"), ("c", "∅")}
        ones = {
            tuple(ground.pair_key(i, b).split("|"))
            for (i, b), v in zip(eta_pairs(ground), eta.values)
            if v == 1
        }
        checks = {
            "graph_is_cyclic": not is_acyclic(g),
            "eta_has_exactly_three_ones": sum(eta.values) == 3
            and set(eta.values) <= {0, 1},
            "eta_support_matches": ones == expected,
        }
        report = _report(
            "example-1",
            {"n": 3, "graph": g.to_json_dict()},
            checks,
            {"eta": eta.to_json_dict()},
        )
    elif example_id == 2:
        system = eta_system(ground)
        by_family = {"nonneg": 0, "equality": 0, "cluster": 0}
        for row in system:
            by_family[row.tag.split(":")[0]] += 1
        pair_ab = next(r for r in system if r.tag == "cluster:ab")
        pair_abc = next(r for r in system if r.tag == "cluster:abc")
        a, b, c = 0, 1, 2
        expected_ab = {(a, 0): 1, (a, 1 << c): 1, (b, 0): 1, (b, 1 << c): 1}
        expected_abc = {(a, 0): 1, (b, 0): 1, (c, 0): 1}
        agree = True
        for g in enumerate_digraphs(ground):
            eta = eta_of(g)
            values = dict(zip(eta_pairs(ground), eta.values))
            if system.satisfied_by(values) != is_acyclic(g):
                agree = False
                break
        checks = {
            "twelve_nonneg_rows": by_family["nonneg"] == 12,
            "three_equality_rows": by_family["equality"] == 3,
            "four_cluster_rows": by_family["cluster"] == 4,
            "cluster_ab_row_matches": dict(pair_ab.coeffs) == expected_ab
            and pair_ab.sense == ">="
            and pair_ab.rhs == 1,
            "cluster_abc_row_matches": dict(pair_abc.coeffs) == expected_abc,
            "system_characterizes_acyclicity_on_codes": agree,
        }
        report = _report("example-2", {"n": 3}, checks)
    elif example_id == 3:
        equalities = u_equality_system(ground)
        antichains = list(enumerate_antichains(ground))
        pairs_antichain = Antichain(ground, (3, 5, 6))
        row = specific_constraint(pairs_antichain)
        rays = supermodular_rays(ground, "builtin")
        nonspec = nonspecific_constraints(ground, rays)
        has_abc_row = any(
            dict(r.coeffs) == {7: 1} and r.sense == ">=" and r.rhs == 0
            for r in nonspec
        )
        all_structures_ok = True
        for g in enumerate_dags(ground):
            u = standard_imset_of(g).values
            if not all(specific_constraint(a).holds_at(u) for a in antichains):
                all_structures_ok = False
                break
            if not nonspec.satisfied_by(u):
                all_structures_ok = False
                break
        checks = {
            "four_equality_rows": len(equalities) == 4,
            "eighteen_specific_classes": len(antichains) == 18,
            "pairs_row_matches": dict(row.coeffs) == {3: 1, 5: 1, 6: 1, 7: 1}
            and row.sense == "<="
            and row.rhs == 1,
            "five_nonspecific_rows": len(nonspec) == 5,
            "abc_nonneg_row_present": has_abc_row,
            "all_structures_satisfy_inequalities": all_structures_ok,
        }
        report = _report("example-3", {"n": 3}, checks)
    elif example_id == 4:
        g = _example_graph(ground)
        c = quasi_characteristic_of(g)
        in_unit_range = all(0 <= v <= 1 for v in c.values)
        acyclic_unit = True
        for dag in enumerate_dags(ground):
            if not all(0 <= v <= 1 for v in quasi_characteristic_of(dag).values):
                acyclic_unit = False
                break
        checks = {
            "values_match": c.values == (2, 0, 1, 1),
            "cyclic_code_leaves_unit_range": not in_unit_range,
            "acyclic_codes_stay_in_unit_range": acyclic_unit,
        }
        report = _report(
            "example-4",
            {"n": 3, "graph": g.to_json_dict()},
            checks,
            {"characteristic": c.to_json_dict()},
        )
    elif example_id == 5:
        report = example5_image_check(ground)
    elif example_id == 6:
        cases = _KAPPA_CASES_N3
        checks = {}
        tables = {}
        for name, sets, expected_kappa, expected_row in cases:
            antichain = Antichain(ground, sets)
            kappa = kappa_coefficients(antichain)
            got = {ground.tag_key(m): v for m, v in kappa.entries}
            tables[name] = got
            row = char_specific_constraint(antichain)
            got_row = (
                {ground.tag_key(m): int(v) for m, v in row.coeffs.items()},
                str(row.rhs),
                row.is_vacuous,
            )
            checks[f"kappa_table_{name}"] = got == expected_kappa
            checks[f"row_{name}"] = got_row == expected_row
        report = _report("example-6", {"n": 3}, checks, {"kappa_tables": tables})
    elif example_id == 7:
        row_ab = cluster_constraint_u(ground, 3)
        row_abc = cluster_constraint_u(ground, 7)
        alt = [(-1) ** t.bit_count() for t in range(8)]
        rays = supermodular_rays(ground, "builtin")
        nonspec = nonspecific_constraints(ground, rays)
        cluster_rows = [cluster_constraint_u(ground, c) for c in p2_masks(ground)]
        checks = {
            "row_ab_matches": dict(row_ab.coeffs) == {3: 1, 7: 1}
            and row_ab.sense == ">="
            and row_ab.rhs == 0,
            "row_abc_matches": dict(row_abc.coeffs) == {3: 1, 5: 1, 6: 1, 7: 2},
            "witness_satisfies_cluster_rows": all(
                r.holds_at(alt) for r in cluster_rows
            ),
            "witness_violates_nonspecific_row": not nonspec.satisfied_by(alt),
            "witness_is_standardized": sum(alt) == 0
            and all(
                sum(v for t, v in enumerate(alt) if (t >> j) & 1) == 0
                for j in range(3)
            ),
        }
        report = _report("example-7", {"n": 3}, checks)
    elif example_id == 8:
        report = example8_fractional_check(ground)
    else:
        raise ValueError("example id must lie in 1..8")
    report.wall_time_s = time.perf_counter() - t0
    return report


# kappa tables for the eight reference antichain types at n = 3:
# (name, member masks, expected kappa table, (row coeffs, rhs, vacuous))
_KAPPA_CASES_N3 = (
    ("abc", (7,), {"abc": 1}, ({"abc": 1}, "0", False)),
    ("ab", (3,), {"ab": 1}, ({"ab": 1}, "0", False)),
    (
        "ab_ac",
        (3, 5),
        {"ab": 1, "ac": 1, "abc": -1},
        ({"ab": 1, "ac": 1, "abc": -1}, "0", False),
    ),
    (
        "ab_ac_bc",
        (3, 5, 6),
        {"ab": 1, "ac": 1, "bc": 1, "abc": -2},
        ({"ab": 1, "ac": 1, "bc": 1, "abc": -2}, "0", False),
    ),
    ("c", (4,), {"c": 1}, ({}, "-1", True)),
    (
        "c_ab",
        (4, 3),
        {"c": 1, "ab": 1, "abc": -1},
        ({"ab": 1, "abc": -1}, "-1", False),
    ),
    ("a_b", (1, 2), {"a": 1, "b": 1, "ab": -1}, ({"ab": -1}, "-2", False)),
    (
        "a_b_c",
        (1, 2, 4),
        {"a": 1, "b": 1, "c": 1, "ab": -1, "ac": -1, "bc": -1, "abc": 1},
        ({"ab": -1, "ac": -1, "bc": -1, "abc": 1}, "-3", False),
    ),
)
