"""Acceptance gate: the ten shipping criteria.

Each criterion is one test; `pytest -v tests/test_acceptance.py` therefore
prints one pass/fail line per criterion, and each test also prints an
explicit `criterion NN ... PASS` line on success (visible with -s).
"""

import random
import time
from fractions import Fraction

from imsetpoly.constraint import (
    DualVector,
    check_dual_cone,
    cluster_constraint_u,
    cluster_supermodular,
    conic_decompose,
    indicator_supermodular,
    is_supermodular,
    kappa_coefficients,
    specific_constraint,
    supermodular_rays,
    u_equality_system,
    y_of_class,
)
from imsetpoly.digraph import enumerate_dags, enumerate_digraphs
from imsetpoly.encode import (
    CharacteristicImset,
    char_from_eta,
    characteristic_of,
    eta_of,
    standard_imset_of,
    u_from_characteristic,
    u_from_eta,
)
from imsetpoly.exactlin import (
    build_b_u,
    build_matrix_A,
    build_matrix_B,
    build_matrix_B_bar,
    build_matrix_C,
    build_matrix_D,
    build_matrix_E,
    build_matrix_F,
    feasible_nonneg_solution,
    hermite_normal_form,
    is_totally_unimodular_small,
    is_unimodular_full_row_rank,
    IntMatrix,
)
from imsetpoly.setfam import (
    Antichain,
    GroundSet,
    enumerate_antichains,
    eta_pairs,
    p1_masks,
    p2_masks,
    superset_closure,
)
from imsetpoly.verify import (
    EnumerationBox,
    census_equivalence_classes,
    example8_fractional_check,
    lattice_scan,
    run_example,
    soundness_check,
)

G3 = GroundSet.of_size(3)
G4 = GroundSet.of_size(4)
G5 = GroundSet.of_size(5)


def done(number, label):
    print(f"criterion {number:02d} ({label}): PASS")


def test_criterion_01_census_counts():
    expected = {3: (25, 11), 4: (543, 185), 5: (29281, 8782)}
    for n, (dags, classes) in expected.items():
        report = census_equivalence_classes(GroundSet.of_size(n))
        assert report.passed
        assert report.counts == {"dags": dags, "classes": classes}
        if n == 5:
            assert report.wall_time_s < 60
    done(1, "census counts 25/11, 543/185, 29281/8782")


def test_criterion_02_zero_one_scan_and_large_ground_soundness():
    families = ("equality", "specific", "nonspecific")
    for ground, classes in ((G3, 11), (G4, 185)):
        report = lattice_scan(ground, "u", families, EnumerationBox.zero_one(ground))
        assert report.passed and report.counts["satisfying"] == classes
        assert report.wall_time_s < 300
    soundness = soundness_check(G5)
    assert soundness.passed
    assert soundness.counts["structures"] == 8782
    assert soundness.wall_time_s < 600
    done(2, "0/1 scans recover 11 and 185; all 8782 structures sound")


def test_criterion_03_default_box_scan_and_fractional_point():
    report = lattice_scan(
        G3, "c", ("kappa-specific", "cluster-c"), EnumerationBox.default(G3)
    )
    assert report.passed and report.counts["satisfying"] == 11
    fractional = example8_fractional_check()
    assert fractional.passed
    assert fractional.counts["integer_points"] == 11
    done(3, "default-box scan yields 11; fractional point certified")


def test_criterion_04_matrix_certificates():
    t0 = time.perf_counter()
    for ground in (G3, G4):
        a = build_matrix_A(ground)
        rows, cols = a.shape
        h, u = hermite_normal_form(a)
        assert abs(u.det()) == 1 and h.entries == a.mul(u).entries
        for i in range(rows):
            for j in range(cols):
                assert h.entries[i][j] == (1 if i == j else 0)
        b = build_matrix_B(ground)
        c = build_matrix_C(ground)
        assert c.mul(a).entries == b.entries
        product = c.mul(build_matrix_D(ground))
        assert product.entries == IntMatrix.identity(product.row_labels).entries
        product = build_matrix_B_bar(ground).mul(build_matrix_F(ground))
        assert product.entries == IntMatrix.identity(product.row_labels).entries
        e = build_matrix_E(ground, dummy_row=True)
        for j in range(e.shape[1]):
            column = [e.entries[i][j] for i in range(e.shape[0])]
            assert sorted(x for x in column if x) == [-1, 1]
    for build in (build_matrix_A, build_matrix_B):
        verdict = is_unimodular_full_row_rank(build(G3))
        assert verdict.unimodular is True and verdict.minors_checked == 792
    a3 = build_matrix_A(G3)
    tu = is_totally_unimodular_small(a3, max_order=4)
    assert not tu.totally_unimodular and abs(tu.witness_det) >= 2
    assert a3.submatrix(tu.witness_rows, tu.witness_cols).det() == tu.witness_det
    assert time.perf_counter() - t0 < 60
    done(4, "normal forms, product identities, minor certificates")


def test_criterion_05_feasibility_matches_specific_rows():
    t0 = time.perf_counter()
    a = build_matrix_A(G3)
    equalities = u_equality_system(G3)
    specific_rows = [specific_constraint(x) for x in enumerate_antichains(G3)]
    assert len(specific_rows) == 18
    feasible_points = 0
    for point in EnumerationBox.default(G3).points():
        u = u_from_characteristic(CharacteristicImset(G3, point))
        lp_feasible = feasible_nonneg_solution(a, build_b_u(u)) is not None
        rows_hold = equalities.satisfied_by(u.values) and all(
            row.holds_at(u.values) for row in specific_rows
        )
        assert lp_feasible == rows_hold, point
        feasible_points += lp_feasible
    assert feasible_points > 0
    assert time.perf_counter() - t0 < 60
    done(5, "exact feasibility coincides with the specific rows on the box")


def test_criterion_06_cluster_identity_triples():
    cases = 0
    for graph in enumerate_digraphs(G3):
        eta = eta_of(graph)
        u = u_from_eta(eta)
        c = char_from_eta(eta)
        for cl in p2_masks(G3):
            eta_side = sum(
                eta.value(i, b)
                for i, b in eta_pairs(G3)
                if (cl >> i) & 1 and b & cl == 0
            )
            u_side = 1 + cluster_constraint_u(G3, cl).value_at(u.values)
            c_side = cl.bit_count() - sum(
                (-1) ** s.bit_count() * c.value(s)
                for s in p2_masks(G3)
                if s & cl == s
            )
            assert eta_side == u_side == c_side
            cases += 1
    assert cases == 256
    done(6, "cluster quantity agrees across all three encodings, 256 cases")


def test_criterion_07_dual_cone_decompositions():
    total = 0
    for ground, trials in ((G3, 500), (G4, 500)):
        antichains = list(enumerate_antichains(ground))
        extremes = {x: y_of_class(x) for x in antichains}
        rng = random.Random(ground.n)
        size = 1 << ground.n
        for _ in range(trials):
            picks = rng.sample(antichains, rng.randint(1, 5))
            weights = [
                Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in picks
            ]
            values = [Fraction(0)] * size
            for antichain, weight in zip(picks, weights):
                for t, v in enumerate(extremes[antichain].values):
                    values[t] += weight * v
            y = DualVector(ground, tuple(values))
            terms = conic_decompose(y)
            support = [t for t in p1_masks(ground) if values[t] != 0]
            closure_size = sum(
                1
                for s in p1_masks(ground)
                if any(t & s == t for t in support)
            )
            assert len(terms) <= closure_size
            rebuilt = [Fraction(0)] * size
            for antichain, weight in terms:
                assert weight > 0
                for t, v in enumerate(y_of_class(antichain).values):
                    rebuilt[t] += weight * v
            assert rebuilt == values
            total += 1
    assert total == 1000
    for antichain in enumerate_antichains(G3):
        assert check_dual_cone(y_of_class(antichain))
    done(7, "1000 seeded conic decompositions exact; 18 extreme vectors valid")


KAPPA_TABLES_N3 = {
    "abc": {"abc": 1},
    "ab": {"ab": 1},
    "ab,ac": {"ab": 1, "ac": 1, "abc": -1},
    "ab,ac,bc": {"ab": 1, "ac": 1, "bc": 1, "abc": -2},
    "c": {"c": 1},
    "c,ab": {"c": 1, "ab": 1, "abc": -1},
    "a,b": {"a": 1, "b": 1, "ab": -1},
    "a,b,c": {"a": 1, "b": 1, "c": 1, "ab": -1, "ac": -1, "bc": -1, "abc": 1},
}


def test_criterion_08_kappa_machinery():
    for ground in (G3, G4):
        for antichain in enumerate_antichains(ground):
            kappa = kappa_coefficients(antichain)
            closure = superset_closure(antichain).members
            total = 0
            for s in range(1 << ground.n):
                direct = sum(
                    (-1) ** (s.bit_count() - t.bit_count())
                    for t in closure
                    if t & s == t
                )
                value = kappa.value(s)
                assert value == direct
                total += value
            assert total == 1
    for tag, table in KAPPA_TABLES_N3.items():
        sets = tuple(G3.parse_subset(",".join(part)) for part in tag.split(","))
        kappa = kappa_coefficients(Antichain(G3, sets))
        assert {G3.tag_key(m): v for m, v in kappa.entries if v} == table, tag
    done(8, "recursive and alternating-sum coefficients agree; tables verbatim")


def test_criterion_09_bundled_reference_checks():
    for example_id in range(1, 9):
        report = run_example(example_id)
        assert report.passed, (example_id, report.witnesses)
    done(9, "reference checks 1..8 pass")


def test_criterion_10_property_suites():
    t0 = time.perf_counter()
    # encoding round trips and triangle commutativity
    for ground in (G3, G4):
        for graph in enumerate_dags(ground):
            u = standard_imset_of(graph)
            c = characteristic_of(u)
            assert u_from_characteristic(c).values == u.values
    for graph in enumerate_digraphs(G3):
        eta = eta_of(graph)
        assert characteristic_of(u_from_eta(eta)).values == char_from_eta(eta).values
    # supermodularity of the constraint-generating functions
    for n in (3, 4, 5):
        ground = GroundSet.of_size(n)
        for s in p2_masks(ground):
            for m in (cluster_supermodular(ground, s), indicator_supermodular(ground, s)):
                assert m.is_standardized() and is_supermodular(m)
    # ray validity
    for ground, source, count in ((G3, "builtin", 5), (G4, "computed", 37)):
        rays = supermodular_rays(ground, source)
        assert len(rays) == count
        for ray in rays:
            assert ray.is_standardized() and is_supermodular(ray)
    # report determinism
    assert (
        census_equivalence_classes(G4).to_json()
        == census_equivalence_classes(G4).to_json()
    )
    box = EnumerationBox.zero_one(G3)
    families = ("equality", "specific", "nonspecific")
    assert (
        lattice_scan(G3, "u", families, box).to_json()
        == lattice_scan(G3, "u", families, box).to_json()
    )
    assert soundness_check(G3).to_json() == soundness_check(G3).to_json()
    assert time.perf_counter() - t0 < 600
    done(10, "round trips, commutativity, supermodularity, determinism")
