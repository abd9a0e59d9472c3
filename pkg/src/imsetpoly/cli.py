"""Command-line entry point.

Subcommands cover the experiment drivers (census, scan, compare-relaxations,
example), the encoders (encode, transform), the constraint and matrix
catalogs (constraints, matrix, rays), and the dual-cone decomposition
(decompose).

Exit codes: 0 when the command succeeded and any verification passed, 1 when
a verification or certified check failed (the report carries a witness), 2 on
usage or input errors.  Reports go to stdout (or --out); timing goes to
stderr so stdout stays byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .constraint import (
    C_FAMILIES,
    ETA_FAMILIES,
    U_FAMILIES,
    DualVector,
    assemble_system,
    check_dual_cone,
    conic_decompose,
    load_ray_file,
    save_ray_file,
    supermodular_rays,
    y_of_class,
)
from .digraph import DirectedGraph, is_acyclic
from .encode import (
    char_from_eta,
    characteristic_of,
    eta_of,
    imset_from_json_dict,
    quasi_characteristic_of,
    standard_imset_of,
    u_from_characteristic,
    u_from_eta,
)
from .exactlin import (
    build_matrix_A,
    build_matrix_B,
    build_matrix_B_bar,
    build_matrix_C,
    build_matrix_D,
    build_matrix_E,
    build_matrix_F,
    hermite_normal_form,
    is_totally_unimodular_small,
    is_unimodular_full_row_rank,
)
from .setfam import GroundSet
from .verify import (
    EnumerationBox,
    census_equivalence_classes,
    lattice_scan,
    relaxation_comparison,
    run_example,
)

MATRIX_BUILDERS = {
    "A": build_matrix_A,
    "B": build_matrix_B,
    "C": build_matrix_C,
    "D": build_matrix_D,
    "Bbar": build_matrix_B_bar,
    "E": build_matrix_E,
    "F": build_matrix_F,
}

DEFAULT_FAMILIES = {"eta": ETA_FAMILIES, "u": U_FAMILIES, "c": C_FAMILIES}

KIND_ALIASES = {
    "eta": "eta",
    "u": "standard",
    "standard": "standard",
    "c": "characteristic",
    "characteristic": "characteristic",
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=1) + "\n", out)


def _report_exit(report, out: str | None) -> int:
    _emit(report.to_json(), out)
    return 0 if report.passed else 1


def _ground(args) -> GroundSet:
    return GroundSet.of_size(args.n)


def _box(args, ground: GroundSet) -> EnumerationBox:
    if args.box == "01":
        return EnumerationBox.zero_one(ground)
    return EnumerationBox.default(ground)


def _families(args, framework: str):
    if args.families is None:
        return DEFAULT_FAMILIES[framework]
    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    if not families:
        raise ValueError("empty family list")
    return families


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from None


def _cmd_census(args) -> int:
    return _report_exit(census_equivalence_classes(_ground(args)), args.out)


def _cmd_scan(args) -> int:
    ground = _ground(args)
    rays = None
    if args.rays is not None:
        rays = load_ray_file(ground, args.rays)
    report = lattice_scan(
        ground,
        args.framework,
        _families(args, args.framework),
        _box(args, ground),
        rays=rays,
        long_run=args.long_run,
    )
    return _report_exit(report, args.out)


def _cmd_compare(args) -> int:
    ground = _ground(args)
    return _report_exit(relaxation_comparison(ground, _box(args, ground)), args.out)


def _cmd_example(args) -> int:
    return _report_exit(run_example(args.id), args.out)


def _cmd_encode(args) -> int:
    g = DirectedGraph.from_json_dict(_load_json(args.graph))
    if args.as_kind == "eta":
        result = eta_of(g)
    elif args.as_kind == "standard":
        result = standard_imset_of(g)
    else:
        # super-terminal counts; the characteristic imset when g is acyclic
        result = quasi_characteristic_of(g)
    payload = result.to_json_dict()
    payload["acyclic"] = is_acyclic(g)
    _emit_json(payload, args.out)
    return 0


def _cmd_constraints(args) -> int:
    ground = _ground(args)
    rays = None
    if args.rays is not None:
        rays = load_ray_file(ground, args.rays)
    system = assemble_system(
        ground, args.framework, _families(args, args.framework), rays=rays
    )
    if args.format == "lp":
        _emit(system.to_lp(), args.out)
    else:
        _emit_json(system.to_json_dict(), args.out)
    return 0


def _hnf_check(m) -> tuple[bool, dict]:
    h, _ = hermite_normal_form(m)
    rows, cols = m.shape
    pivots = []
    is_identity_block = True
    for j in range(cols):
        col = [h.entries[i][j] for i in range(rows)]
        nonzero = [i for i, x in enumerate(col) if x != 0]
        if j < rows:
            if nonzero != [j] or col[j] != 1:
                is_identity_block = False
            if nonzero:
                pivots.append(col[nonzero[0]])
        elif nonzero:
            is_identity_block = False
    return is_identity_block, {
        "rank": len(pivots),
        "pivots": pivots,
        "identity_then_zero_columns": is_identity_block,
    }


def _products_check(name: str, ground: GroundSet) -> tuple[bool, dict]:
    """The exact identities the named matrix takes part in."""
    results: dict[str, bool] = {}
    if name in ("A", "B", "C"):
        a = build_matrix_A(ground)
        b = build_matrix_B(ground)
        c = build_matrix_C(ground)
        results["B_equals_C_times_A"] = c.mul(a).entries == b.entries
    if name in ("C", "D"):
        c = build_matrix_C(ground)
        d = build_matrix_D(ground)
        results["C_times_D_is_identity"] = (
            c.mul(d).entries == c.identity(c.row_labels).entries
        )
    if name in ("Bbar", "F"):
        bbar = build_matrix_B_bar(ground)
        f = build_matrix_F(ground)
        results["Bbar_times_F_is_identity"] = (
            bbar.mul(f).entries == bbar.identity(bbar.row_labels).entries
        )
    if name == "E":
        e = build_matrix_E(ground, dummy_row=True)
        rows, cols = e.shape
        ok = True
        for j in range(cols):
            col = [e.entries[i][j] for i in range(rows)]
            if sorted(x for x in col if x) != [-1, 1]:
                ok = False
                break
        results["columns_have_one_plus_and_one_minus"] = ok
    if not results:
        raise ValueError(f"no product identity is catalogued for {name}")
    return all(results.values()), results


def _cmd_matrix(args) -> int:
    ground = _ground(args)
    builder = MATRIX_BUILDERS[args.which]
    if args.which == "E":
        m = builder(ground, dummy_row=args.dummy_row)
    else:
        m = builder(ground)
    if args.check is None:
        if args.csv:
            _emit(m.to_csv(), args.out)
        else:
            _emit_json(
                {
                    "name": args.which,
                    "row_labels": list(m.row_labels),
                    "col_labels": list(m.col_labels),
                    "entries": [list(r) for r in m.entries],
                },
                args.out,
            )
        return 0
    if args.check == "hnf":
        passed, detail = _hnf_check(m)
    elif args.check == "unimodular":
        rows, cols = m.shape
        try:
            verdict = is_unimodular_full_row_rank(m, mode="exhaustive")
        except ValueError:
            verdict = is_unimodular_full_row_rank(m, mode="sampled", samples=1000, seed=0)
        passed = verdict.unimodular is not False
        detail = {
            "mode": verdict.mode,
            "unimodular": verdict.unimodular,
            "minors_checked": verdict.minors_checked,
        }
        if verdict.witness_cols is not None:
            detail["witness_cols"] = list(verdict.witness_cols)
            detail["witness_det"] = verdict.witness_det
    elif args.check == "tu":
        verdict = is_totally_unimodular_small(m)
        passed = verdict.totally_unimodular
        detail = {
            "totally_unimodular": verdict.totally_unimodular,
            "minors_checked": verdict.minors_checked,
        }
        if verdict.witness_rows is not None:
            detail["witness_rows"] = list(verdict.witness_rows)
            detail["witness_cols"] = list(verdict.witness_cols)
            detail["witness_det"] = verdict.witness_det
    else:
        passed, detail = _products_check(args.which, ground)
    _emit_json(
        {"name": args.which, "n": ground.n, "check": args.check, "passed": passed,
         "detail": detail},
        args.out,
    )
    return 0 if passed else 1


def _cmd_decompose(args) -> int:
    y = DualVector.from_json_dict(_load_json(args.y))
    if not check_dual_cone(y):
        _emit_json({"in_cone": False, "terms": []}, args.out)
        return 1
    terms = conic_decompose(y)
    reconstructed = [Fraction(0)] * (1 << y.ground.n)
    for antichain, weight in terms:
        for t, v in enumerate(y_of_class(antichain).values):
            reconstructed[t] += weight * v
    exact = tuple(reconstructed) == tuple(y.values)
    _emit_json(
        {
            "in_cone": True,
            "terms": [
                {"class": antichain.tag(), "weight": str(weight)}
                for antichain, weight in terms
            ],
            "reconstruction_exact": exact,
        },
        args.out,
    )
    return 0 if exact else 1


def _cmd_rays(args) -> int:
    ground = _ground(args)
    source = "builtin" if args.method == "builtin" else "computed"
    rays = supermodular_rays(ground, source, long_run=args.long_run)
    if args.out is not None:
        save_ray_file(rays, args.out)
        sys.stdout.write(f"{len(rays)} rays written to {args.out}\n")
    else:
        _emit_json([ray.to_json_dict() for ray in rays], None)
    return 0


def _cmd_transform(args) -> int:
    imset = imset_from_json_dict(_load_json(args.infile))
    src = KIND_ALIASES[args.src] if args.src else None
    dst = KIND_ALIASES[args.to]
    actual = imset.to_json_dict()["kind"]
    if src is not None and src != actual:
        raise ValueError(f"input file holds a {actual!r} vector, not {src!r}")
    if dst == actual:
        result = imset
    elif actual == "eta":
        result = u_from_eta(imset) if dst == "standard" else char_from_eta(imset)
    elif actual == "standard":
        if dst == "eta":
            raise ValueError("a standard imset does not determine an eta vector")
        result = characteristic_of(imset)
    else:
        if dst == "eta":
            raise ValueError("a characteristic imset does not determine an eta vector")
        result = u_from_characteristic(imset)
    _emit_json(result.to_json_dict(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imsetpoly",
        description="Exact-arithmetic encodings, constraint systems, and "
        "verification experiments for graphical-structure vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("--n", type=int, required=True, help="ground-set size")

    def add_out(p):
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("census", help="count acyclic digraphs and their classes")
    add_n(p)
    add_out(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser(
        "scan", help="enumerate box lattice points satisfying chosen row families"
    )
    add_n(p)
    p.add_argument("--framework", choices=("u", "c"), required=True)
    p.add_argument(
        "--families", help="comma-separated family names (default: all for the framework)"
    )
    p.add_argument("--box", choices=("01", "default"), default="default")
    p.add_argument("--rays", help="JSON ray file for the nonspecific family")
    p.add_argument("--long-run", action="store_true", help="lift the point budget")
    add_out(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser(
        "compare-relaxations",
        help="check the lattice containment between the two u-framework relaxations",
    )
    add_n(p)
    p.add_argument("--box", choices=("01", "default"), default="default")
    add_out(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("example", help="run a bundled three-variable reference check")
    p.add_argument("--id", type=int, required=True, choices=range(1, 9), metavar="1..8")
    add_out(p)
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("encode", help="encode a digraph JSON file as a vector")
    p.add_argument("--graph", required=True, help="JSON file with labels and edges")
    p.add_argument(
        "--as",
        dest="as_kind",
        choices=("eta", "standard", "characteristic"),
        required=True,
    )
    add_out(p)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("constraints", help="emit a constraint system as JSON or LP")
    add_n(p)
    p.add_argument("--framework", choices=("eta", "u", "c"), required=True)
    p.add_argument("--families")
    p.add_argument("--format", choices=("json", "lp"), default="json")
    p.add_argument("--rays")
    add_out(p)
    p.set_defaults(func=_cmd_constraints)

    p = sub.add_parser("matrix", help="emit or check a catalog matrix")
    p.add_argument("--which", choices=tuple(MATRIX_BUILDERS), required=True)
    add_n(p)
    p.add_argument("--check", choices=("hnf", "unimodular", "tu", "products"))
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    p.add_argument(
        "--dummy-row",
        action="store_true",
        help="append the empty-set balancing row (matrix E only)",
    )
    add_out(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser(
        "decompose", help="decompose a dual vector over extreme class vectors"
    )
    p.add_argument("--y", required=True, help="JSON file with labels and entries")
    add_out(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("rays", help="list or save extreme supermodular rays")
    add_n(p)
    p.add_argument("--method", choices=("builtin", "dd"), default="builtin")
    p.add_argument("--long-run", action="store_true")
    add_out(p)
    p.set_defaults(func=_cmd_rays)

    p = sub.add_parser("transform", help="convert one vector encoding to another")
    p.add_argument(
        "--from",
        dest="src",
        choices=tuple(KIND_ALIASES),
        help="expected kind of the input (validated against the file)",
    )
    p.add_argument("--to", choices=tuple(KIND_ALIASES), required=True)
    p.add_argument("--in", dest="infile", required=True, help="imset JSON file")
    add_out(p)
    p.set_defaults(func=_cmd_transform)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
