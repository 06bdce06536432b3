"""Command-line front end.

Commands: table, invariants, verify, catalog.  Group specs:
  name:<catalog-name>
  perm:<degree>:<cycles;...>
  mat:p=<p>,d=<d>:<matrix;...>      (each matrix: d*d comma-separated ints)
  affine:<mat-spec>

Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
3 resource cap exceeded.  CODEGREES_CONFIG may point at a JSON file with
defaults for order_cap, degree_cap, seed, and format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .chartab import character_table
from .constructions import (AFFINE_SPECS, LINEAR_SPECS, MatrixGroupSpec,
                            affine, build, catalog, matrix_to_perm)
from .group import DEFAULT_DEGREE_CAP, DEFAULT_ORDER_CAP, CapExceededError, PermGroup
from .invariants import (NotSolvableError, codegree_set, fitting_height,
                         normal_subgroups)
from .perm import parse_cycles, print_cycles
from .verify import (CHECK_IDS, GROUP_CHECKS, SPEC_CHECKS, UnknownCheckError,
                     VerificationReport, _skip, check_lemma_3_1,
                     check_lemma_3_3, report_half_transitive, run_catalog,
                     run_checks)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class SpecError(ValueError):
    pass


@dataclass
class RunConfig:
    order_cap: int = DEFAULT_ORDER_CAP
    degree_cap: int = DEFAULT_DEGREE_CAP
    seed: int = 42
    format: str = "text"

    def __post_init__(self):
        if self.order_cap <= 0 or self.degree_cap <= 0:
            raise SpecError("caps must be positive")
        if self.format not in ("text", "json", "csv"):
            raise SpecError(f"unknown format {self.format!r}")


@dataclass
class ParsedSpec:
    name: str
    group: PermGroup
    matrix_spec: MatrixGroupSpec | None = None   # for halftrans/lem3.3
    affine_spec: MatrixGroupSpec | None = None   # for lem3.1


def _parse_matrix_spec(body: str) -> MatrixGroupSpec:
    """Parse `p=<p>,d=<d>:<matrix;...>`."""
    head, sep, rest = body.partition(":")
    if not sep:
        raise SpecError("mat spec needs `p=..,d=..:<matrices>`")
    params = {}
    for piece in head.split(","):
        key, eq, value = piece.partition("=")
        if not eq or key.strip() not in ("p", "d"):
            raise SpecError(f"bad mat parameter {piece!r}")
        params[key.strip()] = int(value)
    if set(params) != {"p", "d"}:
        raise SpecError("mat spec needs both p= and d=")
    p, d = params["p"], params["d"]
    matrices = []
    for chunk in rest.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        entries = [int(x) % p for x in chunk.split(",")]
        if len(entries) != d * d:
            raise SpecError(
                f"matrix needs {d * d} entries, got {len(entries)}: {chunk!r}")
        matrices.append(tuple(tuple(entries[i * d:(i + 1) * d])
                              for i in range(d)))
    return MatrixGroupSpec(p, d, tuple(matrices))


def parse_spec(text: str, config: RunConfig) -> ParsedSpec:
    kind, sep, body = text.partition(":")
    if not sep:
        raise SpecError(f"group spec {text!r} has no kind prefix")
    if kind == "name":
        G = build(body)
        mat = LINEAR_SPECS[body]() if body in LINEAR_SPECS else None
        aff = AFFINE_SPECS[body]() if body in AFFINE_SPECS else None
        return ParsedSpec(text, G, mat, aff)
    if kind == "perm":
        degree_text, sep2, cycles = body.partition(":")
        if not sep2:
            raise SpecError("perm spec needs `perm:<degree>:<cycles;...>`")
        try:
            degree = int(degree_text)
        except ValueError:
            raise SpecError(f"bad degree {degree_text!r}") from None
        if degree < 1 or degree > config.degree_cap:
            raise SpecError(f"degree {degree} out of range")
        gens = [parse_cycles(c, degree)
                for c in cycles.split(";") if c.strip()]
        return ParsedSpec(text, PermGroup(degree, gens))
    if kind == "mat":
        mat = _parse_matrix_spec(body)
        return ParsedSpec(text, matrix_to_perm(mat, config.degree_cap), mat)
    if kind == "affine":
        inner_kind, sep2, inner = body.partition(":")
        if inner_kind != "mat" or not sep2:
            raise SpecError("affine spec needs `affine:mat:...`")
        mat = _parse_matrix_spec(inner)
        aff = affine(mat, config.degree_cap)
        return ParsedSpec(text, aff.group, None, mat)
    raise SpecError(f"unknown spec kind {kind!r}")


def _check_order_cap(G: PermGroup, config: RunConfig):
    if G.order > config.order_cap:
        raise CapExceededError(
            f"group order {G.order} exceeds cap {config.order_cap}")


# ---------------------------------------------------------------------------
# table command


def _table_payload(spec: ParsedSpec, config: RunConfig) -> dict:
    T = character_table(spec.group, seed=config.seed)
    cc = T.classes
    return {
        "group": spec.name,
        "order": spec.group.order,
        "class_sizes": list(cc.sizes),
        "class_reps": [print_cycles(r) for r in cc.reps],
        "power_maps": {str(m): list(row)
                       for m, row in enumerate(cc.power_maps)},
        "degrees": list(T.degrees),
        "characters": [[v.e_string() for v in chi.values]
                       for chi in T.chars],
    }


def cmd_table(spec_text: str, config: RunConfig) -> int:
    spec = parse_spec(spec_text, config)
    _check_order_cap(spec.group, config)
    payload = _table_payload(spec, config)
    if config.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif config.format == "csv":
        print("class," + ",".join(payload["class_reps"]))
        print("size," + ",".join(str(s) for s in payload["class_sizes"]))
        for i, row in enumerate(payload["characters"]):
            print(f"X{i}," + ",".join(f'"{v}"' for v in row))
    else:
        print(f"Character table of {spec.name} (order {payload['order']})")
        width = max(len(v) for row in payload["characters"] for v in row)
        width = max(width, max(len(r) for r in payload["class_reps"]))
        header = " " * 4 + " ".join(r.rjust(width)
                                    for r in payload["class_reps"])
        print(header)
        print(" " * 4 + " ".join(str(s).rjust(width)
                                 for s in payload["class_sizes"]))
        for i, row in enumerate(payload["characters"]):
            print(f"X{i:<3}" + " ".join(v.rjust(width) for v in row))
    return EXIT_OK


# ---------------------------------------------------------------------------
# invariants command


def _invariants_payload(spec: ParsedSpec, config: RunConfig) -> dict:
    G = spec.group
    cs = codegree_set(G, seed=config.seed)
    lattice = normal_subgroups(G, seed=config.seed)
    payload = {
        "group": spec.name,
        "order": G.order,
        "codegrees": list(cs.values),
        "per_char": [{"degree": character_table(G, seed=config.seed)
                      .chars[i].degree,
                      "kernel_order": ker.order, "codegree": cod}
                     for i, ker, cod in cs.per_char],
        "normal_subgroup_orders": [n.order for n in lattice],
    }
    try:
        fd = fitting_height(G, seed=config.seed)
        payload["fitting"] = {"height": fd.height,
                              "series_orders": [n.order for n in fd.series]}
    except NotSolvableError:
        payload["fitting"] = {"height": None,
                              "reason": "group is not solvable"}
    return payload


def cmd_invariants(spec_text: str, config: RunConfig) -> int:
    spec = parse_spec(spec_text, config)
    _check_order_cap(spec.group, config)
    payload = _invariants_payload(spec, config)
    if config.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif config.format == "csv":
        print("key,value")
        print(f"group,{payload['group']}")
        print(f"order,{payload['order']}")
        print("codegrees," + " ".join(str(c) for c in payload["codegrees"]))
        print(f"fitting_height,{payload['fitting']['height']}")
    else:
        print(f"group: {payload['group']}  order: {payload['order']}")
        print(f"codegrees: {payload['codegrees']}")
        print(f"normal subgroup orders: {payload['normal_subgroup_orders']}")
        fit = payload["fitting"]
        if fit["height"] is None:
            print("fitting height: undefined (not solvable)")
        else:
            print(f"fitting height: {fit['height']}  "
                  f"series orders: {fit['series_orders']}")
        for pc in payload["per_char"]:
            print(f"  degree {pc['degree']:>4}  kernel {pc['kernel_order']:>6}"
                  f"  codegree {pc['codegree']:>6}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify command


def _emit_reports(reports: list[VerificationReport], config: RunConfig):
    if config.format == "json":
        print(json.dumps([r.to_dict() for r in reports],
                         sort_keys=True, indent=2))
    elif config.format == "csv":
        print("group,check,status,lhs,rhs,seed,millis")
        for r in reports:
            print(f'"{r.group}",{r.check},{r.status},"{r.lhs}","{r.rhs}",'
                  f"{r.seed},{r.millis}")
    else:
        for r in reports:
            print(f"{r.group:24s} {r.check:10s} {r.status:8s} "
                  f"lhs={r.lhs} rhs={r.rhs}")
        n_fail = sum(1 for r in reports if r.status == "fail")
        n_skip = sum(1 for r in reports if r.status == "skipped")
        print(f"{len(reports)} reports: {len(reports) - n_fail - n_skip} "
              f"pass, {n_fail} fail, {n_skip} skipped")


def cmd_verify(args_rest: list[str], catalog_filter: str | None,
               config: RunConfig) -> int:
    checks = [a for a in args_rest if a in CHECK_IDS]
    specs = [a for a in args_rest if a not in CHECK_IDS]
    for s in specs:
        if ":" not in s:
            raise UnknownCheckError(f"unknown check id {s!r}")
    if catalog_filter is not None:
        flt = None if catalog_filter == "all" else catalog_filter
        if flt is not None and flt not in [n for n, _ in catalog()]:
            raise SpecError(f"no catalog group named {flt!r}")
        reports = run_catalog(checks or None, flt, seed=config.seed)
    else:
        if len(specs) != 1:
            raise SpecError("verify needs exactly one group spec "
                            "or --catalog")
        spec = parse_spec(specs[0], config)
        _check_order_cap(spec.group, config)
        ids = checks or (list(GROUP_CHECKS)
                         + (list(SPEC_CHECKS) if spec.matrix_spec else []))
        reports = []
        for check in ids:
            if check == "lem3.1" and spec.affine_spec is not None:
                reports.append(check_lemma_3_1(spec.name, spec.affine_spec,
                                               config.seed))
            elif check == "halftrans" and spec.matrix_spec is not None:
                reports.append(report_half_transitive(
                    spec.name, spec.matrix_spec, config.seed))
            elif check == "lem3.3" and spec.matrix_spec is not None:
                reports.append(check_lemma_3_3(spec.name, spec.matrix_spec,
                                               config.seed))
            elif check in ("halftrans", "lem3.3"):
                reports.append(_skip(spec.name, check,
                                     "no matrix form available",
                                     config.seed))
            else:
                reports.extend(run_checks(spec.name, spec.group, [check],
                                          config.seed))
    _emit_reports(reports, config)
    return EXIT_VERIFY_FAIL if any(r.status == "fail" for r in reports) \
        else EXIT_OK


def cmd_catalog(config: RunConfig) -> int:
    rows = [{"name": name, "order": build(name).order}
            for name, _ in catalog()]
    if config.format == "json":
        print(json.dumps(rows, sort_keys=True, indent=2))
    elif config.format == "csv":
        print("name,order")
        for row in rows:
            print(f'"{row["name"]}",{row["order"]}')
    else:
        for row in rows:
            print(f"{row['name']:26s} {row['order']:>8}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def _load_config_defaults() -> dict:
    path = os.environ.get("CODEGREES_CONFIG")
    if not path or not os.path.exists(path):
        return {}
    with open(path) as fh:
        data = json.load(fh)
    allowed = {"order_cap", "degree_cap", "seed", "format"}
    return {k: v for k, v in data.items() if k in allowed}


def _build_parser() -> argparse.ArgumentParser:
    # the global options are accepted both before and after the
    # subcommand, via a shared parent parser
    # SUPPRESS keeps a flag given before the subcommand from being
    # clobbered by the subparser's default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order-cap", type=int,
                        default=argparse.SUPPRESS)
    common.add_argument("--degree-cap", type=int,
                        default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="codegrees", parents=[common],
        description="Exact character codegrees of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    p_table = sub.add_parser("table", parents=[common],
                             help="print a character table")
    p_table.add_argument("spec")
    p_inv = sub.add_parser("invariants", parents=[common],
                           help="codegrees, Fitting data, normal lattice")
    p_inv.add_argument("spec")
    p_verify = sub.add_parser("verify", parents=[common],
                              help="run theorem checks")
    p_verify.add_argument("args", nargs="*",
                          help="check ids and/or one group spec")
    p_verify.add_argument("--catalog", default=None,
                          help="'all' or a catalog group name")
    sub.add_parser("catalog", parents=[common],
                   help="list catalog groups")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    defaults = _load_config_defaults()
    try:
        config = RunConfig(
            order_cap=getattr(ns, "order_cap",
                              defaults.get("order_cap",
                                           DEFAULT_ORDER_CAP)),
            degree_cap=getattr(ns, "degree_cap",
                               defaults.get("degree_cap",
                                            DEFAULT_DEGREE_CAP)),
            seed=getattr(ns, "seed", defaults.get("seed", 42)),
            format=getattr(ns, "format", defaults.get("format", "text")),
        )
        if ns.command == "table":
            return cmd_table(ns.spec, config)
        if ns.command == "invariants":
            return cmd_invariants(ns.spec, config)
        if ns.command == "verify":
            return cmd_verify(ns.args, ns.catalog, config)
        if ns.command == "catalog":
            return cmd_catalog(config)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SpecError, UnknownCheckError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
