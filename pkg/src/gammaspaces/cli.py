"""Batch verification driver.

Subcommands: build (algebra file -> presheaf file), check (strict Segal or
Bousfield condition), roundtrip (build, extract, compare tables), classify
(deloopings, homology, structure-map verdict).  JSON output is the
contract and is byte-stable for a fixed config and seed; text output is a
human summary.

Exit codes: 0 pass, 1 condition-check failure, 2 input error, 3 algebra
or extraction error, 4 resource or truncation error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys

from . import __version__
from . import algebra as alg
from . import classifying as cb
from . import gammacat as gc
from . import ggamma as gg
from . import presheaves as ps
from .errors import (AxiomError, BudgetError, CompositionError,
                     DisjointnessError, InputError, StrictnessError,
                     TruncationError)

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_ALGEBRA = 3
EXIT_RESOURCE = 4

DEFAULT_BUDGET_ENV = "GAMMASPACES_BUDGET"


def _default_budget() -> int:
    return int(os.environ.get(DEFAULT_BUDGET_ENV, cb.DEFAULT_BUDGET))


def _sha256_file(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_algebra(data: dict):
    if {"group", "monoid", "action"} <= set(data):
        return alg.GMonoid.from_json(data)
    if {"elements", "unit", "table"} <= set(data):
        monoid = alg.FinAbMonoid.from_json(data)
        if "inverse" in data or monoid.is_group():
            return alg.FinAbGroup(monoid.elements, monoid.unit, monoid.table)
        return monoid
    raise InputError("input is neither a monoid/group file nor an action file")


def _build_presheaf(algebra, N: int):
    if isinstance(algebra, alg.GMonoid):
        return ps.build_ggamma_set(algebra, N)
    return ps.build_gamma_set(algebra, N)


def _meta(config: dict, inputs: list[str]) -> dict:
    return {
        "version": __version__,
        "config": config,
        "seed": config.get("seed"),
        "inputs": {path: _sha256_file(path) for path in sorted(inputs)},
    }


def _emit(report: dict, fmt: str, out: str | None, text_summary: str) -> None:
    if fmt == "json":
        payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        payload = text_summary if text_summary.endswith("\n") else text_summary + "\n"
    if out:
        tmp = out + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(payload)
        os.replace(tmp, out)
    else:
        sys.stdout.write(payload)


def _functoriality_probe(X, seed: int, pairs: int = 50) -> dict:
    """Seeded spot check that the derived action is functorial; presheaves
    backed only by stored tables cannot serve arbitrary composites."""
    if X.table_backed:
        return {"passed": None, "pairs": 0,
                "witness": "skipped: presheaf stores only the canonical morphism family"}
    rng = random.Random(seed)
    upper = min(X.N, 3)
    checked = 0
    for _ in range(pairs):
        m, n, p = (rng.randint(0, upper) for _ in range(3))
        f = gc.GammaOpMap(m, n, (0,) + tuple(rng.randint(0, n) for _ in range(m)))
        g = gc.GammaOpMap(n, p, (0,) + tuple(rng.randint(0, p) for _ in range(n)))
        if isinstance(X, ps.TruncatedGGammaSet):
            a = gg.GGammaMap(f, rng.randrange(X.group.size), X.group)
            b = gg.GGammaMap(g, rng.randrange(X.group.size), X.group)
            composite = gg.compose(b, a)
            for x in X.level(m):
                if X.act(composite, x) != X.act(b, X.act(a, x)):
                    return {"passed": False, "pairs": checked,
                            "witness": f"{composite.key()} on {x!r}"}
        else:
            composite = gc.compose(g, f)
            for x in X.level(m):
                if X.act(composite, x) != X.act(g, X.act(f, x)):
                    return {"passed": False, "pairs": checked,
                            "witness": f"{composite.key()} on {x!r}"}
        checked += 1
    return {"passed": True, "pairs": checked, "witness": None}


def _require_positive(**bounds) -> None:
    for name, value in bounds.items():
        if value is not None and value < 1:
            raise InputError(f"--{name} must be positive, got {value}")


def cmd_build(args) -> int:
    _require_positive(levels=args.levels)
    data = _load_json(args.input)
    algebra = _load_algebra(data)
    X = _build_presheaf(algebra, args.levels)
    report = ps.presheaf_to_json(X)
    config = {"command": "build", "input": args.input, "levels": args.levels,
              "seed": args.seed, "format": args.format}
    report["meta"] = _meta(config, [args.input])
    report["functoriality_probe"] = _functoriality_probe(X, args.seed)
    sizes = [len(level) for level in report["levels"]]
    _emit(report, args.format, args.out,
          f"built {report['kind']} presheaf, levels {sizes}")
    return EXIT_PASS


def cmd_check(args) -> int:
    data = _load_json(args.input)
    X = ps.presheaf_from_json(data)
    kind = "bousfield" if args.bousfield else "segal"
    upto = args.upto if args.upto is not None else X.N
    check = (ps.check_strict_bousfield if args.bousfield else ps.check_strict_segal)(X, upto)
    config = {"command": "check", "input": args.input, "condition": kind,
              "upto": upto, "seed": args.seed, "format": args.format}
    report = {"meta": _meta(config, [args.input]), "check": check.as_dict()}
    verdict = "pass" if check.passed else f"FAIL at n={check.failed_at}: {check.witness}"
    _emit(report, args.format, args.out, f"strict {kind} up to {upto}: {verdict}")
    return EXIT_PASS if check.passed else EXIT_CHECK_FAILED


def _roundtrip_gamma(X, reference) -> dict:
    extracted = ps.extract_monoid(X)
    segal = ps.check_strict_segal(X, min(X.N, 2))
    bousfield = ps.check_strict_bousfield(X, min(X.N, 2))
    result = {"segal": segal.as_dict(), "bousfield": bousfield.as_dict()}
    if bousfield.passed:
        regroup = ps.extract_group_bousfield(X)
        result["bousfield_roundtrip_identical"] = \
            regroup.index_table() == reference.index_table()
    result["tables_identical"] = extracted.index_table() == reference.index_table()
    return result


def _roundtrip_ggamma(X, reference: ps.GMonoid) -> dict:
    extracted = ps.extract_g_monoid(X)
    same = (extracted.monoid.index_table() == reference.monoid.index_table()
            and extracted.action == reference.action)
    result = {"segal": ps.check_strict_segal(X, min(X.N, 2)).as_dict(),
              "tables_identical": same}
    bousfield = ps.check_strict_bousfield(X, min(X.N, 2))
    result["bousfield"] = bousfield.as_dict()
    if bousfield.passed:
        regroup = ps.extract_g_group_bousfield(X)
        result["bousfield_roundtrip_identical"] = \
            (regroup.monoid.index_table() == reference.monoid.index_table()
             and regroup.action == reference.action)
    return result


def cmd_roundtrip(args) -> int:
    data = _load_json(args.input)
    if "kind" in data and data["kind"] in ("gamma", "ggamma"):
        X = ps.presheaf_from_json(data)
        reference = X.algebra
        if reference is None:
            raise InputError("presheaf file carries no source algebra to compare against")
    else:
        reference = _load_algebra(data)
        X = _build_presheaf(reference, args.levels)
    if isinstance(X, ps.TruncatedGGammaSet):
        result = _roundtrip_ggamma(X, reference)
    else:
        result = _roundtrip_gamma(X, reference)
    result["functoriality_probe"] = _functoriality_probe(X, args.seed)
    config = {"command": "roundtrip", "input": args.input, "levels": args.levels,
              "seed": args.seed, "format": args.format}
    report = {"meta": _meta(config, [args.input]), "roundtrip": result}
    identical = result["tables_identical"]
    _emit(report, args.format, args.out,
          "roundtrip exact" if identical else "roundtrip MISMATCH")
    return EXIT_PASS if identical else EXIT_CHECK_FAILED


def _verify_stored_tables(data: dict, X) -> None:
    """Stored tables must agree with the rebuilt presheaf where both exist."""
    kind = data["kind"]
    group = getattr(X, "group", None)
    for key, table in data.get("maps", {}).items():
        f = ps._morphism_from_key(key, kind, group)
        if list(X.action_table(f)) != list(table):
            raise StrictnessError(f"stored table for {key} disagrees with rebuild")


def cmd_classify(args) -> int:
    _require_positive(iterate=args.iterate, dim=args.dim, budget=args.budget)
    if args.homology < 0 or args.at < 0:
        raise InputError("--homology and --at must be nonnegative")
    data = _load_json(args.input)
    if not ("kind" in data and data["kind"] in ("gamma", "ggamma")):
        raise InputError("classify expects a presheaf file produced by build")
    if "algebra" not in data:
        raise InputError("presheaf file carries no source algebra; rebuild it with build")
    algebra = ps._algebra_from_json(data)
    budget = args.budget if args.budget is not None else _default_budget()
    needed = (args.dim ** args.iterate) * max(args.at, 1)
    X = _build_presheaf(algebra, max(needed, data.get("N", 1)))
    _verify_stored_tables(data, X)

    config = {"command": "classify", "input": args.input, "iterate": args.iterate,
              "dim": args.dim, "homology": args.homology, "at": args.at,
              "budget": budget, "seed": args.seed, "format": args.format}
    report: dict = {"meta": _meta(config, [args.input])}

    if args.at == 0:
        B = cb.bar(X, 0, args.dim, budget=budget)
        report["evaluation_at_zero"] = {"is_point": B.space.level_sizes() == [1] * (args.dim + 1),
                                        "levels": B.space.level_sizes()}
        _emit(report, args.format, args.out,
              f"evaluation at the zero object: point with levels {B.space.level_sizes()}")
        return EXIT_PASS

    deloop = cb.delooping_report(X, args.iterate, args.dim, args.homology, budget=budget)
    report["delooping"] = deloop.as_dict()
    if args.iterate == 1 and args.dim >= 2:
        result = cb.structure_map(X, args.dim, budget=budget)
        report["structure_map"] = result.as_dict()
    homology_text = ", ".join(f"H_{q}={h}" for q, h in enumerate(deloop.homology))
    _emit(report, args.format, args.out,
          f"{args.iterate}-fold delooping at dim {args.dim}: {homology_text}")
    return EXIT_PASS


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammaspaces",
        description="verify strictness conditions, algebra equivalences, and "
                    "delooping homology for finite presheaves")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, help="input file path")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized probes")

    p_build = sub.add_parser("build", help="build a presheaf file from a monoid, group, or action file")
    common(p_build)
    p_build.add_argument("--levels", type=int, default=3, help="level bound N")
    p_build.set_defaults(func=cmd_build)

    p_check = sub.add_parser("check", help="check a strict condition on a presheaf file")
    common(p_check)
    cond = p_check.add_mutually_exclusive_group()
    cond.add_argument("--segal", action="store_true", help="check the strict Segal condition (default)")
    cond.add_argument("--bousfield", action="store_true", help="check the strict Bousfield condition")
    p_check.add_argument("--upto", type=int, default=None, help="largest level to check")
    p_check.set_defaults(func=cmd_check)

    p_round = sub.add_parser("roundtrip", help="build, extract, and compare Cayley tables")
    common(p_round)
    p_round.add_argument("--levels", type=int, default=3, help="level bound N when input is an algebra file")
    p_round.set_defaults(func=cmd_roundtrip)

    p_classify = sub.add_parser("classify", help="delooping homology and structure-map verdict")
    common(p_classify)
    p_classify.add_argument("--iterate", type=int, default=1, help="number of deloopings")
    p_classify.add_argument("--dim", type=int, default=3, help="simplicial truncation of the bar space")
    p_classify.add_argument("--homology", type=int, default=1, help="largest homology degree")
    p_classify.add_argument("--at", type=int, default=1, help="evaluation object (0 gives the point report)")
    p_classify.add_argument("--budget", type=int, default=None,
                            help=f"simplex budget (default from ${DEFAULT_BUDGET_ENV} or {cb.DEFAULT_BUDGET})")
    p_classify.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AxiomError, StrictnessError, CompositionError, DisjointnessError) as exc:
        print(f"algebra/extraction error: {exc}", file=sys.stderr)
        if isinstance(exc, StrictnessError) and exc.report is not None:
            print(json.dumps(exc.report.as_dict(), sort_keys=True), file=sys.stderr)
        return EXIT_ALGEBRA
    except (TruncationError, BudgetError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
