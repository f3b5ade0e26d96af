"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 a checker
contradicted a proved statement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from . import verifiers as vf
from .corpus import CORPUS_VERSION, builtin_corpus, parse_group_spec
from .groups import (
    DEFAULT_SIZE_CAP,
    Group,
    GroupError,
    center,
    direct_product,
    is_cyclic,
    normal_subgroups,
    normal_sylow_subgroup,
    prime_factors,
)
from .rationality import central_characters
from .sring import (
    ClassCountExceeded,
    ResultLimitExceeded,
    SRingError,
    class_algebra,
    enumerate_central_srings,
    from_partition,
    is_primitive,
    trivial_sring,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_REFUTED = 0, 1, 2, 3
SUITES = ("multiplier", "wielandt", "camina", "separating", "rationality", "lemmas", "all")


@dataclass
class RunConfig:
    command: str
    group_spec: Optional[str]
    size_cap: int = DEFAULT_SIZE_CAP
    class_cap: int = 14
    max_results: int = 10**6
    tol: float = 1e-8
    seed: int = 42
    output: str = "-"
    format: str = "json"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _group_options(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("group selection")
    g.add_argument("--group", help="named group or spec, e.g. S3, A5, D18, Z3xZ3, frobenius:7,3")
    g.add_argument("--cyclic", type=int, metavar="N")
    g.add_argument("--dihedral", type=int, metavar="2N", help="dihedral group of this order")
    g.add_argument("--extraspecial", type=int, metavar="P")
    g.add_argument("--frobenius", metavar="P,Q")
    g.add_argument("--perm", metavar="GENS", help='generators, e.g. "(1 2 3 4 5),(1 2 3)"')
    g.add_argument("--product", metavar="G1,G2", help="direct product of two named groups")
    g.add_argument("--file", metavar="PATH", help="group document (JSON Cayley table)")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    p.add_argument("--class-cap", "--limits.class-cap", dest="class_cap", type=int, default=14)
    p.add_argument("--max-results", type=int, default=10**6)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default="-")
    p.add_argument("--timing", action="store_true", help="record wall-clock times (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="srings", description="Exact toolkit for central Schur rings over finite groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("group", help="build a group and describe its structure")
    _group_options(p)
    _common(p)

    p = sub.add_parser("sring", help="validate an S-ring")
    _group_options(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--partition", metavar="PATH", help='JSON file with {"basic_sets": [[int]]} or a bare list')
    src.add_argument("--class-algebra", action="store_true")
    src.add_argument("--trivial", action="store_true")
    p.add_argument("--constants", action="store_true", help="include structure constants")
    _common(p)

    p = sub.add_parser("enumerate", help="enumerate all central S-rings")
    _group_options(p)
    p.add_argument("--dump", action="store_true", help="include every S-ring")
    _common(p)

    p = sub.add_parser("verify", help="run theorem suites; JSON lines output")
    p.add_argument("suite", choices=SUITES)
    _group_options(p)
    p.add_argument("--corpus", choices=("builtin",))
    p.add_argument("--workers", type=int, default=1)
    _common(p)

    p = sub.add_parser("diagnose", help="generalized B-group verdict")
    _group_options(p)
    _common(p)

    p = sub.add_parser("characters", help="character table of the class algebra")
    _group_options(p)
    _common(p)
    return parser


def resolve_group(args) -> tuple[str, Group]:
    cap = args.size_cap
    chosen = [k for k in ("group", "cyclic", "dihedral", "extraspecial", "frobenius", "perm", "product", "file")
              if getattr(args, k, None) is not None]
    if len(chosen) != 1:
        raise _UsageError("exactly one group selection option is required")
    kind = chosen[0]
    val = getattr(args, kind)
    if kind == "group":
        spec = val
    elif kind == "product":
        a, _, b = val.partition(",")
        spec = f"{a}x{b}"
        return spec, direct_product(parse_group_spec(a, cap), parse_group_spec(b, cap), cap)
    elif kind == "file":
        spec = f"file:{val}"
    else:
        spec = f"{kind}:{val}"
    return spec, parse_group_spec(spec, cap)


class _UsageError(Exception):
    pass


def _config(args, spec) -> RunConfig:
    return RunConfig(args.command, spec, args.size_cap, args.class_cap, args.max_results,
                     args.tol, args.seed, args.out, args.format)


def _limits(args) -> vf.Limits:
    return vf.Limits(args.class_cap, args.max_results)


def _envelope(cfg: RunConfig, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "config": asdict(cfg), **body}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            nested = isinstance(v, dict) or (isinstance(v, list) and any(isinstance(t, dict) for t in v))
            if nested and v:
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            lines.append(f"{pad}-")
            lines += _text(v, indent + 1)
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(doc)
    return "\n".join(_text(doc))


# --------------------------------------------------------------------------
# commands


def _group_report(g: Group) -> dict:
    cls = g.conjugacy
    sylow = []
    for p in prime_factors(g.order):
        s = normal_sylow_subgroup(g, p)
        sylow.append({"p": p, "normal": s is not None,
                      "order": len(s) if s else None, "cyclic": bool(s and is_cyclic(g, s))})
    return {
        "order": g.order,
        "family": g.family,
        "abelian": g.is_abelian,
        "classes": [sorted(c) for c in cls.classes],
        "class_sizes": cls.sizes(),
        "center": sorted(center(g).members),
        "normal_subgroups": [sorted(h.members) for h in normal_subgroups(g)],
        "normal_sylow": sylow,
        "camina_pairs": [sorted(p.H.members) for p in vf.camina_pairs(g)],
    }


def cmd_group(args, cfg, g) -> tuple[int, list[dict]]:
    return EXIT_OK, [_envelope(cfg, {"group": _group_report(g)})]


def _load_partition(path: str):
    data = json.loads(Path(path).read_text())
    return data["basic_sets"] if isinstance(data, dict) else data


def cmd_sring(args, cfg, g) -> tuple[int, list[dict]]:
    try:
        if args.class_algebra:
            a = class_algebra(g)
        elif args.trivial:
            a = trivial_sring(g)
        else:
            a = from_partition(g, _load_partition(args.partition))
    except SRingError as exc:
        body = {"valid": False, "error": type(exc).__name__, "axiom": exc.axiom, "message": str(exc),
                "witness": exc.witness}
        return EXIT_VALIDATION, [_envelope(cfg, body)]
    body = {"valid": True, "sring": a.to_document(group_ref=cfg.group_spec), "primitive": is_primitive(a)}
    if args.constants:
        body["constants"] = a.constants.tolist()
    return EXIT_OK, [_envelope(cfg, body)]


def cmd_enumerate(args, cfg, g) -> tuple[int, list[dict]]:
    try:
        rings = enumerate_central_srings(g, args.class_cap, args.max_results)
    except (ClassCountExceeded, ResultLimitExceeded) as exc:
        return EXIT_VALIDATION, [_envelope(cfg, {"group": cfg.group_spec, "complete": False, "error": str(exc)})]
    body = {"group": cfg.group_spec, "complete": True, "count": len(rings), "ranks": [a.rank for a in rings]}
    if args.dump:
        body["srings"] = [a.to_document(group_ref=cfg.group_spec) for a in rings]
    return EXIT_OK, [_envelope(cfg, body)]


def run_suite(suite: str, spec: str, class_cap: int = 14, max_results: int = 10**6, size_cap: int = DEFAULT_SIZE_CAP,
              tol: float = 1e-8, seed: int = 42, timing: bool = False) -> list[dict]:
    """Run one suite on one group; returns report documents."""
    g = parse_group_spec(spec, size_cap)
    limits = vf.Limits(class_cap, max_results)
    suites = ("multiplier", "wielandt", "camina", "separating", "rationality", "lemmas") if suite == "all" else (suite,)
    out = []
    for name in suites:
        start = time.perf_counter()
        if name == "multiplier":
            diags = vf.multiplier_suite(g, limits)
            # one record for the class congruences keeps batch output compact
            cong = [d for d in diags if d.check == "multiplier_congruence"]
            diags = [d for d in diags if d.check != "multiplier_congruence"]
            bad = [w for d in cong if not d.confirmed for w in d.witnesses]
            diags.append(vf.Diagnosis(
                "multiplier_congruence", vf.subject_of(g), "class power congruences for primes <= 13",
                vf.Verdict.REFUTED if bad else vf.Verdict.CONFIRMED, bad, fatal=bool(bad),
                data={"checked": len(cong)}))
        elif name == "wielandt":
            diags = [vf.wielandt_central_check(g, limits)]
        elif name == "camina":
            diags = [vf.camina_b_group_check(g, limits)]
        elif name == "separating":
            diags = [vf.separating_subgroup_suite(g, limits)]
        elif name == "rationality":
            diags = [vf.rationality_suite(g, limits, tol, seed)]
        else:
            diags = vf.lemma_suite(g)
        elapsed = int((time.perf_counter() - start) * 1000) if timing else 0
        for d in diags:
            doc = d.to_document()
            doc["subject"] = spec
            doc["elapsed_ms"] = elapsed
            out.append(doc)
    return out


def _suite_task(task):
    return run_suite(*task)


def cmd_verify(args, cfg, g) -> tuple[int, list[dict]]:
    if args.corpus:
        specs = builtin_corpus()
    else:
        specs = [cfg.group_spec]
    tasks = [(args.suite, s, args.class_cap, args.max_results, args.size_cap, args.tol, args.seed, args.timing)
             for s in specs]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_suite_task, tasks))
    else:
        results = [_suite_task(t) for t in tasks]
    docs = [d for batch in results for d in batch]
    code = EXIT_REFUTED if any(d["fatal"] for d in docs) else EXIT_OK
    meta = {"corpus": CORPUS_VERSION if args.corpus else None}
    return code, [_envelope(cfg, {**meta, **d}) for d in docs]


def cmd_diagnose(args, cfg, g) -> tuple[int, list[dict]]:
    d = vf.generalized_b_group_diagnostic(g, _limits(args))
    if d.verdict is vf.Verdict.OUT_OF_SCOPE and not g.is_abelian:
        # too many classes to enumerate: a simple group may still be decided by its rational closure
        w = vf.simple_group_witness(g)
        if w.verdict is not vf.Verdict.OUT_OF_SCOPE:
            d = w
    doc = d.to_document()
    doc["subject"] = cfg.group_spec
    code = EXIT_REFUTED if d.fatal else EXIT_OK
    return code, [_envelope(cfg, doc)]


def cmd_characters(args, cfg, g) -> tuple[int, list[dict]]:
    table = central_characters(class_algebra(g), args.seed)
    return EXIT_OK, [_envelope(cfg, {"group": cfg.group_spec, "characters": table.to_document(args.tol)})]


COMMANDS = {
    "group": cmd_group,
    "sring": cmd_sring,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "diagnose": cmd_diagnose,
    "characters": cmd_characters,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0; argument errors exit with EXIT_USAGE
        return int(exc.code or 0)
    try:
        if args.command == "verify" and args.corpus:
            spec, g = "corpus:builtin", None
        else:
            spec, g = resolve_group(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"srings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, ValueError, OSError) as exc:
        print(f"srings: invalid group: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    cfg = _config(args, spec)
    try:
        code, docs = COMMANDS[args.command](args, cfg, g)
    except (GroupError, SRingError, ValueError, OSError) as exc:
        print(f"srings: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.command == "verify" and args.format == "json":
        text = "\n".join(_dump(d) for d in docs)
    else:
        text = "\n".join(_render(d, args.format) for d in docs)
    if args.out == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(args.out).write_text(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
