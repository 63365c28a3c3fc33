"""Batch command-line frontend.

Subcommands:

    validate [catalog.json]        check the whole catalog
    autdim [--algebra NAME]        automorphism-group dimensions
    h2 [--algebra NAME] [--even]   second-cohomology reports
    degen verify <cert.json|dir>   verify degeneration certificates
    degen separate <A> <B>         non-degeneration obstructions for A -> B
    hasse --out FILE.dot           full relation as DOT (plus summary)
    components                     component bookkeeping report

Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad input,
3 internal soundness violation.  The default catalog can be overridden with
--catalog or the JSUPER_CATALOG environment variable.  Output is
deterministic: entries are processed in catalog order and JSON keys are
sorted, so parallel runs byte-match serial ones.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import os
import pathlib
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog as catalog_mod
from .catalog import CatalogError, validate_entry
from .cohomology import h2_report, cocycle_space
from .degeneration import (Dim2Poset, DegenerationCertificate, SoundnessError,
                           load_certificates, load_reference_components,
                           load_open_pairs, build_relation, to_dot,
                           component_report, separate_entries,
                           verify_certificate, family_certificate_check)
from .derivation import even_derivation_dim
from .superalgebra import ParamFamily

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_SOUNDNESS = 3


class InputError(Exception):
    pass


def _load_catalog(args):
    path = getattr(args, "catalog", None) or os.environ.get("JSUPER_CATALOG")
    try:
        if path:
            entries = catalog_mod.parse_catalog(pathlib.Path(path).read_text())
        else:
            entries = catalog_mod.load_default()
    except FileNotFoundError as exc:
        raise InputError(f"catalog not found: {exc}") from exc
    except CatalogError as exc:
        raise InputError(f"catalog parse error: {exc}") from exc
    return entries


def _select(entries, pattern):
    if not pattern:
        return entries
    chosen = [e for e in entries if fnmatch.fnmatchcase(e.name, pattern)]
    if not chosen:
        raise InputError(f"selector {pattern!r} matches no catalog entry")
    return chosen


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _pool_map(fn, items, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_validate(args):
    entries = _load_catalog(args)
    failures = []
    for lines in _pool_map(validate_entry, entries, args.jobs):
        failures.extend(lines)
    families = sum(1 for e in entries if e.is_family)
    if failures:
        _emit(args, {"ok": False, "failures": failures}, failures)
        return EXIT_CHECK_FAILED
    summary = (f"{len(entries) - families} algebras + {families} family: all pass")
    _emit(args, {"ok": True, "failures": []}, [summary])
    return EXIT_OK


def _autdim_one(entry):
    if entry.is_family:
        from .catalog import FAMILY_SAMPLE_VALUES
        dims = {even_derivation_dim(entry.algebra.specialize(v)).dim
                for v in FAMILY_SAMPLE_VALUES}
        dim = dims.pop() if len(dims) == 1 else None
    else:
        dim = even_derivation_dim(entry.algebra).dim
    return entry.name, dim, entry.expected_dim_aut


def cmd_autdim(args):
    entries = _select(_load_catalog(args), args.algebra)
    rows = _pool_map(_autdim_one, entries, args.jobs)
    bad = [(n, d, e) for n, d, e in rows if d != e]
    payload = {"dims": {n: d for n, d, _ in rows},
               "expected": {n: e for n, _, e in rows},
               "ok": not bad}
    lines = [f"{n}: dim Aut = {d} (expected {e})" for n, d, e in rows]
    if bad:
        lines.append(f"{len(bad)} mismatches")
    _emit(args, payload, lines)
    return EXIT_OK if not bad else EXIT_CHECK_FAILED


def _h2_one(item):
    name, algebra = item
    return h2_report(algebra, name).to_dict()


def cmd_h2(args):
    entries = _select(_load_catalog(args), args.algebra)
    work = []
    for e in entries:
        if e.is_family:
            from .catalog import FAMILY_SAMPLE_VALUES
            for v in FAMILY_SAMPLE_VALUES:
                work.append((f"{e.name}[{v}]", e.algebra.specialize(v)))
        else:
            work.append((e.name, e.algebra))
    if args.even:
        reports = []
        for name, algebra in work:
            dim, _ = cocycle_space(algebra, even_only=True)
            reports.append({"algebra_name": name, "dim_z2_even": dim})
        lines = [f"{r['algebra_name']}: dim Z2 (even part) = {r['dim_z2_even']}"
                 for r in reports]
    else:
        reports = _pool_map(_h2_one, work, args.jobs)
        lines = [
            (f"{r['algebra_name']}: Z2={r['dim_z2']} B2={r['dim_b2']} "
             f"H2={r['dim_h2']} | even: Z2={r['dim_z2_even']} "
             f"B2={r['dim_b2_even']} H2={r['dim_h2_even']} | "
             f"rigid-by-H2={r['rigid_by_h2']} "
             f"rigid-by-even-H2={r['rigid_by_h2_even']}")
            for r in reports
        ]
    _emit(args, {"reports": reports}, lines)
    return EXIT_OK


def _load_certs_arg(path):
    p = pathlib.Path(path)
    if not p.exists():
        raise InputError(f"no such file or directory: {path}")
    try:
        return load_certificates(p)
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise InputError(f"bad certificate file: {exc}") from exc


def cmd_degen_verify(args):
    entries = catalog_mod.catalog_map(_load_catalog(args))
    certs = _load_certs_arg(args.path) if args.path else load_certificates()
    results = []
    ok = True
    for cert in certs:
        if cert.source not in entries:
            raise InputError(f"unknown source {cert.source!r}")
        checker = family_certificate_check \
            if entries[cert.source].is_family else verify_certificate
        res = checker(cert, entries)
        ok = ok and res.ok
        results.append({"source": cert.source, "target": cert.target,
                        "ok": res.ok, "message": res.message})
    lines = [f"{'PASS' if r['ok'] else 'FAIL'} {r['source']} -> {r['target']}: "
             f"{r['message']}" for r in results]
    lines.append(f"{sum(r['ok'] for r in results)}/{len(results)} certificates verified")
    _emit(args, {"ok": ok, "results": results}, lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_degen_separate(args):
    entries = catalog_mod.catalog_map(_load_catalog(args))
    for name in (args.a, args.b):
        if name not in entries:
            raise InputError(f"unknown algebra {name!r}")
    poset = Dim2Poset.load_default()
    obstructions = separate_entries(entries[args.a], entries[args.b], poset)
    payload = {"source": args.a, "target": args.b,
               "obstructions": [str(o) for o in obstructions],
               "refuted": bool(obstructions)}
    if obstructions:
        lines = [f"{args.a} -/-> {args.b}: {len(obstructions)} obstruction(s)"]
        lines += [f"  {o}" for o in obstructions]
    else:
        lines = [f"no obstruction found for {args.a} -> {args.b} "
                 f"(not a proof of degeneration)"]
    _emit(args, payload, lines)
    return EXIT_OK


def _build_relation(args):
    entries = catalog_mod.catalog_map(_load_catalog(args))
    certs = _load_certs_arg(args.certs) if args.certs else load_certificates()
    poset = Dim2Poset.load_default()
    relation = build_relation(entries, certs, poset)
    return entries, relation


def cmd_hasse(args):
    entries, relation = _build_relation(args)
    dot = to_dot(relation)
    if args.out:
        pathlib.Path(args.out).write_text(dot + "\n")
    est = sum(1 for (a, b) in relation.established if a != b)
    summary = {
        "nodes": len(relation.nodes),
        "established": est,
        "refuted": len(relation.refuted),
        "unknown": len(relation.unknown_pairs()),
    }
    lines = [f"{k}: {v}" for k, v in summary.items()]
    if args.out:
        lines.append(f"DOT written to {args.out}")
        _emit(args, summary, lines)
    elif args.format == "text":
        print(dot)
    else:
        summary["dot"] = dot
        _emit(args, summary, lines)
    return EXIT_OK


def cmd_components(args):
    entries, relation = _build_relation(args)
    report = component_report(entries, relation,
                              load_reference_components(), load_open_pairs())
    _emit(args, report.to_dict(), report.lines())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def make_parser():
    top = argparse.ArgumentParser(
        prog="jsuper",
        description="Exact verification toolkit for the variety of "
                    "type-(2,2) Jordan superalgebras")
    top.add_argument("--catalog", help="catalog JSON path "
                     "(default: shipped data or $JSUPER_CATALOG)")
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("--jobs", type=int, default=1,
                     help="worker processes for per-algebra tasks")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate the catalog")
    p.add_argument("catalog_path", nargs="?", default=None)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("autdim", help="automorphism group dimensions")
    p.add_argument("--algebra", help="entry name or glob pattern")
    p.set_defaults(fn=cmd_autdim)

    p = sub.add_parser("h2", help="second cohomology reports")
    p.add_argument("--algebra", help="entry name or glob pattern")
    p.add_argument("--even", action="store_true",
                   help="only the grading-preserving cocycle dimension")
    p.set_defaults(fn=cmd_h2)

    p = sub.add_parser("degen", help="degeneration certificates and separations")
    dsub = p.add_subparsers(dest="degen_command", required=True)
    v = dsub.add_parser("verify", help="verify certificate file or directory")
    v.add_argument("path", nargs="?", default=None,
                   help="cert JSON or directory (default: shipped corpus)")
    v.set_defaults(fn=cmd_degen_verify)
    s = dsub.add_parser("separate", help="non-degeneration obstructions")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(fn=cmd_degen_separate)

    p = sub.add_parser("hasse", help="degeneration relation as DOT")
    p.add_argument("--certs", help="certificate directory (default: shipped)")
    p.add_argument("--out", help="write DOT to this file")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("components", help="irreducible-component bookkeeping")
    p.add_argument("--certs", help="certificate directory (default: shipped)")
    p.set_defaults(fn=cmd_components)
    return top


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "catalog_path", None):
        args.catalog = args.catalog_path
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except SoundnessError as exc:
        print(f"soundness violation: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS


if __name__ == "__main__":
    sys.exit(main())
