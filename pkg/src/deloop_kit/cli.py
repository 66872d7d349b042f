"""Command-line front end.

Exit codes for `paper verify`: 0 all mandatory checks pass, 1 at least
one failure, 2 configuration or parse error, 3 all mandatory checks pass
but extra inconclusive probe levels appeared (e.g. a raised --max-n).
The other subcommands use 0/1 for pass/fail and 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import io as kio
from .algebra import AlgebraError, primitive_idempotents, radical, validate_algebra
from .deloop import del_bounded, sddel_bounded
from .linalg import ScalarFormatError, parse_scalar, scalar_to_str
from .modules import simples, syzygy
from .tilting import is_tilting_two_term
from .verify import VerifyConfig, run_paper_verification


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deloop-kit",
        description="Exact syzygy, delooping-level, and tilting computations for finite-dimensional algebras over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("alg", help="algebra file operations")
    alg_sub = alg.add_subparsers(dest="alg_command", required=True)
    alg_validate = alg_sub.add_parser("validate", help="check associativity and unit laws")
    alg_validate.add_argument("file")
    alg_radical = alg_sub.add_parser("radical", help="print a basis of the Jacobson radical")
    alg_radical.add_argument("file")

    mod = sub.add_parser("mod", help="module file operations")
    mod_sub = mod.add_subparsers(dest="mod_command", required=True)
    mod_syzygy = mod_sub.add_parser("syzygy", help="compute an iterated syzygy")
    mod_syzygy.add_argument("--power", type=int, default=1, metavar="N")
    mod_syzygy.add_argument("algebra")
    mod_syzygy.add_argument("module")

    del_p = sub.add_parser("del", help="bracket the delooping level of a module")
    del_p.add_argument("--max-n", type=int, default=2, metavar="N")
    del_p.add_argument("--pool", action="append", default=[], metavar="FILE")
    del_p.add_argument("algebra")
    group = del_p.add_mutually_exclusive_group(required=True)
    group.add_argument("module", nargs="?")
    group.add_argument("--simple", type=int, metavar="I")

    sddel_p = sub.add_parser("sddel", help="upper-bound the sub-derived delooping level")
    sddel_p.add_argument("--max-n", type=int, default=2, metavar="N")
    sddel_p.add_argument("--pool", action="append", default=[], metavar="FILE")
    sddel_p.add_argument("--seed", type=int, default=0)
    sddel_p.add_argument("algebra")
    sddel_p.add_argument("module")

    tilt = sub.add_parser("tilt", help="tilting complex checks")
    tilt_sub = tilt.add_subparsers(dest="tilt_command", required=True)
    tilt_check = tilt_sub.add_parser("check", help="two-term tilting conditions")
    tilt_check.add_argument("file")

    paper = sub.add_parser("paper", help="whole-paper verification pipeline")
    paper_sub = paper.add_subparsers(dest="paper_command", required=True)
    paper_verify = paper_sub.add_parser("verify", help="replay every concrete claim")
    paper_verify.add_argument("--q", default="2", metavar="SCALAR")
    paper_verify.add_argument("--max-n", type=int, default=2, metavar="N")
    paper_verify.add_argument("--seed", type=int, default=0)
    paper_verify.add_argument("--json", metavar="OUT", default=None)
    return parser


def _load_pool(paths, resolver):
    pool = []
    for i, p in enumerate(paths):
        rep = kio.load_module_file(p, resolver)
        pool.append((f"user:{p}", rep))
    return pool


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (kio.ParseError, ScalarFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "alg":
        alg = kio.load_algebra_file(args.file)
        if args.alg_command == "validate":
            rep = validate_algebra(alg)
            print(rep.summary())
            return 0 if rep.ok else 1
        if args.alg_command == "radical":
            basis = radical(alg)
            out = {
                "algebra": alg.name,
                "radical_dim": len(basis),
                "basis": [[scalar_to_str(v[i, 0]) for i in range(alg.dim)] for v in basis],
            }
            print(kio.dumps_canonical(out), end="")
            return 0

    if args.command == "mod":
        alg = kio.load_algebra_file(args.algebra)
        resolver = kio.make_file_resolver(args.module, {alg.name: alg})
        rep = kio.load_module_file(args.module, resolver)
        result = syzygy(rep, args.power)
        print(kio.dumps_canonical(kio.module_to_dict(result, alg.name)), end="")
        return 0

    if args.command == "del":
        alg = kio.load_algebra_file(args.algebra)
        resolver = kio.make_file_resolver(args.algebra, {alg.name: alg})
        frame = primitive_idempotents(alg)
        if args.simple is not None:
            ss = simples(alg, frame)
            if not 1 <= args.simple <= len(ss):
                raise AlgebraError(f"--simple index must be in 1..{len(ss)}")
            module = ss[args.simple - 1]
        else:
            module = kio.load_module_file(args.module, resolver)
        pool = None
        if args.pool:
            from .deloop import build_default_pool

            pool = build_default_pool(alg, frame) + _load_pool(args.pool, resolver)
        report = del_bounded(alg, module, args.max_n, frame, pool)
        print(kio.dumps_canonical(kio.del_report_to_dict(report)), end="")
        return 0

    if args.command == "sddel":
        alg = kio.load_algebra_file(args.algebra)
        resolver = kio.make_file_resolver(args.algebra, {alg.name: alg})
        module = kio.load_module_file(args.module, resolver)
        overpool = None
        if args.pool:
            from .deloop import build_overmodule_pool

            frame = primitive_idempotents(alg)
            overpool = build_overmodule_pool(alg, module, frame) + _load_pool(args.pool, resolver)
        report = sddel_bounded(alg, module, args.max_n, overmodule_pool=overpool, seed=args.seed)
        print(kio.dumps_canonical(kio.sddel_report_to_dict(report)), end="")
        return 0

    if args.command == "tilt":
        t = kio.load_complex_file(args.file)
        report = is_tilting_two_term(t)
        out = {
            "self_orthogonal": report.self_orthogonal,
            "hom_plus_one": report.hom_plus_one,
            "hom_minus_one": report.hom_minus_one,
            "summand_classes": [c.label() for c in report.classes],
            "simple_count": report.simple_count,
            "ok": report.ok,
            "summary": report.summary(),
        }
        print(kio.dumps_canonical(out), end="")
        return 0 if report.ok else 1

    if args.command == "paper":
        try:
            q = parse_scalar(args.q)
        except ScalarFormatError:
            print(f"error: --q must be a canonical scalar, got {args.q!r}", file=sys.stderr)
            return 2
        try:
            config = VerifyConfig(q=q, n_max=args.max_n, seed=args.seed).normalized()
        except AlgebraError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        report = run_paper_verification(config)
        for check in report.checks:
            print(f"[{check['status'].upper():12}] {check['id']}: {check['paper_anchor']}")
        if report.aborted:
            print(f"aborted: {report.aborted}")
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
            print(f"report written to {args.json}")
        code = report.exit_code()
        print(f"overall: {'pass' if code == 0 else 'fail' if code == 1 else 'pass-with-new-inconclusives'}")
        return code

    raise AlgebraError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
