"""Command line: ``grassmap {validate,report,veronese,chern}``.

Exit status 0 on success, 1 for input or validation errors, 2 when a
Gröbner computation hits ``--max-steps``, 3 for internal failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bundle import P2, chern_of_cokernel, make_presentation
from .groebner import DEFAULT_MAX_STEPS, ResourceLimitExceeded, groebner_basis, resource_limit
from .parse import ParseError, parse_poly
from .pipeline import (ORDERS, SCHEMA_VERSION, JobError, JobSpec, build_report, report_json,
                       report_text, validate)
from .poly import Ring
from .veronese import (ConicPoint, InvalidLine, NotOnSecantMinusV, secant_line,
                       verify_line_remark, verify_point_remark)

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3


class Failure(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status, self.code, self.message = status, code, message


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _load(args) -> JobSpec:
    if not args.input:
        raise Failure(EXIT_INPUT, "MISSING_INPUT", "--input PATH is required")
    try:
        job = JobSpec.load(args.input)
    except OSError as e:
        raise Failure(EXIT_INPUT, "IO_ERROR", str(e)) from None
    if args.seed is not None:
        job.seed = args.seed
    if args.order is not None:
        job.order = args.order
    return job


def cmd_validate(args):
    job = _load(args)
    P, S, M = validate(job)
    _emit(args, {"schema_version": SCHEMA_VERSION, "status": "ok",
                 "plucker_quadrics": M.strings()},
          "valid: the sections generate; plucker map (" + ", ".join(M.strings()) + ")\n")


def cmd_report(args):
    rep = build_report(_load(args), timing=args.timing)
    _emit(args, rep, report_text(rep))


def _conic(text: str) -> ConicPoint:
    q = parse_poly(text, P2)
    try:
        return ConicPoint.from_poly(q)
    except ValueError as e:
        raise Failure(EXIT_INPUT, "INVALID_CONIC", f"{text}: {e}") from None


def _remark_payload(kind: str, rep) -> dict:
    sl = rep.singular
    return {
        "schema_version": SCHEMA_VERSION,
        "remark": kind,
        "passed": rep.passed,
        "checks": rep.checks,
        "failures": [str(f) for f in rep.failures],
        "parametrization": [str(f) for f in rep.parametrization],
        "image_ideal": [str(g) for g in rep.generators],
        "image_degree": rep.image_degree,
        "map_degree": rep.map_degree,
        "pencil_strata": [s.describe() for s in rep.strata],
        "singular_locus": None if sl is None else {"kind": sl.kind, "witness": sl.witness,
                                                   "linear_forms": [str(f) for f in sl.linear_forms]},
        "preimage": None if rep.preimage is None else [str(g) for g in groebner_basis(rep.preimage)],
        "fiber_lengths": rep.fiber_lengths,
    }


def _remark_text(payload: dict) -> str:
    lines = [f"{payload['remark']} projection: " + ("all checks pass" if payload["passed"]
                                                  else "FAILED")]
    lines.append("map: (" + ", ".join(payload["parametrization"]) + ")")
    lines.append("image ideal: (" + ", ".join(payload["image_ideal"]) + ")")
    for name, ok in payload["checks"].items():
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}")
    for f in payload["failures"]:
        lines.append(f"  failure: {f}")
    if payload["singular_locus"]:
        lines.append(f"singular locus: {payload['singular_locus']['kind']} "
                     f"({payload['singular_locus']['witness']})")
    return "\n".join(lines) + "\n"


def cmd_veronese(args):
    seed = args.seed or 0
    if args.kind == "point":
        if len(args.center) != 1:
            raise Failure(EXIT_INPUT, "BAD_CENTER", "a point centre is one conic")
        rep = verify_point_remark(_conic(args.center[0]), seed)
    else:
        if len(args.center) != 2:
            raise Failure(EXIT_INPUT, "BAD_CENTER", "a line centre is two conics")
        line = secant_line(_conic(args.center[0]), _conic(args.center[1]))
        rep = verify_line_remark(line, seed)
    payload = _remark_payload(args.kind, rep)
    _emit(args, payload, _remark_text(payload))
    if not rep.passed:
        raise Failure(EXIT_INTERNAL, "REMARK_FAILED", "; ".join(map(str, rep.failures)))


def cmd_chern(args):
    if args.source is not None or args.target is not None:
        src, tgt = args.source or [], args.target or []
    elif args.input:
        P, _ = _load(args).build()
        src, tgt = P.twists()
    else:
        R = Ring(("x", "y", "z"))
        forms = args.forms or ["x", "y", "z^2"]
        if len(forms) != 3:
            raise Failure(EXIT_INPUT, "BAD_SHAPE", "a presentation is three forms A B Q")
        P = make_presentation(*(parse_poly(f, R) for f in forms))
        src, tgt = P.twists()
    try:
        c = chern_of_cokernel(src, tgt)
    except ValueError as e:
        raise Failure(EXIT_INPUT, "BAD_SHAPE", str(e)) from None
    _emit(args, {"schema_version": SCHEMA_VERSION, "c1": c.c1, "c2": c.c2,
                 "source": list(src), "target": list(tgt)},
          f"c1 = {c.c1}, c2 = {c.c2}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="job file (JSON)")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--order", choices=sorted(ORDERS), default=None)
    common.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                        help="reduction-step cap per Gröbner basis")
    p = argparse.ArgumentParser(prog="grassmap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check a job file").set_defaults(func=cmd_validate)
    r = sub.add_parser("report", parents=[common], help="run the full pipeline")
    r.add_argument("--timing", action="store_true", help="include wall-clock time (not deterministic)")
    r.set_defaults(func=cmd_report)
    v = sub.add_parser("veronese", parents=[common], help="projections of the Veronese surface")
    v.add_argument("kind", choices=("point", "line"))
    v.add_argument("center", nargs="+", help="conic(s), e.g. 'x*y' or 'x*y' 'x*z'")
    v.set_defaults(func=cmd_veronese)
    c = sub.add_parser("chern", parents=[common], help="Chern classes of a presentation")
    c.add_argument("forms", nargs="*", help="A B Q (default x y z^2)")
    c.add_argument("--source", type=int, nargs="*", help="twists of the source")
    c.add_argument("--target", type=int, nargs="*", help="twists of the target")
    c.set_defaults(func=cmd_chern)
    return p


def _fail(args, status: int, code: str, message: str) -> int:
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(json.dumps({"schema_version": SCHEMA_VERSION, "status": "error",
                                     "code": code, "message": message},
                                    indent=2, sort_keys=True) + "\n")
    print(f"error [{code}]: {message}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with resource_limit(args.max_steps):
            args.func(args)
    except Failure as e:
        return _fail(args, e.status, e.code, e.message)
    except ResourceLimitExceeded as e:
        return _fail(args, EXIT_LIMIT, e.code, str(e))
    except (ParseError, JobError, InvalidLine, NotOnSecantMinusV, ValueError) as e:
        return _fail(args, EXIT_INPUT, getattr(e, "code", "INVALID_INPUT"), str(e))
    except Exception as e:   # noqa: BLE001
        return _fail(args, EXIT_INTERNAL, getattr(e, "code", "INTERNAL"),
                     f"{type(e).__name__}: {e}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
