"""``mincode`` command line.

Exit codes: 0 success, 1 a mathematical claim or authorization failed,
2 resource, input or file-format problem.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import code as code_core
from . import construction, sss
from .errors import InputError, MathError, ResourceError
from .gf import make_field, split_prime_power


@dataclass
class RunConfig:
    descriptor: Optional[construction.CodeDescriptor]
    cap: Optional[int] = None
    workers: int = 1
    out_dir: Optional[Path] = None
    fmt: str = "text"
    seed: Optional[int] = 0

    def __post_init__(self):
        if self.cap is not None and self.cap < 1:
            raise InputError("--cap must be at least 1")
        if self.workers < 1:
            raise InputError("--workers must be at least 1")


def config_from_args(args, need_descriptor: bool = True) -> RunConfig:
    return RunConfig(
        descriptor=descriptor_from_args(args) if need_descriptor else None,
        cap=getattr(args, "cap", None),
        workers=getattr(args, "workers", 1),
        out_dir=Path(args.out_dir) if getattr(args, "out_dir", None) else None,
        fmt=getattr(args, "fmt", "text"),
        seed=None if getattr(args, "entropy", False) else getattr(args, "seed", 0),
    )


def _ints(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    return [int(t) for t in text.replace(",", " ").split()]


def _read_json(path) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dump_matrix(rows) -> str:
    return "[\n" + ",\n".join("  " + json.dumps([int(x) for x in r]) for r in rows) + "\n]\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# --- argument parsing ----------------------------------------------------------

def _add_help(p: argparse.ArgumentParser) -> None:
    p.add_argument("--help", action="help", help="show this help message and exit")


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("field")
    g.add_argument("-q", type=int, help="field order q = p^h")
    g.add_argument("-p", type=int, help="characteristic (odd prime)")
    g.add_argument("-h", dest="h", type=int, help="extension degree")
    g.add_argument("--irreducible", help="modulus coefficients, low degree first, e.g. 1,0,1")


def _add_descriptor_flags(p: argparse.ArgumentParser) -> None:
    _add_field_flags(p)
    g = p.add_argument_group("descriptor")
    g.add_argument("--descriptor", help="descriptor JSON file")
    g.add_argument("-m", type=int, help="ambient dimension (> 3)")
    g.add_argument("-k", type=int, help="weight cutoff of f")
    g.add_argument("--alpha", help="alpha_1..alpha_k as integer encodings, e.g. 1,2 (default all ones)")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, help="enumeration cap (default $MINCODE_CAP or 10^7)")
    p.add_argument("--workers", type=int, default=1)


def _field_params(args) -> tuple[Optional[int], Optional[int]]:
    if args.q is not None and (args.p is not None or args.h is not None):
        raise InputError("give either -q or -p/-h, not both")
    if args.q is not None:
        return split_prime_power(args.q)
    if args.p is not None:
        return args.p, args.h or 1
    return None, None


def descriptor_from_args(args) -> construction.CodeDescriptor:
    inline = [args.q, args.p, args.h, args.m, args.k, args.alpha, args.irreducible]
    if args.descriptor is not None:
        if any(x is not None for x in inline):
            raise InputError("--descriptor cannot be combined with inline descriptor flags")
        data = _read_json(args.descriptor)
        if not isinstance(data, dict):
            raise InputError("descriptor file must hold a JSON object")
        return construction.CodeDescriptor.from_json(data)
    p, h = _field_params(args)
    if p is None or args.m is None or args.k is None:
        raise InputError("need a field (-q or -p/-h), -m and -k, or --descriptor")
    irr = _ints(args.irreducible)
    return construction.CodeDescriptor(p, h, args.m, args.k, tuple(_ints(args.alpha) or ()),
                                       tuple(irr) if irr else None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mincode", add_help=False,
                                     description="Minimal linear codes C_f and Massey secret sharing.")
    _add_help(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", add_help=False, help="predicted parameters and constraint flags")
    _add_help(p)
    _add_descriptor_flags(p)
    p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")

    p = sub.add_parser("build", add_help=False, help="write the generator matrix of C_f")
    _add_help(p)
    _add_descriptor_flags(p)
    _add_run_flags(p)
    p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("verify", add_help=False, help="enumerate the code and check every claim")
    _add_help(p)
    _add_descriptor_flags(p)
    _add_run_flags(p)
    p.add_argument("--generator-file", help="verify an arbitrary generator matrix instead of C_f")
    p.add_argument("--out-dir", help="write report.json and weights.csv here")
    p.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("sss", add_help=False, help="Massey secret sharing on the dual of C_f")
    _add_help(p)
    ssub = p.add_subparsers(dest="action", required=True)

    a = ssub.add_parser("deal", add_help=False, help="share a secret")
    _add_help(a)
    _add_descriptor_flags(a)
    _add_run_flags(a)
    a.add_argument("--secret", type=int, required=True)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--entropy", action="store_true", help="use OS randomness instead of --seed")
    a.add_argument("--out", help="share bundle file (default stdout)")

    a = ssub.add_parser("reconstruct", add_help=False, help="recover the secret from a set of shares")
    _add_help(a)
    _add_descriptor_flags(a)
    _add_run_flags(a)
    a.add_argument("--bundle", required=True)
    a.add_argument("--set", dest="set_file", required=True, help="JSON participant list (or list of lists)")
    a.add_argument("--index", type=int, help="pick one set from a list of sets")
    a.add_argument("--show-coefficients", action="store_true")

    a = ssub.add_parser("access-sets", add_help=False, help="list the minimal authorized sets")
    _add_help(a)
    _add_descriptor_flags(a)
    _add_run_flags(a)
    a.add_argument("--out", help="output file (default stdout)")

    a = ssub.add_parser("check", add_help=False, help="authorization and perfectness of a set")
    _add_help(a)
    _add_descriptor_flags(a)
    _add_run_flags(a)
    a.add_argument("--set", dest="set_file", required=True)
    a.add_argument("--index", type=int)
    a.add_argument("--bundle", help="shares to test perfectness against")
    return parser


# --- commands -----------------------------------------------------------------

def cmd_params(args) -> int:
    cfg = config_from_args(args)
    pred = construction.predict_params(cfg.descriptor)
    if cfg.fmt == "json":
        sys.stdout.write(dump_json(pred.to_json()))
    else:
        for key, value in pred.to_json().items():
            sys.stdout.write(f"{key}={str(value).lower() if isinstance(value, bool) else value}\n")
    return 0


def cmd_build(args) -> int:
    cfg = config_from_args(args)
    d = cfg.descriptor
    code = construction.build_code(d, cfg.cap)
    _emit(dump_matrix(code.G), args.out)
    if args.out:
        print(f"wrote [{code.n}, {code.dim}]_{d.q} generator to {args.out}")
    return 0


def _generic_code(args) -> code_core.LinearCode:
    data = _read_json(args.generator_file)
    if isinstance(data, dict):
        rows = data.get("rows", data.get("generator"))
        if "p" not in data:
            raise InputError("generator object needs a \"p\" field")
        ctx = make_field(int(data["p"]), int(data.get("h", 1)), data.get("irreducible"))
    else:
        rows = data
        p, h = _field_params(args)
        if p is None:
            raise InputError("a bare generator matrix needs -q or -p/-h")
        ctx = make_field(p, h, _ints(args.irreducible))
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InputError("generator matrix must be a non-empty JSON array of arrays")
    if len({len(r) for r in rows}) != 1:
        raise InputError("generator rows have different lengths")
    if any(not 0 <= int(x) < ctx.q for r in rows for x in r):
        raise InputError(f"generator entries must be field encodings in [0, {ctx.q - 1}]")
    return code_core.LinearCode(ctx, rows)


def cmd_verify(args) -> int:
    if args.generator_file:
        if args.descriptor is not None or args.m is not None or args.k is not None:
            raise InputError("--generator-file cannot be combined with a descriptor")
        cfg = config_from_args(args, need_descriptor=False)
        report = construction.verify_generic(_generic_code(args), cfg.cap, cfg.workers)
    else:
        cfg = config_from_args(args)
        report = construction.verify_instance(cfg.descriptor, cfg.cap, cfg.workers)
    report_json = dump_json(report.to_json())
    csv = code_core.weight_csv(report.distribution)
    if cfg.out_dir:
        out = cfg.out_dir
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(report_json)
        (out / "weights.csv").write_text(csv)
    if cfg.fmt == "json":
        sys.stdout.write(report_json)
    elif cfg.fmt == "csv":
        sys.stdout.write(csv)
    else:
        for c in report.claims:
            print(f"[{'PASS' if c.passed else 'FAIL'}] {c.claim}: predicted {c.predicted}, observed {c.observed}")
        print(f"minimal={str(report.verdict.minimal).lower()}")
        if not report.verdict.minimal:
            print(f"covering={list(report.verdict.covering)}")
            print(f"covered={list(report.verdict.covered)}")
        if report.ab is not None:
            print(f"w_min/w_max={report.ab.ratio} ab_holds={str(report.ab.holds).lower()}")
    return 0 if report.passed else 1


def _load_set(args) -> list[int]:
    data = _read_json(args.set_file)
    if isinstance(data, list) and data and all(isinstance(x, list) for x in data):
        if args.index is None:
            raise InputError("set file holds several sets; choose one with --index")
        try:
            data = data[args.index]
        except IndexError:
            raise InputError(f"--index {args.index} out of range") from None
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise InputError("access set must be a JSON array of participant indices")
    return data


def cmd_sss(args) -> int:
    cfg = config_from_args(args)
    d = cfg.descriptor
    inst = sss.make_instance(d, cfg.cap)
    if args.action == "deal":
        if not 0 <= args.secret < d.q:
            raise InputError(f"secret must be a field element in [0, {d.q - 1}]")
        bundle = sss.deal(inst, args.secret, cfg.seed)
        _emit(dump_json(bundle.to_json()), args.out)
    elif args.action == "reconstruct":
        bundle = sss.ShareBundle.from_json(_read_json(args.bundle))
        members = _load_set(args)
        if args.show_coefficients:
            for i, lam in sss.reconstruction_coefficients(inst, members).items():
                print(f"lambda[{i}]={lam}")
        print(f"secret={sss.reconstruct(inst, members, bundle.shares)}")
    elif args.action == "access-sets":
        sets = sss.enumerate_minimal_access_sets(inst, cfg.cap)
        _emit(dump_matrix([a.to_json() for a in sets]), args.out)
    elif args.action == "check":
        members = _load_set(args)
        authorized = sss.is_authorized(inst, members)
        print(f"authorized={str(authorized).lower()}")
        if not authorized:
            shares = sss.ShareBundle.from_json(_read_json(args.bundle)).shares if args.bundle else None
            print(f"perfect={str(sss.perfectness_check(inst, members, shares)).lower()}")
    return 0


COMMANDS = {"params": cmd_params, "build": cmd_build, "verify": cmd_verify, "sss": cmd_sss}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except MathError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ResourceError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
