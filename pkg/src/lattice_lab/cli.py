"""Command-line entry point covering every pipeline stage.

Machine-readable results go to stdout, diagnostics to stderr. Exit codes:
0 success (a solver timeout is a result, not a failure), 1 domain errors,
2 usage errors. Basis text flows through stdin/stdout so the stages
compose as a shell pipeline:

    lattice-lab gen --family uniform --n 8 --seed 1 \
        | lattice-lab reduce --algo lll \
        | lattice-lab svp --budget 60
"""

import argparse
import json
import sys
from fractions import Fraction

from . import bench, lwe, profiles
from .basis import format_basis, parse_basis
from .errors import LatticeLabError
from .families import LatticeFamily, gen_basis
from .reduction import ReductionParams, bkz, lll
from .solver import Budget, enumerate_svp


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok != ""]


def _parse_lwe_params(text: str) -> lwe.LweParams:
    parts = _parse_int_list(text)
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected --params n,q,m,eta")
    return lwe.LweParams(n=parts[0], q=parts[1], m=parts[2], eta=parts[3])


def _read_basis(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    return parse_basis(text)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lattice-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded basis")
    p.add_argument("--family", required=True, choices=["uniform", "qary", "circulant"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--bits", type=int, default=30)
    p.add_argument("--q", type=int, default=12289)

    p = sub.add_parser("reduce", help="reduce a basis (text on stdin or --in)")
    p.add_argument("--algo", required=True, choices=["lll", "bkz"])
    p.add_argument("--delta", type=_parse_fraction, default=Fraction(99, 100))
    p.add_argument("--beta", type=int, default=2)
    p.add_argument("--max-rounds", type=int, default=64)
    p.add_argument("--in", dest="infile", default=None)

    p = sub.add_parser("svp", help="exact shortest vector of a basis")
    p.add_argument("--budget", type=float, default=3600.0)
    p.add_argument("--in", dest="infile", default=None)

    p = sub.add_parser("lwe", help="toy LWE operations")
    lw = p.add_subparsers(dest="lwe_command", required=True)

    k = lw.add_parser("keygen")
    k.add_argument("--params", type=_parse_lwe_params, default=lwe.LweParams())
    k.add_argument("--seed", required=True, type=int)
    k.add_argument("--key", default=None, help="output path (default stdout)")

    e = lw.add_parser("encrypt")
    e.add_argument("--key", required=True)
    e.add_argument("--bit", required=True, type=int, choices=[0, 1])
    e.add_argument("--seed", required=True, type=int)
    e.add_argument("--ct", default=None, help="output path (default stdout)")

    d = lw.add_parser("decrypt")
    d.add_argument("--key", required=True)
    d.add_argument("--ct", required=True)

    a = lw.add_parser("attack")
    a.add_argument("--key", required=True)
    a.add_argument("--budget", type=float, default=3600.0)

    p = sub.add_parser("bench", help="run a benchmark grid, write CSV")
    p.add_argument("--families", required=True, help="comma list: uniform,qary,circulant")
    p.add_argument("--dims", required=True, type=_parse_int_list)
    p.add_argument("--seeds", required=True, type=_parse_int_list)
    p.add_argument("--algos", required=True, help="comma list: lll,bkz,ekz")
    p.add_argument("--budget", type=float, default=3600.0)
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true", help="also write a JSON mirror next to the CSV")
    p.add_argument("--bits", type=int, default=30)
    p.add_argument("--q", type=int, default=12289)
    p.add_argument("--delta", type=_parse_fraction, default=Fraction(99, 100))
    p.add_argument("--beta", type=int, default=2)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("validate", help="find the exact-solver timeout threshold")
    p.add_argument("--family", required=True, choices=["uniform", "qary", "circulant"])
    p.add_argument("--dims", required=True, type=_parse_int_list)
    p.add_argument("--seeds", required=True, type=_parse_int_list)
    p.add_argument("--budget", type=float, default=3600.0)
    p.add_argument("--bits", type=int, default=30)
    p.add_argument("--q", type=int, default=12289)
    p.add_argument("--out", default=None, help="optional CSV path for the scanned records")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("profile", help="interpretive security profiles")
    pr = p.add_subparsers(dest="profile_command", required=True)
    s = pr.add_parser("show")
    s.add_argument("name")
    pr.add_parser("export")

    return parser


def _cmd_gen(args) -> int:
    family = LatticeFamily(kind=args.family, bits=args.bits, q=args.q)
    sys.stdout.write(format_basis(gen_basis(family, args.n, args.seed)))
    return 0


def _cmd_reduce(args) -> int:
    basis = _read_basis(args.infile)
    params = ReductionParams(delta=args.delta, beta=args.beta, max_rounds=args.max_rounds)
    report = lll(basis, params) if args.algo == "lll" else bkz(basis, params)
    sys.stdout.write(format_basis(report.basis))
    sys.stderr.write(json.dumps(report.to_dict()) + "\n")
    return 0


def _cmd_svp(args) -> int:
    basis = _read_basis(args.infile)
    result = enumerate_svp(basis, Budget(wall_time_s=args.budget))
    sys.stdout.write(json.dumps(result.to_dict()) + "\n")
    return 0


def _cmd_lwe(args) -> int:
    if args.lwe_command == "keygen":
        kp = lwe.lwe_keygen(args.params, args.seed)
        _emit(args.key, lwe.keypair_to_json(kp))
        return 0
    kp = lwe.keypair_from_json(_read_text(args.key))
    if args.lwe_command == "encrypt":
        ct = lwe.lwe_encrypt(kp.params, kp.public, args.bit, args.seed)
        _emit(args.ct, lwe.ciphertext_to_json(ct))
        return 0
    if args.lwe_command == "decrypt":
        ct = lwe.ciphertext_from_json(_read_text(args.ct))
        bit = lwe.lwe_decrypt(kp.params, kp.secret, ct)
        sys.stdout.write(json.dumps({"bit": bit}) + "\n")
        return 0
    result = lwe.lwe_embedding_attack(kp.params, kp.public, Budget(wall_time_s=args.budget))
    sys.stdout.write(json.dumps(result.to_dict()) + "\n")
    return 0


def _cmd_bench(args) -> int:
    families = [
        LatticeFamily(kind=kind, bits=args.bits, q=args.q)
        for kind in args.families.split(",")
        if kind
    ]
    algos = [a for a in args.algos.split(",") if a]
    params = ReductionParams(delta=args.delta, beta=args.beta)
    cases = bench.build_grid(
        families, args.dims, args.seeds, algos, Budget(wall_time_s=args.budget), params
    )
    json_path = args.out.rsplit(".", 1)[0] + ".json" if args.json else None
    records = bench.run_suite(cases, args.out, json_path=json_path, workers=args.workers)
    summary = {
        "cases": len(records),
        "ok": sum(r.status == "ok" for r in records),
        "timeout": sum(r.status == "timeout" for r in records),
        "error": sum(r.status == "error" for r in records),
        "csv": args.out,
    }
    if json_path:
        summary["json"] = json_path
    sys.stdout.write(json.dumps(summary) + "\n")
    return 0


def _cmd_validate(args) -> int:
    family = LatticeFamily(kind=args.family, bits=args.bits, q=args.q)
    report, _records = bench.find_threshold(
        family,
        args.dims,
        args.seeds,
        Budget(wall_time_s=args.budget),
        workers=args.workers,
        csv_path=args.out,
    )
    sys.stdout.write(json.dumps(report.to_dict()) + "\n")
    return 0


def _cmd_profile(args) -> int:
    registry = profiles.builtin_registry()
    if args.profile_command == "show":
        profile = profiles.profile_of(registry, args.name)
        sys.stdout.write(profiles.export_profiles({profile.scheme: profile}))
        return 0
    sys.stdout.write(profiles.export_profiles(registry))
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "svp": _cmd_svp,
    "lwe": _cmd_lwe,
    "bench": _cmd_bench,
    "validate": _cmd_validate,
    "profile": _cmd_profile,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (LatticeLabError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
