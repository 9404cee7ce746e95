"""Command-line front end.

Exit codes: 0 success, 1 verification failure or guard violation, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import formulas as fm
from . import guards
from .enumerators import (
    count_by_height_fix,
    count_odci_profile,
    count_odci_profile_fix,
    count_with_image,
    enumerate_direct,
    enumerate_filtered,
)
from .kernels import DIRECT_FAMILIES
from .pmap import FamilyId
from .verify import SEQUENCES, check_sequence, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILY_CHOICES = [f.value for f in FamilyId]

# name -> (callable, parameter names in call order)
FORMULAS = {
    "binom": (fm.binom, ("n", "k")),
    "fibonacci": (fm.fibonacci, ("n",)),
    "compositions-positive": (fm.compositions_positive, ("n", "p")),
    "compositions-nonneg": (fm.compositions_nonneg, ("n", "p")),
    "oci-height": (fm.oci_height_count, ("n", "p")),
    "oci-height-fix": (fm.oci_height_fix_count, ("n", "p", "m")),
    "oci-image-class": (fm.oci_image_class_count, ("n", "p", "q")),
    "odci-height": (fm.odci_height_count, ("n", "p")),
    "odci-height-fix": (fm.odci_height_fix_count, ("n", "p", "m")),
    "odci-profile": (fm.odci_profile_count, ("n", "k_minus", "k_plus", "l_plus", "p")),
    "odci-profile-fix": (
        fm.odci_profile_fix_count,
        ("n", "k_minus", "k_plus", "l_plus", "m", "p"),
    ),
    "orci-height": (fm.orci_height_count, ("n", "p")),
    "orci-height-fix": (fm.orci_height_fix_count, ("n", "p", "m")),
    "orci-height-fix-printed": (fm.orci_height_fix_count_printed, ("n", "p", "m")),
    "ociplus-one-fix": (fm.ociplus_one_fix_count, ("n", "p")),
    "order-oci": (fm.order_oci, ("n",)),
    "order-odci": (fm.order_odci, ("n",)),
    "order-orci": (fm.order_orci, ("n",)),
    "fib-odd": (fm.fib_identity_odd, ("n",)),
    "fib-even": (fm.fib_identity_even, ("n",)),
}


class UsageError(Exception):
    pass


def _image_arg(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"image must be comma-separated integers, got {text!r}")


def _profile_arg(text):
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("profile must look like k-:k+:l+:p")
    try:
        return tuple(int(x) for x in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"profile entries must be integers, got {text!r}")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def cmd_enumerate(args) -> int:
    family = FamilyId.parse(args.family)
    if family.value in DIRECT_FAMILIES and args.method != "filtered":
        stream = enumerate_direct(args.n, family, allow_large=args.allow_large)
    else:
        stream = enumerate_filtered(args.n, family, allow_large=args.allow_large)
    with _output(args.out) as out:
        for alpha in stream:
            out.write(alpha.notation() + "\n")
    return EXIT_OK


def _emit_scalar(out, value, fmt, label="count"):
    if fmt == "json":
        out.write(json.dumps({label: str(value)}) + "\n")
    elif fmt == "csv":
        out.write(f"{label}\n{value}\n")
    else:
        out.write(f"{value}\n")


def cmd_count(args) -> int:
    family = FamilyId.parse(args.family)
    with _output(args.out) as out:
        if args.image is not None:
            if family is not FamilyId.OCI:
                raise UsageError("--image counts are defined for --family oci only")
            _emit_scalar(out, count_with_image(args.n, args.image), args.format)
            return EXIT_OK
        if args.profile is not None:
            if family is not FamilyId.ODCI:
                raise UsageError("--profile counts are defined for --family odci only")
            km, kp, lp, p = args.profile
            if args.m is None:
                value = count_odci_profile(args.n, km, kp, lp, p)
            else:
                value = count_odci_profile_fix(args.n, km, kp, lp, args.m, p)
            _emit_scalar(out, value, args.format)
            return EXIT_OK

        table = count_by_height_fix(
            args.n,
            family,
            method=args.method,
            workers=args.workers,
            allow_large=args.allow_large,
        )
        if args.by == "height":
            table = table.by_height()
            if args.p is not None:
                table.cells = {k: v for k, v in table.cells.items() if k[0] == args.p}
        else:
            table.cells = {
                k: v
                for k, v in table.cells.items()
                if (args.p is None or k[0] == args.p) and (args.m is None or k[1] == args.m)
            }
        if args.format == "csv":
            out.write(table.to_csv())
        elif args.format == "json":
            out.write(table.to_json())
        else:
            out.write(table.to_text())
    return EXIT_OK


def cmd_formula(args) -> int:
    if args.name not in FORMULAS:
        raise UsageError(f"unknown formula {args.name!r}; known: {', '.join(sorted(FORMULAS))}")
    fn, params = FORMULAS[args.name]
    values = dict(n=args.n, k=args.k, p=args.p, m=args.m, q=args.q)
    if args.profile is not None:
        values.update(zip(("k_minus", "k_plus", "l_plus", "p"), args.profile))
    missing = [name for name in params if values.get(name) is None]
    if missing:
        flags = ", ".join("--profile" if m in ("k_minus", "k_plus", "l_plus") else f"--{m}"
                          for m in missing)
        raise UsageError(f"formula {args.name} needs {flags}")
    with _output(args.out) as out:
        if args.all_methods:
            if args.name != "order-oci":
                raise UsageError("--all-methods applies to order-oci only")
            for method in fm.ORDER_OCI_METHODS:
                out.write(f"{method}\t{fm.order_oci(args.n, method)}\n")
            return EXIT_OK
        out.write(f"{fn(*(values[name] for name in params))}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.max_n_filtered, args.max_n_direct, samples=args.samples, seed=args.seed)
    text = report.to_text(timing=args.timing)
    if args.out:
        with _output(args.out) as out:
            out.write(text)
    s = report.summary()
    print(
        f"verify: checks={s['checks']} records={s['records']} pass={s['pass']} "
        f"fail={s['fail']} documented_mismatch={s['documented_mismatch']}"
    )
    for cid, why in sorted(report.explanations.items()):
        print(f"documented mismatch {cid}: {why}")
    for r in report.failures[:20]:
        print(f"FAIL {r.check_id} {r.point}: formula={r.formula} oracle={r.oracle}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_sequence(args) -> int:
    if args.name not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.name!r}; known: {', '.join(sorted(SEQUENCES))}")
    report = check_sequence(args.name, args.n)
    entry = SEQUENCES[args.name]
    with _output(args.out) as out:
        out.write(f"# {entry.name}: {entry.anchor}\n")
        for r in report.records:
            out.write(f"{r.point[0]}\t{r.point[1]}\t{r.formula}\t{r.oracle}\t{r.status}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contraction-semigroups",
        description="Enumerate and count partial injective contractions of the chain 1..n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=True):
        p.add_argument("--n", type=_positive, required=n_required)
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("enumerate", help="list every map of a family, one per line")
    common(p)
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--method", choices=["auto", "filtered"], default="auto")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="exact count tables")
    common(p)
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--by", choices=["height", "height-fix"], default="height")
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--image", type=_image_arg)
    p.add_argument("--profile", type=_profile_arg, help="k-:k+:l+:p (odci only)")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--method", choices=["auto", "direct", "filtered"], default="auto")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("formula", help="evaluate a closed form exactly")
    p.add_argument("name", help="one of: " + ", ".join(sorted(FORMULAS)))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--profile", type=_profile_arg)
    p.add_argument("--all-methods", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="run the formula-vs-oracle suite")
    p.add_argument("--max-n-filtered", type=int, default=6)
    p.add_argument("--max-n-direct", type=int, default=10)
    p.add_argument("--samples", type=_positive, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="add wall times to the report")
    p.add_argument("--out", help="report path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="check a registered integer sequence prefix")
    p.add_argument("name", help="one of: " + ", ".join(sorted(SEQUENCES)))
    p.add_argument("--n", type=int, default=10, help="largest index checked")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except guards.GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
