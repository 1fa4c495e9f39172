"""Command-line entry point: ``quasicap {verify,sweep,thresholds,channel}``.

Exit codes: 0 success, 1 a verification claim failed, 2 bad usage or parameters,
3 an output file could not be written.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from quasicap import capacity, channels, joint, separability, verify, zoo
from quasicap.errors import QuasiCapError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
SWEEP_FIELDS = ("omega", "raw_capacity", "gated_capacity", "remote_min_pt_eig", "local_min_pt_eig")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt9(x: float) -> str:
    """Fixed nine-decimal rendering with negative zero folded to ``0.000000000``."""
    return f"{round(x, 9) + 0.0:.9f}"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def sweep_csv(records: Sequence[joint.SweepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_FIELDS)
    for rec in records:
        writer.writerow([fmt9(getattr(rec, f)) for f in SWEEP_FIELDS])
    return buf.getvalue()


def sweep_json(records: Sequence[joint.SweepRecord]) -> str:
    return json.dumps([r.as_dict() for r in records], indent=2) + "\n"


def cmd_verify(args) -> int:
    claims = verify.run_claims(seed=args.seed)
    for c in claims:
        print(c.line())
    report = verify.report_json(claims)
    s = report["summary"]
    print(f"{s['PASS']} passed, {s['FAIL']} failed, {s['DISCREPANCY']} discrepancies")
    if args.json:
        _write(json.dumps(report, indent=2) + "\n", args.json)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_sweep(args) -> int:
    records = joint.sweep(args.omega_min, args.omega_max, args.steps, args.n_clones)
    text = sweep_csv(records) if args.format == "csv" else sweep_json(records)
    _write(text, args.out)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    if args.n_clones != 2:
        print(f"error: thresholds are only available for --n-clones 2, got {args.n_clones}", file=sys.stderr)
        return EXIT_USAGE
    rows = [
        ("remote", joint.remote_family, joint.WINDOW.lower, "1/2 - sqrt(39)/16"),
        ("local", joint.local_family, joint.LOCAL_THRESHOLD, "1/2 - sqrt(48)/16"),
    ]
    for name, family, exact, form in rows:
        root = separability.entanglement_threshold(family, 0.0, 0.4)
        print(f"{name} = {root:.9f}")
        print(f"  closed form {form} = {exact:.9f}")
        print(f"  bisection residual = {abs(root - exact):.3e}")
    print(f"window = [{joint.WINDOW.lower:.9f}, {joint.WINDOW.upper:.9f})")
    return EXIT_OK


def _describe(ch: channels.KrausChannel) -> list[str]:
    report = channels.validate_cptp(ch)
    return [
        f"channel: {ch.name}",
        f"input dim: {ch.in_dim}",
        f"output dim: {ch.out_dim}",
        f"kraus operators: {len(ch)}",
        f"cptp residual: {report.completeness_residual:.3e}",
    ]


def cmd_channel(args) -> int:
    name = args.name
    if name == "depolarizing":
        params = zoo.DepolarizingParams(args.d, args.p)
        ch = zoo.depolarizing(params)
        lines = _describe(ch)
        lines.append(f"capacity: {fmt9(capacity.depolarizing_capacity(params))}")
        lines.append(f"min output entropy: {fmt9(capacity.min_output_entropy(ch, seed=args.seed))}")
    elif name == "cloner":
        ch, _, cp = zoo.cloner(args.n)
        lines = _describe(ch)
        lines.append(f"environment dim: {cp.n_clones}")
        lines.append(f"fidelity: {zoo.clone_fidelity(args.n):.6f}")
        lines.append(f"capacity (pure input): {fmt9(capacity.cloner_capacity_zero_noise(args.n))}")
        lines.append(f"capacity (maximally mixed input): {fmt9(capacity.cloner_mutual_info(args.n, 0.5).value)}")
    elif name == "cloner-complementary":
        ch = zoo.cloner_complementary(args.n)
        lines = _describe(ch)
        lines.append(f"min output entropy: {fmt9(capacity.min_output_entropy(ch, seed=args.seed))}")
    else:
        single = channels.concatenate(zoo.cloner_kraus(2), zoo.depolarizing(zoo.DepolarizingParams(2, 1.0)))
        ch = channels.tensor(single, single)
        lines = _describe(ch)
        lines.append(f"product-basis chi: {fmt9(capacity.basis_ensemble_chi(ch).value)}")
        best = joint.quasi_capacity(joint.AuxiliaryInput(joint.WINDOW.lower))
        lines.append(f"window: [{joint.WINDOW.lower:.9f}, {joint.WINDOW.upper:.9f})")
        lines.append(f"max gated capacity: {fmt9(best.gated_capacity)}")
    print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasicap", description="Channel capacities of clone-and-depolarize constructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="recompute every published claim")
    p.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="capacity curve over omega")
    p.add_argument("--omega-min", type=float, default=0.0)
    p.add_argument("--omega-max", type=float, default=0.5)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--n-clones", type=int, default=2)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("thresholds", help="entanglement thresholds by bisection")
    p.add_argument("--n-clones", type=int, default=2)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("channel", help="summarise one channel")
    p.add_argument("name", choices=("depolarizing", "cloner", "cloner-complementary", "joint"))
    p.add_argument("--d", type=int, default=2, help="qudit dimension (depolarizing)")
    p.add_argument("--p", type=float, default=1.0, help="mixing probability (depolarizing)")
    p.add_argument("--n", type=int, default=2, help="number of clones")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_channel)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except QuasiCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
