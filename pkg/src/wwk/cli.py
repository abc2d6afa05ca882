"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 domain error (e.g. a natural basis requested for indistinguishable states).
"""
import argparse
import math
import os
import sys

import numpy as np

from wwk import presets, serialize
from wwk.errors import DomainError, InputError
from wwk.natural import NaturalBasisParams, ensure_dim3, natural_basis
from wwk.oracle import mc_guessing_game
from wwk.readout import canonical_basis, knowledge, phase_sweep, sweep_at

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3

# hand-typed amplitudes such as 0.7071 are rescaled if this close to unit norm
CLI_NORM_TOL = 1e-3


def _complex_arg(text):
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _default_seed():
    raw = os.environ.get("WWK_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"WWK_SEED must be an integer, got {raw!r}") from None


def _add_state_args(p):
    g = p.add_argument_group("detector state")
    g.add_argument("--preset", choices=["two-qubit", "micromaser"], help="built-in detector model")
    g.add_argument("--alpha", type=_complex_arg, help="two-qubit amplitude of |0>, 're' or 're,im'")
    g.add_argument("--beta", type=_complex_arg, help="two-qubit amplitude of |1>, 're' or 're,im'")
    g.add_argument("--theta", type=float, help="micromaser rf-pulse angle in radians, [0, pi/2]")
    g.add_argument("--state", metavar="FILE", help='JSON {"dim", "chi_a", "chi_b"} state file')


def _add_basis_args(p):
    p.add_argument("--basis", choices=["natural", "canonical", "file"], default="canonical")
    p.add_argument("--basis-file", metavar="FILE", help="JSON basis for --basis file")
    p.add_argument("--eta", type=float, default=0.0, help="free phase of the constructed natural basis")
    p.add_argument("--v-phase", type=float, default=0.0, help="free phase of v in the constructed natural basis")


def _load_state(args):
    if args.state and args.preset:
        raise InputError("give either --preset or --state, not both")
    if args.state:
        return serialize.load_pair(args.state), False
    if args.preset == "two-qubit":
        if args.alpha is None or args.beta is None:
            raise InputError("two-qubit preset needs --alpha and --beta")
        n2 = abs(args.alpha) ** 2 + abs(args.beta) ** 2
        if abs(n2 - 1.0) > CLI_NORM_TOL:
            raise InputError(f"|alpha|^2 + |beta|^2 = {n2:.6g}, expected 1")
        s = math.sqrt(n2)
        return presets.two_qubit(args.alpha / s, args.beta / s), True
    if args.preset == "micromaser":
        if args.theta is None:
            raise InputError("micromaser preset needs --theta")
        return presets.micromaser(args.theta), True
    raise InputError("no detector state: use --preset or --state")


def _select_basis(args, pair, is_preset):
    if args.basis == "canonical":
        return pair, canonical_basis(pair)
    if args.basis == "file":
        if not args.basis_file:
            raise InputError("--basis file needs --basis-file")
        return pair, serialize.load_basis(args.basis_file)
    if is_preset:
        return pair, presets.fock_basis(pair)
    pair = ensure_dim3(pair)
    return pair, natural_basis(pair, NaturalBasisParams(eta=args.eta, v_phase=args.v_phase))


def cmd_report(args, out):
    pair, is_preset = _load_state(args)
    pair, basis = _select_basis(args, pair, is_preset)
    rep = knowledge(pair, basis).as_dict()
    rep = {"basis": args.basis, **rep}
    out.write(serialize.dump_json(rep))
    return EXIT_OK


def cmd_sweep(args, out):
    if args.bins < 2:
        raise InputError("--bins must be >= 2")
    pair, is_preset = _load_state(args)
    pair, basis = _select_basis(args, pair, is_preset)
    if args.mc_samples:
        mc = mc_guessing_game(pair, basis, args.bins, args.mc_samples, args.seed)
        out.write(serialize.mc_csv(sweep_at(pair, basis, mc.delta_center), mc))
        return EXIT_OK
    sw = phase_sweep(pair, basis, args.bins)
    out.write(serialize.sweep_csv(sw) if args.format == "csv" else serialize.sweep_json(sw))
    return EXIT_OK


def fig2_rows(k, m, v_max=0.99):
    """Rows ``(delta_over_pi, V, K_N, natural_beats_canonical)`` through preset -> sweep."""
    if k < 2 or m < 2:
        raise InputError("--v-grid and --delta-grid must be >= 2")
    rows = []
    for V in np.linspace(0.0, v_max, k):
        pair = presets.two_qubit(math.sqrt(V), math.sqrt(1.0 - V))
        sw = phase_sweep(pair, presets.fock_basis(pair), m)
        K_E = knowledge(pair, canonical_basis(pair)).knowledge
        for d, K in zip(sw.deltas, sw.K):
            beats = bool(K > K_E + 1e-12)
            rows.append((d / np.pi, float(V), float(K), beats))
    return rows


def cmd_fig2(args, out):
    rows = fig2_rows(args.v_grid, args.delta_grid, args.v_max)
    text = serialize.csv_text(
        ["delta_over_pi", "V", "K_N", "natural_beats_canonical"],
        ([d, V, K, "true" if b else "false"] for d, V, K, b in rows),
    )
    out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    from wwk import suites

    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    if args.suite == "optimality":
        res = suites.optimality(args.seed, args.trials, pairs=args.pairs)
    elif args.suite == "mc":
        res = suites.mc(args.seed, args.trials)
    else:
        res = suites.SUITES[args.suite](args.seed, args.trials)
    status = "PASS" if res.passed else "FAIL"
    out.write(f"{status} suite={res.name} checked={res.checked} seed={args.seed}\n")
    for key in sorted(res.metrics):
        out.write(f"  {key} = {serialize.num(res.metrics[key])}\n")
    for msg in res.failures:
        out.write(f"  failure: {msg}\n")
    return EXIT_OK if res.passed else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wwk",
        description="Which-way knowledge in a symmetric two-way interferometer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="knowledge report (JSON) for one state and readout basis")
    _add_state_args(p)
    _add_basis_args(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sweep", help="phase-resolved table over [0, 2 pi)")
    _add_state_args(p)
    _add_basis_args(p)
    p.add_argument("--bins", type=int, default=64, help="number of phase points")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--mc-samples", type=int, default=0, help="append Monte Carlo columns (CSV only)")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fig2", help="K_N(delta, V) grid in long format")
    p.add_argument("--v-grid", type=int, default=100)
    p.add_argument("--delta-grid", type=int, default=200)
    p.add_argument("--v-max", type=float, default=0.99)
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("verify", help="randomized verification suites")
    p.add_argument("--suite", choices=["duality", "natural", "optimality", "mc"], required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=1000, help="pairs (duality, natural), bases per pair (optimality), samples (mc)")
    p.add_argument("--pairs", type=int, default=200, help="random pairs for the optimality suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    if out is None:
        out = sys.stdout
        if hasattr(out, "reconfigure"):
            out.reconfigure(encoding="utf-8", newline="\n")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args, out)
    except InputError as exc:
        print(f"wwk: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"wwk: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
