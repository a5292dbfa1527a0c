"""Command-line interface.

Subcommands: fig1, fig2, fig3, sweep, selftest. Shared flags override the
optional --config file (flat key = value lines); the config file overrides
the built-in defaults, which mirror the canonical study: L=8, J=1, mu=1.5,
lambda=1, 100 samples, t = 0..100 step 1, tau=20, extensive measure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import XXZChaosError
from .ensemble import EnsembleConfig, time_grid
from .experiments import (
    RunConfig,
    fig1_variants,
    lambda_variants,
    run_fig1,
    run_fig2,
    run_fig3,
    run_selftest,
    run_sweep,
)
from .hamiltonian import ChainParams
from .reporting import read_key_value

DEFAULTS = {
    "seed": 42,
    "samples": 100,
    "size": 8,
    "mu": 1.5,
    "lambda": 1.0,
    "tmax": 100.0,
    "tau": 20.0,
    "dt": 1.0,
    "exchange": 1.0,
    "use_extensive": True,
    "no_svg": False,
    "out": None,
}

FIG2_LAMBDAS = "0.5,2.0,4.0"
FIG3_LAMBDAS = "0.5,1.0,2.0,3.0,4.0"


def _parse_bool(raw: str) -> bool:
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"cannot parse boolean from {raw!r}")


def _parse_floats(raw: str) -> list[float]:
    return [float(part) for part in raw.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="flat key = value file; flags win")
    common.add_argument("--seed", type=int, help="ensemble seed")
    common.add_argument("--samples", type=int, help="Haar samples per trajectory")
    common.add_argument("--size", type=int, help="chain length L")
    common.add_argument("--mu", type=float, help="Sz-Sz anisotropy")
    common.add_argument("--lambda", dest="lam", type=float, help="NNN coupling weight")
    common.add_argument("--tmax", type=float, help="last grid time")
    common.add_argument("--tau", type=float, help="stabilization cutoff")
    common.add_argument("--dt", type=float, help="grid spacing")
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument(
        "--no-svg", action="store_true", default=None, help="skip figure rendering"
    )

    parser = argparse.ArgumentParser(
        prog="xxzchaos",
        description="Multipartite entanglement generation in coupled NN/NNN XXZ chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "fig1", parents=[common], help="NN, NNN, and coupled trajectories at one lambda"
    )
    fig2 = sub.add_parser(
        "fig2", parents=[common], help="coupled trajectories across lambdas"
    )
    fig2.add_argument("--lambdas", help=f"comma-separated (default {FIG2_LAMBDAS})")
    fig3 = sub.add_parser(
        "fig3", parents=[common], help="oscillation ratio gamma vs lambda"
    )
    fig3.add_argument("--lambdas", help=f"comma-separated (default {FIG3_LAMBDAS})")
    sweep = sub.add_parser(
        "sweep", parents=[common], help="trajectory + gamma per value of one axis"
    )
    sweep.add_argument("--axis", required=True, help="lambda, mu, L, samples, or dt")
    sweep.add_argument("--values", required=True, help="comma-separated values")
    sub.add_parser("selftest", parents=[common], help="analytic sanity checks")
    return parser


def _effective(args: argparse.Namespace) -> dict:
    file_cfg = read_key_value(args.config) if args.config else {}
    casts = {
        "seed": int,
        "samples": int,
        "size": int,
        "mu": float,
        "lambda": float,
        "tmax": float,
        "tau": float,
        "dt": float,
        "exchange": float,
        "use_extensive": _parse_bool,
        "no_svg": _parse_bool,
        "out": Path,
    }
    flag_names = {"lambda": "lam"}
    eff = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, flag_names.get(key, key), None)
        if flag is not None:
            eff[key] = flag
        elif key in file_cfg:
            eff[key] = casts[key](file_cfg[key])
        else:
            eff[key] = default
    return eff


def _run_config(eff: dict, command: str, variantset) -> RunConfig:
    chain = ChainParams(
        num_sites=eff["size"],
        mu=eff["mu"],
        lam=eff["lambda"],
        exchange=eff["exchange"],
    )
    ensemble = EnsembleConfig(
        num_samples=eff["samples"],
        seed=eff["seed"],
        times=time_grid(eff["tmax"], eff["dt"]),
        tau=eff["tau"],
        use_extensive=eff["use_extensive"],
    )
    out = eff["out"] if eff["out"] is not None else Path("runs") / command
    return RunConfig(
        chain=chain,
        variantset=variantset,
        ensemble=ensemble,
        output_dir=out,
        emit_svg=not eff["no_svg"],
    )


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "selftest":
        checks = run_selftest()
        failed = [name for name, ok in checks if not ok]
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        return 1 if failed else 0

    eff = _effective(args)
    if args.command == "fig1":
        cfg = _run_config(eff, "fig1", fig1_variants(eff["lambda"]))
        manifest = run_fig1(cfg)
    elif args.command == "fig2":
        lambdas = _parse_floats(args.lambdas or FIG2_LAMBDAS)
        cfg = _run_config(eff, "fig2", lambda_variants(lambdas))
        manifest = run_fig2(cfg)
    elif args.command == "fig3":
        lambdas = _parse_floats(args.lambdas or FIG3_LAMBDAS)
        cfg = _run_config(eff, "fig3", lambda_variants(lambdas))
        manifest = run_fig3(cfg, lambdas)
    else:
        cfg = _run_config(eff, "sweep", ())
        manifest = run_sweep(cfg, args.axis, _parse_floats(args.values))
    print(f"wrote {manifest.path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except XXZChaosError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: invalid-argument: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io-failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
