"""Command-line experiment runner.

Each subcommand writes plain CSV (and PGM P2 for stability maps) into the
output directory.  Runs are deterministic: identical flags produce
byte-identical files, regardless of thread count.  Exit codes: 0 on
success, 2 for flag/config errors, 3 for numerical failures.
"""

import argparse
import math
import sys
from pathlib import Path

from .errors import WaveboundError
from .estimators import STANDARD_TESTS, estimator_table, write_estimator_table_csv
from .euler import PrimitiveState, RiemannProblem
from .schemes1d import (
    BetaKind,
    BetaSpec,
    PerturbationSpec,
    advect_square_wave,
    stability_limit,
    write_norms_csv,
    write_profile_csv,
)
from .vonneumann import (
    DEFAULT_ANGLE_RESOLUTION,
    DEFAULT_C_RESOLUTION,
    DEFAULT_GRID_RESOLUTION,
    DEFAULT_TOLERANCE,
    region_area,
    stability_limit_1d_numeric,
    stability_map_2d,
    stability_map_2d_force_alpha,
    write_map_csv,
    write_map_pgm,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_SCHEME_NAMES = [k.value for k in BetaKind if k not in (BetaKind.CONSTANT, BetaKind.FORCE_ALPHA)]

_PROBLEM_KEYS = ("rho_l", "u_l", "p_l", "rho_r", "u_r", "p_r")


class ConfigError(ValueError):
    pass


def parse_problem_config(text: str, gamma: float):
    """Parse blank-line-separated key=value blocks into Riemann problems.

    Keys per block: rho_l, u_l, p_l, rho_r, u_r, p_r and an optional label.
    '#' starts a comment.
    """
    blocks: list[dict] = []
    current: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if current:
                blocks.append(current)
                current = {}
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in current:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if key == "label":
            current[key] = value
        elif key in _PROBLEM_KEYS:
            try:
                current[key] = float(value)
            except ValueError:
                raise ConfigError(f"line {lineno}: {key} is not a number: {value!r}") from None
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    if current:
        blocks.append(current)
    if not blocks:
        raise ConfigError("config lists no Riemann problems")

    problems, labels = [], []
    for n, block in enumerate(blocks, start=1):
        missing = [k for k in _PROBLEM_KEYS if k not in block]
        if missing:
            raise ConfigError(f"problem {n}: missing keys {', '.join(missing)}")
        try:
            problems.append(
                RiemannProblem(
                    left=PrimitiveState(block["rho_l"], block["u_l"], block["p_l"]),
                    right=PrimitiveState(block["rho_r"], block["u_r"], block["p_r"]),
                    gamma=gamma,
                )
            )
        except ValueError as exc:
            raise ConfigError(f"problem {n}: {exc}") from None
        labels.append(block.get("label", str(n)))
    return problems, labels


def _out_dir(args) -> Path:
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _float_list(text: str) -> list[float]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    return [float(part) for part in items]


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def cmd_riemann_table(args) -> int:
    if args.config is not None:
        text = Path(args.config).read_text()
        problems, labels = parse_problem_config(text, args.gamma)
    elif args.gamma != 1.4:
        problems = [
            RiemannProblem(rp.left, rp.right, args.gamma) for rp in STANDARD_TESTS
        ]
        labels = None
    else:
        problems, labels = list(STANDARD_TESTS), None
    rows = estimator_table(problems, labels=labels)
    out = _out_dir(args) / "riemann_table.csv"
    with out.open("w") as fh:
        write_estimator_table_csv(rows, fh)
    print(out)
    return EXIT_OK


def cmd_advect1d(args) -> int:
    if args.beta < 0:
        raise ConfigError(f"--beta must be >= 0, got {args.beta}")
    if args.courant <= 0:
        raise ConfigError(f"--courant must be > 0, got {args.courant}")
    if args.t_out < 0:
        raise ConfigError(f"--t-out must be >= 0, got {args.t_out}")
    if args.n_cells < 1:
        raise ConfigError(f"--n-cells must be >= 1, got {args.n_cells}")
    run = advect_square_wave(args.n_cells, args.beta, args.courant, args.t_out)
    out = _out_dir(args)
    with (out / "profile.csv").open("w") as fh:
        write_profile_csv(run, fh)
    with (out / "norms.csv").open("w") as fh:
        write_norms_csv(run, fh)
    print(out / "profile.csv")
    print(out / "norms.csv")
    return EXIT_OK


def _beta_curve_specs(alphas):
    named = [
        ("beta_LW", BetaSpec.named("lax_wendroff")),
        ("beta_GU", BetaSpec.named("upwind")),
        ("beta_FO", BetaSpec.named("force")),
        ("beta_LF", BetaSpec.named("lax_friedrichs")),
        ("beta_GC", BetaSpec.named("godunov_centred")),
        ("beta_FTCS", BetaSpec.named("ftcs")),
    ]
    for alpha in alphas:
        named.append((f"beta_FA_{_fmt(alpha)}", BetaSpec.force_alpha(alpha)))
    return named


def cmd_beta_curves(args) -> int:
    if args.samples < 1:
        raise ConfigError(f"--samples must be >= 1, got {args.samples}")
    alphas = _float_list(args.alphas)
    specs = _beta_curve_specs(alphas)
    out = _out_dir(args) / "beta_curves.csv"
    with out.open("w") as fh:
        fh.write("c," + ",".join(name for name, _ in specs) + "\n")
        for k in range(1, args.samples + 1):
            c = k / args.samples
            row = [_fmt(c)] + [_fmt(spec.beta(c)) for _, spec in specs]
            fh.write(",".join(row) + "\n")
    print(out)
    return EXIT_OK


def cmd_stability1d(args) -> int:
    entries = []  # (kind, param, spec)
    for name in args.scheme or []:
        if name not in _SCHEME_NAMES:
            raise ConfigError(f"unknown scheme {name!r}; choose from {_SCHEME_NAMES}")
        entries.append((name, math.nan, BetaSpec.named(name)))
    for beta in _float_list(args.beta):
        entries.append(("constant", beta, BetaSpec.constant(beta)))
    for eps in _float_list(args.under):
        entries.append(("under", eps, PerturbationSpec.under(eps)))
    for eps in _float_list(args.over):
        entries.append(("over", eps, PerturbationSpec.over(eps)))
    for alpha in _float_list(args.alpha):
        entries.append(("force_alpha", alpha, BetaSpec.force_alpha(alpha)))
    if args.epsilon_grid:
        if args.epsilon_grid < 2:
            raise ConfigError("--epsilon-grid needs at least 2 samples")
        for k in range(args.epsilon_grid):
            eps = k / (args.epsilon_grid - 1)
            entries.append(("under", eps, PerturbationSpec.under(eps)))
            entries.append(("over", eps, PerturbationSpec.over(eps)))
    if not entries:
        for name in _SCHEME_NAMES:
            entries.append((name, math.nan, BetaSpec.named(name)))
        for alpha in (1.0, 2.0, 3.0, 4.0, 5.0):
            entries.append(("force_alpha", alpha, BetaSpec.force_alpha(alpha)))

    out = _out_dir(args) / "stability1d.csv"
    with out.open("w") as fh:
        fh.write("kind,param,c_lim_analytic,c_lim_numeric\n")
        for kind, param, spec in entries:
            numeric = stability_limit_1d_numeric(
                spec,
                c_resolution=args.c_resolution,
                angle_resolution=args.angle_resolution,
            )
            param_text = "" if math.isnan(param) else _fmt(param)
            fh.write(
                f"{kind},{param_text},{_fmt(stability_limit(spec))},{_fmt(numeric)}\n"
            )
    print(out)
    return EXIT_OK


def cmd_stability2d(args) -> int:
    betas = _float_list(args.betas)
    alphas = _float_list(args.alphas)
    if not betas and not alphas:
        raise ConfigError("nothing to do: give --betas and/or --alphas")
    out = _out_dir(args)
    areas = []  # (label, fraction)
    for beta in betas:
        smap = stability_map_2d(
            beta,
            cx_max=args.c_max,
            cy_max=args.c_max,
            grid_n=args.grid_n,
            angle_n=args.angle_n,
            tol=args.tol,
            threads=args.threads,
        )
        stem = f"stability2d_beta_{_fmt(beta)}"
        _write_map(out, stem, smap)
        areas.append((_fmt(beta), region_area(smap)))
    for alpha in alphas:
        smap = stability_map_2d_force_alpha(
            alpha,
            cx_max=args.c_max,
            cy_max=args.c_max,
            grid_n=args.grid_n,
            angle_n=args.angle_n,
            tol=args.tol,
            threads=args.threads,
        )
        stem = f"stability2d_force_alpha_{_fmt(alpha)}"
        _write_map(out, stem, smap)
        areas.append((f"force_alpha_{_fmt(alpha)}", region_area(smap)))

    with (out / "areas.csv").open("w") as fh:
        fh.write("beta,area_fraction\n")
        for label, fraction in areas:
            fh.write(f"{label},{_fmt(fraction)}\n")
    print(out / "areas.csv")
    return EXIT_OK


def _write_map(out: Path, stem: str, smap) -> None:
    with (out / f"{stem}.csv").open("w") as fh:
        write_map_csv(smap, fh)
    with (out / f"{stem}.pgm").open("w") as fh:
        write_map_pgm(smap, fh)
    print(out / f"{stem}.csv")
    print(out / f"{stem}.pgm")


def cmd_force_alpha(args) -> int:
    alphas = _float_list(args.alphas)
    if not alphas:
        raise ConfigError("--alphas lists no values")
    if args.samples < 1:
        raise ConfigError(f"--samples must be >= 1, got {args.samples}")
    out = _out_dir(args)

    curves = out / "force_alpha_curves.csv"
    with curves.open("w") as fh:
        fh.write("c," + ",".join(f"beta_FA_{_fmt(a)}" for a in alphas) + "\n")
        for k in range(1, args.samples + 1):
            c = k / args.samples
            row = [_fmt(c)] + [_fmt(BetaSpec.force_alpha(a).beta(c)) for a in alphas]
            fh.write(",".join(row) + "\n")

    limits = out / "force_alpha_limits.csv"
    with limits.open("w") as fh:
        fh.write("alpha,c_lim_analytic,c_lim_numeric\n")
        for alpha in alphas:
            spec = BetaSpec.force_alpha(alpha)
            numeric = stability_limit_1d_numeric(
                spec,
                c_resolution=args.c_resolution,
                angle_resolution=args.angle_resolution,
            )
            fh.write(f"{_fmt(alpha)},{_fmt(stability_limit(spec))},{_fmt(numeric)}\n")
    print(curves)
    print(limits)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavebound",
        description="Wave-speed estimates, monotonicity and stability experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("riemann-table", help="wave-speed estimator comparison table")
    p.add_argument("--config", help="problem definition file (default: built-in tests)")
    p.add_argument("--gamma", type=float, default=1.4)
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_riemann_table)

    p = sub.add_parser("advect1d", help="periodic square-wave advection run")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--courant", type=float, required=True)
    p.add_argument("--t-out", type=float, required=True)
    p.add_argument("--n-cells", type=int, default=100)
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_advect1d)

    p = sub.add_parser("beta-curves", help="beta(c) curves of the classical schemes")
    p.add_argument("--samples", type=int, default=100, help="c sampled at k/samples")
    p.add_argument("--alphas", default="2,3,4,5", help="comma list, may be empty")
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_beta_curves)

    p = sub.add_parser("stability1d", help="numeric vs analytic 1D stability limits")
    p.add_argument("--scheme", action="append", metavar="NAME",
                   help=f"named scheme, one of: {', '.join(_SCHEME_NAMES)}")
    p.add_argument("--beta", default="", help="comma list of constant multipliers")
    p.add_argument("--under", default="", help="comma list of underestimate epsilons")
    p.add_argument("--over", default="", help="comma list of overestimate epsilons")
    p.add_argument("--alpha", default="", help="comma list of FORCE-alpha parameters")
    p.add_argument("--epsilon-grid", type=int, default=0,
                   help="add under/over rows for N epsilons uniform on [0, 1]")
    p.add_argument("--c-resolution", type=int, default=DEFAULT_C_RESOLUTION)
    p.add_argument("--angle-resolution", type=int, default=DEFAULT_ANGLE_RESOLUTION)
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_stability1d)

    p = sub.add_parser("stability2d", help="2D stability-region maps")
    p.add_argument("--betas", default="1.25,1.5,1.75,0.75,0.5,0.25")
    p.add_argument("--alphas", default="", help="FORCE-alpha maps, comma list")
    p.add_argument("--grid-n", type=int, default=DEFAULT_GRID_RESOLUTION)
    p.add_argument("--angle-n", type=int, default=DEFAULT_ANGLE_RESOLUTION)
    p.add_argument("--c-max", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--threads", type=int, default=None,
                   help="worker cap (default: WAVEBOUND_THREADS or CPU count)")
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_stability2d)

    p = sub.add_parser("force-alpha", help="FORCE-alpha curves and stability limits")
    p.add_argument("--alphas", default="1,2,3,4,5")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--c-resolution", type=int, default=DEFAULT_C_RESOLUTION)
    p.add_argument("--angle-resolution", type=int, default=DEFAULT_ANGLE_RESOLUTION)
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_force_alpha)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except WaveboundError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
