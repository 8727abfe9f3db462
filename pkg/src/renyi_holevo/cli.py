"""Command line interface.

Subcommands::

    region   grid of the data-processing region as CSV
    bounds   exponent bounds for pure binary channels as CSV
    fuzz     randomized inequality suites
    eval     a divergence between two state files, as JSON
    check    Holevo and Holevo-Rényi quantities for ensemble/POVM files, as JSON

Exit status: 0 on success, 1 when a fuzz suite finds a violation, 2 on bad
input or parameters.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__, units
from .channel import induced_channel, joint_distribution, separable_distribution
from .coding import (
    binary_pure_channel,
    burnashev_holevo_e0,
    charbit_cutoff,
    maximize_over_prior,
    quantum_bound_E,
    sibson_mi,
)
from .divergence import (
    alpha_z_divergence,
    fidelity,
    in_dpi_region,
    renyi_classical,
    renyi_relative_entropy,
    sandwiched_divergence,
    umegaki_relative_entropy,
)
from .exceptions import DomainError, ParameterError, ValidationError
from .fuzz import SUITES, fmt, run_suite
from .holevo import (
    holevo_information,
    holevo_renyi_check,
    mutual_information,
    optimal_z,
    quantum_renyi_bound,
    renyi_bound,
)
from .statefile import load_ensemble, load_povm, load_state

MEASURES = ("classical", "rre", "sandwiched", "alphaz", "umegaki", "fidelity")


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if not step > 0:
        raise ParameterError(f"step must be positive, got {step}")
    if hi < lo:
        raise ParameterError(f"empty range [{lo}, {hi}]")
    count = int(math.floor((hi - lo) / step + 1e-9))
    return [round(lo + k * step, 12) for k in range(count + 1)]


def _header(command: str, seed=None) -> list[str]:
    return [f"# renyi-holevo {command} version={__version__} log_base={units.base_label()} seed={seed if seed is not None else 'none'}"]


def region_rows(alpha_min, alpha_max, z_min, z_max, step) -> list[tuple[float, float, int]]:
    if alpha_min <= 0 or z_min <= 0:
        raise ParameterError("alpha and z ranges must be strictly positive")
    return [
        (a, z, int(in_dpi_region(a, z)))
        for a in _grid(alpha_min, alpha_max, step)
        for z in _grid(z_min, z_max, step)
    ]


def cmd_region(args) -> tuple[str, int]:
    step = args.step
    rows = region_rows(
        args.alpha_min if args.alpha_min is not None else step,
        args.alpha_max,
        args.z_min if args.z_min is not None else step,
        args.z_max,
        step,
    )
    lines = _header("region") + ["alpha,z,in_region"]
    lines += [f"{fmt(a)},{fmt(z)},{m}" for a, z, m in rows]
    return "\n".join(lines) + "\n", 0


def bounds_row(c: float, s: float, prior_mode: str = "uniform") -> tuple[float, float, float]:
    """``(E_script(s), E_tilde_sq(1), E0_q(s))`` for the binary pure channel with overlap ``c``."""
    e = binary_pure_channel(c).ensemble()
    tilde = charbit_cutoff(e)
    if prior_mode == "uniform":
        return quantum_bound_E(e, s), tilde, burnashev_holevo_e0(e, s)
    if prior_mode == "optimized":
        script = maximize_over_prior(lambda x: quantum_bound_E(x, s), e)
        bh = maximize_over_prior(lambda x: burnashev_holevo_e0(x, s), e)
        return script, tilde, bh
    raise ParameterError(f"unknown prior mode {prior_mode!r}")


def cmd_bounds(args) -> tuple[str, int]:
    if not 0 < args.c_step < 1:
        raise ParameterError(f"c step must lie in (0, 1), got {args.c_step}")
    s_values = [float(v) for v in args.s.split(",") if v.strip()]
    for s in s_values:
        if not 0 <= s <= 1:
            raise ParameterError(f"s values must lie in [0, 1], got {s}")
    lines = _header("bounds") + [f"# prior_mode={args.prior_mode}", "c,s,E_script,E_tilde_sq,E0_q"]
    for c in _grid(0.0, 1.0, args.c_step):
        for s in s_values:
            vals = bounds_row(c, s, args.prior_mode)
            lines.append(",".join(fmt(v) for v in (c, s, *vals)))
    return "\n".join(lines) + "\n", 0


def cmd_fuzz(args) -> tuple[str, int]:
    report = run_suite(
        args.suite,
        args.n,
        args.dim,
        args.seed,
        alpha=args.alpha,
        z=args.z,
        letters=args.letters,
        outcomes=args.outcomes,
    )
    return report.render(), 0 if report.ok else 1


def evaluate(measure: str, a, b, alpha=None, z=None) -> float:
    def need_alpha():
        if alpha is None:
            raise ParameterError(f"measure {measure!r} needs --alpha")
        return alpha

    if measure == "classical":
        p = np.clip(np.real(np.diag(a)), 0.0, None)
        q = np.clip(np.real(np.diag(b)), 0.0, None)
        return renyi_classical(p / p.sum(), q / q.sum(), need_alpha())
    if measure == "rre":
        return renyi_relative_entropy(a, b, need_alpha())
    if measure == "sandwiched":
        return sandwiched_divergence(a, b, need_alpha())
    if measure == "alphaz":
        if z is None:
            raise ParameterError("measure 'alphaz' needs --z")
        return alpha_z_divergence(a, b, need_alpha(), z)
    if measure == "umegaki":
        return umegaki_relative_entropy(a, b)
    if measure == "fidelity":
        return fidelity(a, b)
    raise ParameterError(f"unknown measure {measure!r}")


def _json_number(v):
    if v is None:
        return None
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return float(f"{v:.12g}")


def cmd_eval(args) -> tuple[str, int]:
    a = load_state(args.state_a)
    b = load_state(args.state_b)
    if a.shape != b.shape:
        raise ValidationError(f"state dimensions differ: {a.shape[0]} vs {b.shape[0]}")
    value = evaluate(args.measure, a, b, args.alpha, args.z)
    doc = {
        "measure": args.measure,
        "alpha": _json_number(args.alpha),
        "z": _json_number(args.z),
        "value": _json_number(value),
        "log_base": units.base_label(),
    }
    return json.dumps(doc) + "\n", 0


def cmd_check(args) -> tuple[str, int]:
    e = load_ensemble(args.ensemble)
    m = load_povm(args.povm)
    alpha = args.alpha
    z = args.z if args.z is not None else optimal_z(alpha)
    hr = holevo_renyi_check(e, m, alpha, z)
    rb = renyi_bound(e, m, alpha)
    doc = {
        "log_base": units.base_label(),
        "alpha": _json_number(alpha),
        "z": _json_number(z),
        "holevo_information": _json_number(holevo_information(e)),
        "mutual_information": _json_number(mutual_information(joint_distribution(e, m))),
        "holevo_renyi": {
            "lhs": _json_number(hr.lhs),
            "rhs": _json_number(hr.rhs),
            "direction": hr.direction.value,
            "slack": _json_number(hr.slack),
        },
        "renyi_divergence": _json_number(rb.lhs),
        "sibson_mi": _json_number(sibson_mi(e.prior, induced_channel(e, m), alpha)),
        "quantum_bound": _json_number(quantum_renyi_bound(e, alpha)),
        "separable_mass": _json_number(separable_distribution(e, m).sum()),
    }
    ok = hr.holds() and rb.holds()
    return json.dumps(doc, indent=2) + "\n", 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-base", choices=("2", "e"), default="2")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="renyi-holevo", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("region", parents=[common], help="data-processing region grid (CSV)")
    p.add_argument("--alpha-min", type=float, default=None, help="default: the step")
    p.add_argument("--alpha-max", type=float, default=4.0)
    p.add_argument("--z-min", type=float, default=None, help="default: the step")
    p.add_argument("--z-max", type=float, default=4.0)
    p.add_argument("--step", type=float, default=0.01)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("bounds", parents=[common], help="binary pure channel exponent bounds (CSV)")
    p.add_argument("--c-step", type=float, default=0.05)
    p.add_argument("--s", default="1", help="comma-separated s values (default: 1)")
    p.add_argument("--prior-mode", choices=("uniform", "optimized"), default="uniform")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("fuzz", parents=[common], help="randomized inequality suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--z", type=float, default=None)
    p.add_argument("--letters", type=int, default=None, help="fix the input alphabet size")
    p.add_argument("--outcomes", type=int, default=None, help="fix the number of POVM outcomes")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("eval", parents=[common], help="divergence between two state files (JSON)")
    p.add_argument("state_a")
    p.add_argument("state_b")
    p.add_argument("--measure", choices=MEASURES, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--z", type=float, default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="Holevo-Rényi report for ensemble and POVM files (JSON)")
    p.add_argument("ensemble")
    p.add_argument("povm")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--z", type=float, default=None, help="default: the optimal z for alpha")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with units.log_base(args.log_base):
            text, status = args.func(args)
    except (ValidationError, DomainError, ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
