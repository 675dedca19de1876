"""Command-line frontend.

Exit status is 0 when every asserted tolerance holds, 1 when one fails and
2 for usage or configuration errors.  Reports are JSON; everything except
the ``timings`` field is deterministic for a given configuration.
"""
import argparse
import json
import math
import sys
import time
import warnings
from datetime import datetime, timezone

import numpy as np

from . import __version__, checks, heisenberg, qdist, quadrature, special, su11, su2
from .verifier import WeightOperator, assemble_resolution

DEFAULT_TOL = {
    "hw": 1e-6, "su2": 1e-10, "su11": 1e-4, "cross": 1e-6, "density": 1e-5,
    "jacobi": 1e-8, "qfunc": 1e-5, "measure-check": 1e-10,
}
COMPOSE_TOL = {"hw": 1e-9, "su2": 1e-10, "su11": 1e-8}


class ConfigError(Exception):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


# --- state / density specs -------------------------------------------------

def _complex_array(data, field):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError):
        raise ConfigError(field, "expected nested [re, im] pairs") from None
    if arr.shape[-1:] != (2,):
        raise ConfigError(field, "complex numbers must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def _read_json(path, field):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(field, f"cannot read {path}: {exc}") from None


def parse_fiducial(spec, field="--fiducial"):
    """``fock:<n>``, ``file:<path>`` or ``random:<levels>:<seed>`` to a unit vector."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "fock":
            n = int(rest)
            if n < 0:
                raise ValueError
            return np.eye(n + 1, dtype=complex)[n]
        if kind == "random":
            levels, seed = (int(x) for x in rest.split(":"))
            if levels < 1:
                raise ValueError
            rng = np.random.default_rng(seed)
            v = rng.normal(size=levels) + 1j * rng.normal(size=levels)
            return v / np.linalg.norm(v)
    except ValueError:
        raise ConfigError(field, f"malformed state spec {spec!r}") from None
    if kind == "file":
        v = _complex_array(_read_json(rest, field), field)
        if v.ndim != 1:
            raise ConfigError(field, "state file must hold a flat array")
        return v
    raise ConfigError(field, f"unknown state spec {spec!r}")


def random_density(levels, seed):
    """Full-rank density matrix from a seeded complex Ginibre matrix."""
    rng = np.random.default_rng(seed)
    G = rng.normal(size=(levels, levels)) + 1j * rng.normal(size=(levels, levels))
    rho = G @ G.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def parse_density(spec, field="--rho"):
    """``file:<path>``, ``randmix:<levels>:<seed>``, ``mix:<w>*<state>,...`` or a state spec."""
    kind, _, rest = spec.partition(":")
    if kind == "file":
        rho = _complex_array(_read_json(rest, field), field)
        if rho.ndim != 2:
            raise ConfigError(field, "density file must hold a matrix")
        return rho
    if kind == "randmix":
        try:
            levels, seed = (int(x) for x in rest.split(":"))
        except ValueError:
            raise ConfigError(field, f"malformed spec {spec!r}") from None
        return random_density(levels, seed)
    if kind == "mix":
        parts = [p for p in rest.split(",") if p]
        if not parts:
            raise ConfigError(field, "empty mixture")
        weighted = []
        for part in parts:
            w, star, state = part.partition("*")
            if star:
                try:
                    weight = float(w)
                except ValueError:
                    raise ConfigError(field, f"bad weight in {part!r}") from None
            else:
                weight, state = 1.0, part
            weighted.append((weight, parse_fiducial(state, field)))
        size = max(len(v) for _, v in weighted)
        total = sum(w for w, _ in weighted)
        rho = np.zeros((size, size), dtype=complex)
        for w, v in weighted:
            v = np.pad(v, (0, size - len(v)))
            rho += (w / total) * np.outer(v, v.conj())
        return rho
    v = parse_fiducial(spec, field)
    return np.outer(v, v.conj())


def _weight(fn, field):
    try:
        return fn()
    except ValueError as exc:
        raise ConfigError(field, str(exc)) from None


# --- parser ----------------------------------------------------------------

def _grid_args(p):
    g = p.add_argument_group("grid and truncation")
    g.add_argument("--trunc", type=int, default=64, help="HW Fock truncation")
    g.add_argument("--radius", type=float, default=6.0, help="HW plane radius R")
    g.add_argument("--nr", type=int, default=80)
    g.add_argument("--nphi", type=int, default=128)
    g.add_argument("--spin", type=float, default=1.0)
    g.add_argument("--ntheta", type=int, default=None, help="default 4S+8")
    g.add_argument("--levels", type=int, default=128, help="SU(1,1) odd levels")
    g.add_argument("--smax", type=float, default=5.0)
    g.add_argument("--ns", type=int, default=120)
    g.add_argument("--interior", type=int, default=None)
    g.add_argument("--probes", type=int, default=0, help="random diagonal probes")
    g.add_argument("--seed", type=int, default=0)


def build_parser():
    parser = argparse.ArgumentParser(prog="fcoherent", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config with the report's config schema")
    common.add_argument("--output", "-o", help="write report here instead of stdout")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--tol", type=float, default=None)

    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="resolution of identity")
    verify.add_argument("target", choices=["hw", "su2", "su11", "cross", "density"])
    verify.add_argument("--group", choices=["hw", "su2", "su11"], default="hw",
                        help="group for cross/density")
    verify.add_argument("--fiducial", default="fock:0")
    verify.add_argument("--m", type=float, default=None, help="SU(2) fiducial weight")
    verify.add_argument("--n", type=int, default=0, help="SU(1,1) fiducial |2n+1>")
    verify.add_argument("--left", default="fock:0")
    verify.add_argument("--right", default="fock:1")
    verify.add_argument("--rho", default="fock:0")
    _grid_args(verify)

    ident = sub.add_parser("identity", parents=[common], help="Jacobi integral identity")
    ident.add_argument("target", choices=["jacobi"])
    ident.add_argument("--n", type=int, default=0)
    ident.add_argument("--p", type=int, default=0)

    qf = sub.add_parser("qfunc", parents=[common], help="generalized Q-function")
    qf.add_argument("--group", choices=["hw", "su2", "su11"], default="hw")
    qf.add_argument("--rho", default="fock:0")
    qf.add_argument("--rho0", default="fock:0")
    qf.add_argument("--point", action="append", default=None, help="re,im (repeatable)")
    qf.add_argument("--points-file", default=None, help="JSON list of [re, im]")
    qf.add_argument("--normalize", action="store_true")
    _grid_args(qf)

    mc = sub.add_parser("measure-check", parents=[common], help="measure invariance")
    mc.add_argument("--group", choices=["su2", "su11", "all"], default="all")
    mc.add_argument("--pairs", type=int, default=100)
    mc.add_argument("--seed", type=int, default=0)

    cc = sub.add_parser("compose-check", parents=[common], help="composition laws")
    cc.add_argument("--group", choices=["hw", "su2", "su11", "all"], default="all")
    cc.add_argument("--pairs", type=int, default=50)
    cc.add_argument("--seed", type=int, default=0)
    return parser


POSITIONAL = ("command", "target")
NOT_CONFIG = ("config", "output")


def config_to_argv(cfg):
    argv = [str(cfg["command"])]
    if cfg.get("target") is not None:
        argv.append(str(cfg["target"]))
    for key, value in cfg.items():
        if key in POSITIONAL or key in NOT_CONFIG or value is None or value is False:
            continue
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        elif isinstance(value, list):
            for item in value:
                argv += [flag, str(item)]
        else:
            argv += [flag, repr(value) if isinstance(value, float) else str(value)]
    return argv


def _split_positionals(argv):
    k = 0
    while k < len(argv) and not argv[k].startswith("-"):
        k += 1
    return argv[:k], argv[k:]


def resolve_args(argv):
    """Parse ``argv``; a ``--config`` file supplies defaults the flags override."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        cfg = _read_json(args.config, "--config")
        if not isinstance(cfg, dict) or "command" not in cfg:
            raise ConfigError("--config", "config must be an object with a 'command'")
        if cfg["command"] != args.command:
            raise ConfigError("--config", f"config is for {cfg['command']!r}")
        positionals, options = _split_positionals(list(argv))
        _, cfg_options = _split_positionals(config_to_argv(cfg))
        args = parser.parse_args(positionals + cfg_options + options)
    return args


def resolved_config(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in NOT_CONFIG}


# --- commands --------------------------------------------------------------

def _spin_rep(args):
    try:
        return su2.spin_ops(args.spin)
    except ValueError as exc:
        raise ConfigError("--spin", str(exc)) from None


def _grid_for(group, args, rep):
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if group == "hw":
                return quadrature.plane_grid(args.radius, args.nr, args.nphi)
            if group == "su2":
                n = args.ntheta or int(4 * rep.S + 8)
                return quadrature.sphere_grid(n, max(n, 4))
            return quadrature.disc_grid(args.smax, args.ns, args.nphi)
    except ValueError as exc:
        raise ConfigError("grid", str(exc)) from None


def _rep_for(group, args):
    try:
        if group == "hw":
            return heisenberg.ladder_ops(args.trunc)
        if group == "su2":
            return _spin_rep(args)
        return su11.su11_ops(args.levels)
    except ValueError as exc:
        raise ConfigError("--trunc/--levels", str(exc)) from None


def _probe_points(group, count, seed):
    if count <= 0:
        return None
    rng = np.random.default_rng(seed)
    radius = {"hw": 1.5, "su2": 2.0, "su11": 0.5}[group]
    r = radius * np.sqrt(rng.uniform(0, 1, count))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, count))


def run_verify(args):
    target = args.target
    group = target if target in ("hw", "su2", "su11") else args.group
    rep = _rep_for(group, args)
    if target == "hw":
        w = _weight(lambda: WeightOperator.pure(parse_fiducial(args.fiducial)), "--fiducial")
    elif target == "su2":
        m = -rep.S if args.m is None else args.m
        try:
            idx = rep.index(m)
        except ValueError as exc:
            raise ConfigError("--m", str(exc)) from None
        w = WeightOperator.pure(np.eye(rep.dim)[idx])
    elif target == "su11":
        if args.n < 0:
            raise ConfigError("--n", "must be nonnegative")
        w = WeightOperator.pure(np.eye(args.n + 1)[args.n])
    elif target == "cross":
        w = WeightOperator.cross(parse_fiducial(args.left, "--left"),
                                 parse_fiducial(args.right, "--right"))
    else:
        w = _weight(lambda: WeightOperator.density(parse_density(args.rho)), "--rho")

    grid = _grid_for(group, args, rep)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = assemble_resolution(rep, w, grid, d=args.interior, workers=args.workers,
                                         probe_points=_probe_points(group, args.probes, args.seed))
    except ValueError as exc:
        raise ConfigError(target, str(exc)) from None

    tol = args.tol if args.tol is not None else DEFAULT_TOL[target]
    gated = report.calibrated_dev if group == "su2" else report.max_dev
    out = report.summary()
    out["gated_deviation"] = gated
    out["pass"] = bool(gated <= tol)
    out["tolerance"] = tol
    return out


def run_identity(args):
    if args.n < 0 or args.p < args.n:
        raise ConfigError("--p", "need p >= n >= 0")
    value = special.jacobi_identity_lhs(args.n, args.p)
    tol = args.tol if args.tol is not None else DEFAULT_TOL["jacobi"]
    return {"value": value, "deviation": abs(value - 1), "tolerance": tol,
            "pass": bool(abs(value - 1) <= tol)}


def run_qfunc(args):
    group = args.group
    rep = _rep_for(group, args)
    rho = parse_density(args.rho, "--rho")
    rho0 = parse_density(args.rho0, "--rho0")
    pts = []
    for item in args.point or []:
        try:
            re_, im_ = (float(x) for x in item.split(","))
        except ValueError:
            raise ConfigError("--point", f"expected re,im, got {item!r}") from None
        pts.append(complex(re_, im_))
    if args.points_file:
        pts += list(_complex_array(_read_json(args.points_file, "--points-file"), "--points-file"))
    out = {}
    try:
        if pts:
            q = qdist.q_function(rho, rho0, pts, rep)
            out["points"] = [[z.real, z.imag] for z in q.points]
            out["values"] = q.values.tolist()
            out["rho_hash"], out["rho0_hash"] = q.rho_hash, q.rho0_hash
            ok = bool(np.all(q.values >= -1e-12))
        else:
            ok = True
        if args.normalize:
            grid = _grid_for(group, args, rep)
            constant = (2 * rep.S + 1) / math.pi if group == "su2" else None
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                norm, notes = qdist.q_normalization(rho, rho0, grid, rep, constant=constant)
            tol = args.tol if args.tol is not None else DEFAULT_TOL["qfunc"]
            out.update(normalization=norm, tolerance=tol, warnings=notes)
            ok = ok and abs(norm - 1) <= tol
    except ValueError as exc:
        raise ConfigError("--rho/--rho0", str(exc)) from None
    out["pass"] = bool(ok)
    return out


def run_measure_check(args):
    tol = args.tol if args.tol is not None else DEFAULT_TOL["measure-check"]
    groups = ["su2", "su11"] if args.group == "all" else [args.group]
    fns = {"su2": checks.su2_measure_invariance, "su11": checks.su11_measure_invariance}
    res = {g: fns[g](pairs=args.pairs, seed=args.seed)[0] for g in groups}
    return {"residuals": res, "tolerance": tol, "pass": all(v <= tol for v in res.values())}


def run_compose_check(args):
    groups = ["hw", "su2", "su11"] if args.group == "all" else [args.group]
    fns = {"hw": checks.hw_composition, "su2": checks.su2_composition,
           "su11": checks.su11_composition}
    res, tols = {}, {}
    for g in groups:
        res[g] = fns[g](pairs=args.pairs, seed=args.seed)[0]
        tols[g] = args.tol if args.tol is not None else COMPOSE_TOL[g]
    return {"residuals": res, "tolerance": tols,
            "pass": all(res[g] <= tols[g] for g in groups)}


COMMANDS = {"verify": run_verify, "identity": run_identity, "qfunc": run_qfunc,
            "measure-check": run_measure_check, "compose-check": run_compose_check}

REPORT_KEYS = ("measured_constant", "paper_constant", "max_dev", "frob_dev", "probe_samples")


def execute(argv):
    """Run one command; returns (exit_status, report_dict or None)."""
    started = time.perf_counter()
    try:
        args = resolve_args(argv)
        body = COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"fcoherent: error: {exc}", file=sys.stderr)
        return 2, None
    report = {"command": args.command, "config": resolved_config(args), "version": __version__}
    for key in REPORT_KEYS:
        report[key] = body.pop(key, None)
    report["pass"] = body.pop("pass")
    report["details"] = body
    report["timings"] = {
        "started": datetime.now(timezone.utc).isoformat(),
        "elapsed_s": time.perf_counter() - started,
    }
    text = json.dumps(_jsonable(report), indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return (0 if report["pass"] else 1), report


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        status, _ = execute(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2
        return exc.code if isinstance(exc.code, int) else 2
    return status


if __name__ == "__main__":
    sys.exit(main())
