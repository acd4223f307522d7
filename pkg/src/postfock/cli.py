"""Command-line surface: parameter sweeps, figure-data regeneration, validation.

Subcommands: coeffs, stats, mandel, squeeze, wigner, negativity, hs, validate,
sweep.  Machine output is CSV or JSON with 17-significant-digit floats (exact
double round-trip); when writing to a file, a 4-decimal summary table is
printed for human reading.  Rows produced by the Fock oracle instead of the
closed forms (degenerate loci) or by the analytic zero-time limit are labeled
in a `source` column; there are no silent engine switches.

Exit codes: 0 ok, 1 numeric failure (e.g. quadrature non-convergence),
2 invalid input.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import fock_oracle, wigner
from .dynamics import (DegenerateStateError, InvalidParamsError, ModelParams,
                       derive_coeffs, validate)
from .moments import (PhotonStats, SqueezeReport, photon_stats, post_state,
                      projection_probability, quadrature_variance,
                      squeeze_report, unitarity_residual)
from .quad2d import QuadratureError, integrate2d
from .special import DEGREE_CAP

FMT = "%.17g"

SOURCE_CLOSED = "closed"
SOURCE_ORACLE = "oracle"
SOURCE_LIMIT = "limit"

PRESETS = {
    "default": (5, 6, 7, 8),
    "lown": (0, 1, 2, 3),
}


@dataclass
class RunConfig:
    params: ModelParams
    n_list: tuple
    jt_grid: tuple               # scaled times jhat * t
    tol: float = 1e-3
    n_max: int | None = None
    fmt: str = "csv"
    out: str | None = None
    bounds: tuple = (-4.0, 4.0, -4.0, 4.0)
    nx: int = 81
    ny: int = 81
    pairs: tuple = ((6, 7), (5, 7), (6, 8))
    verify: bool = False
    oracle_only: bool = False
    with_negativity: bool = False
    workers: int = 1

    def times(self):
        jhat = math.hypot(self.params.hopping, self.params.detuning)
        return [(jt, jt / jhat) for jt in self.jt_grid]


# ---------------------------------------------------------------------------
# config file + argument handling


def parse_config_file(path) -> dict:
    """Flat `key = value` lines; '#' starts a comment; blanks ignored."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _parse_grid_spec(text: str) -> tuple:
    try:
        start, stop, count = text.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError as exc:
        raise ValueError(f"bad grid spec {text!r}, expected start:stop:count") from exc
    if count < 1:
        raise ValueError("grid count must be >= 1")
    return tuple(np.linspace(start, stop, count).tolist())


def _parse_int_list(text: str) -> tuple:
    return tuple(int(tok) for tok in text.replace(";", ",").split(",") if tok)


def _parse_pairs(text: str) -> tuple:
    pairs = []
    for tok in text.split(","):
        if not tok:
            continue
        a, b = tok.split(":")
        pairs.append((int(a), int(b)))
    return tuple(pairs)


def _parse_bounds(text: str) -> tuple:
    vals = tuple(float(v) for v in text.split(":"))
    if len(vals) != 4:
        raise ValueError("bounds must be re_min:re_max:im_min:im_max")
    return vals


def build_config(args: argparse.Namespace) -> RunConfig:
    settings = {
        "j": 1.3, "delta": 1.0, "r": 0.5, "phi": 0.0,
        "n": "5,6,7,8", "t_grid": "0:3.141592653589793:25",
        "tol": 1e-3, "nmax": "", "format": "csv", "out": "",
        "bounds": "-4:4:-4:4", "nx": 81, "ny": 81,
        "pairs": "6:7,5:7,6:8", "workers": 1,
    }
    if getattr(args, "config", None):
        settings.update(parse_config_file(args.config))
    override = {
        "j": args.j, "delta": args.delta, "r": args.r, "phi": args.phi,
        "n": args.n, "t_grid": args.t_grid, "tol": args.tol,
        "nmax": args.nmax, "format": args.format, "out": args.out,
        "bounds": getattr(args, "bounds", None), "nx": getattr(args, "nx", None),
        "ny": getattr(args, "ny", None), "pairs": getattr(args, "pairs", None),
        "workers": args.workers,
    }
    settings.update({k: v for k, v in override.items() if v is not None})
    if getattr(args, "preset", None):
        settings["n"] = ",".join(str(v) for v in PRESETS[args.preset])

    params = ModelParams(hopping=float(settings["j"]),
                         detuning=float(settings["delta"]),
                         squeeze=float(settings["r"]),
                         phase=float(settings["phi"]))
    n_list = _parse_int_list(str(settings["n"]))
    if any(n < 0 or n > DEGREE_CAP for n in n_list):
        raise ValueError(f"Fock outcomes must lie in [0, {DEGREE_CAP}]")
    tol = float(settings["tol"])
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n_max = int(settings["nmax"]) if str(settings["nmax"]).strip() else None
    return RunConfig(
        params=params,
        n_list=n_list,
        jt_grid=_parse_grid_spec(str(settings["t_grid"])),
        tol=tol,
        n_max=n_max,
        fmt=str(settings["format"]),
        out=str(settings["out"]) or None,
        bounds=_parse_bounds(str(settings["bounds"])),
        nx=int(settings["nx"]),
        ny=int(settings["ny"]),
        pairs=_parse_pairs(str(settings["pairs"])),
        verify=bool(getattr(args, "verify", False)),
        oracle_only=bool(getattr(args, "oracle_only", False)),
        with_negativity=bool(getattr(args, "negativity", False)),
        workers=int(settings["workers"]),
    )


# ---------------------------------------------------------------------------
# row computations with transparent engine fallback


def _oracle_stats(cfg: RunConfig, t: float, n: int) -> PhotonStats:
    vec = fock_oracle.projected_vector(cfg.params, t, n, n_max=cfg.n_max)
    return fock_oracle.fock_observables(vec)


def _oracle_squeeze(cfg: RunConfig, t: float, n: int) -> SqueezeReport:
    vec = fock_oracle.projected_vector(cfg.params, t, n, n_max=cfg.n_max)
    c = vec.amplitudes
    m = np.arange(c.size)
    a_sq = complex(np.sum(np.conj(c[:-2]) * c[2:]
                          * np.sqrt((m[:-2] + 1.0) * (m[:-2] + 2.0))))
    nbar = float(np.dot(m, np.abs(c) ** 2))
    base = nbar + 0.5
    amp = abs(a_sq)
    if amp <= 1e-14 * max(1.0, base):
        return SqueezeReport(0.0, base, math.pi / 2, base, base < 0.5)
    theta_min = ((cmath.phase(a_sq) + math.pi) / 2.0) % math.pi
    return SqueezeReport(theta_min, base - amp, (theta_min + math.pi / 2) % math.pi,
                         base + amp, base - amp < 0.5)


def stats_row(cfg: RunConfig, jt: float, t: float, n: int) -> dict:
    state = post_state(cfg.params, t, n)
    if cfg.oracle_only:
        ps, source = _oracle_stats(cfg, t, n), SOURCE_ORACLE
    elif state.coeffs.boundary:
        ps, source = photon_stats(state), SOURCE_LIMIT
    else:
        try:
            ps, source = photon_stats(state), SOURCE_CLOSED
        except DegenerateStateError:
            ps, source = _oracle_stats(cfg, t, n), SOURCE_ORACLE
    prob = projection_probability(n, state.coeffs, cfg.params.squeeze) \
        if source != SOURCE_ORACLE else fock_oracle.project_b(
            fock_oracle.evolved_state(cfg.params, t, n_max=cfg.n_max, n=n), n).probability
    return {"n": n, "jt": jt, "probability": prob, "mean_n": ps.mean_n,
            "mean_n2": ps.mean_n2, "variance": ps.variance,
            "mandel_q": ps.mandel_q, "source": source}


def squeeze_row(cfg: RunConfig, jt: float, t: float, n: int) -> dict:
    state = post_state(cfg.params, t, n)
    if cfg.oracle_only:
        rep, source = _oracle_squeeze(cfg, t, n), SOURCE_ORACLE
    elif state.coeffs.boundary:
        rep, source = squeeze_report(state), SOURCE_LIMIT
    else:
        try:
            rep, source = squeeze_report(state), SOURCE_CLOSED
        except DegenerateStateError:
            rep, source = _oracle_squeeze(cfg, t, n), SOURCE_ORACLE
    return {"n": n, "jt": jt, "theta_min": rep.theta_min, "v_min": rep.v_min,
            "theta_max": rep.theta_max, "v_max": rep.v_max,
            "squeezed": rep.squeezed, "source": source}


def coeffs_row(cfg: RunConfig, jt: float, t: float) -> dict:
    c = derive_coeffs(cfg.params, t)
    tag = "boundary" if c.boundary else ("degenerate" if c.degenerate else "ok")
    return {"jt": jt, "jhat": c.jhat, "mu": c.mu, "delta": c.delta,
            "varphi": c.varphi,
            "pair_re": c.pair.real, "pair_im": c.pair.imag, "abs_pair": abs(c.pair),
            "herm_re": c.herm.real, "herm_im": c.herm.imag, "abs_herm": abs(c.herm),
            "meas_re": c.meas.real, "meas_im": c.meas.imag, "abs_meas": abs(c.meas),
            "zeta": c.zeta, "gdet": c.gdet, "x1": c.x1, "x2": c.x2, "tag": tag}


def _oracle_negativity(cfg: RunConfig, t: float, n: int) -> wigner.NegativityResult:
    vec = fock_oracle.projected_vector(cfg.params, t, n, n_max=cfg.n_max)
    radius = 5.0
    angles = np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False))
    while radius < 25.0:
        ring = float(np.max(np.abs(fock_oracle.fock_wigner(vec, radius * angles))))
        if ring * 2.0 * math.pi * radius < cfg.tol / 100.0:
            break
        radius += 1.0
    res = integrate2d(lambda xs, ys: np.abs(fock_oracle.fock_wigner(vec, xs + 1j * ys)),
                      -radius, radius, -radius, radius, tol=0.9 * cfg.tol)
    return wigner.NegativityResult(res.value - 1.0, res.value, res.est_error, radius)


def negativity_row(cfg: RunConfig, jt: float, t: float, n: int) -> dict:
    state = post_state(cfg.params, t, n)
    failure = ""
    try:
        if cfg.oracle_only or (state.coeffs.degenerate and n % 2 == 1):
            res, source = _oracle_negativity(cfg, t, n), SOURCE_ORACLE
        else:
            res, source = wigner.negativity(state, tol=cfg.tol), \
                (SOURCE_LIMIT if state.coeffs.boundary else SOURCE_CLOSED)
    except QuadratureError as exc:
        res = wigner.NegativityResult(exc.best_value - 1.0, exc.best_value,
                                      exc.est_error, math.nan)
        source, failure = "failed", str(exc)
    return {"n": n, "jt": jt, "delta_w": res.delta_w,
            "abs_integral": res.abs_integral, "est_error": res.est_error,
            "truncation_radius": res.truncation_radius, "source": source,
            "note": failure}


def hs_row(cfg: RunConfig, jt: float, t: float, pair: tuple) -> dict:
    n1, n2 = pair
    sa = post_state(cfg.params, t, n1)
    sb = post_state(cfg.params, t, n2)
    row = {"n1": n1, "n2": n2, "jt": jt,
           "d_hs": wigner.hs_distance(sa, sb, n_max=cfg.n_max)}
    if cfg.verify:
        row["d_hs_phase_space"] = wigner.hs_distance_phase_space(
            sa, sb, tol=min(cfg.tol, 1e-4))
    return row


def _map_ordered(fn, items, workers: int):
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# output


def _format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return FMT % v
    return str(v)


def rows_to_csv(rows) -> str:
    if not rows:
        return ""
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_format_value(row[k]) for k in header))
    return "\n".join(lines) + "\n"


def rows_to_json(rows) -> str:
    return json.dumps({"rows": rows}, indent=1, default=str) + "\n"


def _summary_table(rows) -> str:
    """Human-oriented view, numbers rounded to 4 decimals."""
    if not rows:
        return "(no rows)\n"
    header = list(rows[0].keys())
    rendered = [header]
    for row in rows:
        cells = []
        for k in header:
            v = row[k]
            cells.append(f"{v:.4f}" if isinstance(v, float) else str(v))
        rendered.append(cells)
    widths = [max(len(r[i]) for r in rendered) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
             for r in rendered]
    return "\n".join(lines) + "\n"


def emit(cfg: RunConfig, rows) -> None:
    text = rows_to_json(rows) if cfg.fmt == "json" else rows_to_csv(rows)
    if cfg.out:
        Path(cfg.out).write_text(text)
        sys.stdout.write(_summary_table(rows))
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_coeffs(cfg: RunConfig) -> int:
    rows = _map_ordered(lambda item: coeffs_row(cfg, *item), cfg.times(), cfg.workers)
    emit(cfg, rows)
    return 0


def _per_state_rows(cfg: RunConfig, fn) -> list:
    items = [(jt, t, n) for (jt, t) in cfg.times() for n in cfg.n_list]
    return _map_ordered(lambda item: fn(cfg, *item), items, cfg.workers)


def cmd_stats(cfg: RunConfig) -> int:
    emit(cfg, _per_state_rows(cfg, stats_row))
    return 0


def cmd_mandel(cfg: RunConfig) -> int:
    rows = _per_state_rows(cfg, stats_row)
    keep = [{k: row[k] for k in ("n", "jt", "mean_n", "mandel_q", "source")}
            for row in rows]
    emit(cfg, keep)
    return 0


def cmd_squeeze(cfg: RunConfig) -> int:
    emit(cfg, _per_state_rows(cfg, squeeze_row))
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    stats = _per_state_rows(cfg, stats_row)
    squeezes = _per_state_rows(cfg, squeeze_row)
    rows = []
    for s, q in zip(stats, squeezes):
        row = dict(s)
        row.update({k: q[k] for k in ("theta_min", "v_min", "theta_max",
                                      "v_max", "squeezed")})
        rows.append(row)
    emit(cfg, rows)
    return 0


def cmd_negativity(cfg: RunConfig) -> int:
    rows = _per_state_rows(cfg, negativity_row)
    emit(cfg, rows)
    return 1 if any(r["source"] == "failed" for r in rows) else 0


def cmd_wigner(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out or "wigner_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    re_min, re_max, im_min, im_max = cfg.bounds
    written = []
    for jt, t in cfg.times():
        for n in cfg.n_list:
            state = post_state(cfg.params, t, n)
            if cfg.oracle_only or (state.coeffs.degenerate and n % 2 == 1):
                vec = fock_oracle.projected_vector(cfg.params, t, n, n_max=cfg.n_max)
                re = np.linspace(re_min, re_max, cfg.nx)
                im = np.linspace(im_min, im_max, cfg.ny)
                values = fock_oracle.fock_wigner(vec, re[None, :] + 1j * im[:, None])
                grid = wigner.WignerGrid(re_min, re_max, im_min, im_max,
                                         cfg.nx, cfg.ny, values, "oracle")
                source = SOURCE_ORACLE
            else:
                grid = wigner.wigner_grid(state, re_min, re_max, im_min, im_max,
                                          cfg.nx, cfg.ny)
                source = SOURCE_LIMIT if state.coeffs.boundary else SOURCE_CLOSED
            path = out_dir / f"wigner_n{n}_jt{jt:.6f}.csv"
            wigner.write_grid_csv(grid, path)
            written.append({"n": n, "jt": jt, "file": str(path), "source": source})
    status = 0
    if cfg.with_negativity:
        neg_rows = _per_state_rows(cfg, negativity_row)
        status = 1 if any(r["source"] == "failed" for r in neg_rows) else 0
        for w, r in zip(written, neg_rows):
            w.update({k: r[k] for k in ("delta_w", "est_error", "truncation_radius")})
    sys.stdout.write(rows_to_json(written) if cfg.fmt == "json"
                     else rows_to_csv(written))
    return status


def cmd_hs(cfg: RunConfig) -> int:
    items = [(jt, t, pair) for (jt, t) in cfg.times() for pair in cfg.pairs]
    rows = _map_ordered(lambda item: hs_row(cfg, *item), items, cfg.workers)
    emit(cfg, rows)
    return 0


def cmd_validate(cfg: RunConfig) -> int:
    checks = []

    def check(name: str, passed: bool, detail: str = ""):
        checks.append((name, passed, detail))
        status = "PASS" if passed else "FAIL"
        sys.stdout.write(f"{status} {name}{(': ' + detail) if detail else ''}\n")

    report = validate(cfg.params)
    check("params-validity", report.valid, report.reason or
          f"mu*tanh(r) = {report.mu_tanh_r:.4f}")
    if not report.valid:
        return 1

    params = cfg.params
    jhat = report.jhat
    probe_jts = [jt for jt in (0.45, 0.8, 1.45, 1.9, 2.6) if jt > 0]

    worst = 0.0
    for jt in probe_jts:
        c = derive_coeffs(params, jt / jhat)
        worst = max(worst, abs(c.pair - c.zeta * c.herm ** 2),
                    abs(c.gdet - (1.0 - 4.0 * abs(c.pair) ** 2)))
        c2 = derive_coeffs(params, (jt + math.pi) / jhat)
        worst = max(worst, abs(abs(c.pair) - abs(c2.pair)),
                    abs(abs(c.herm) - abs(c2.herm)),
                    abs(abs(c.meas) - abs(c2.meas)))
    check("coefficient-identities", worst < 1e-12, f"worst residual {worst:.2e}")

    worst = max(unitarity_residual(derive_coeffs(params, jt / jhat), params.squeeze)
                for jt in probe_jts)
    check("unitarity-sum-rule", worst < 1e-10, f"worst residual {worst:.2e}")

    worst = 0.0
    for jt in probe_jts[:3]:
        c = derive_coeffs(params, jt / jhat)
        total = sum(projection_probability(n, c, params.squeeze, cap=70)
                    for n in range(60))
        worst = max(worst, abs(total - 1.0))
    check("probability-simplex", worst < 1e-9, f"worst residual {worst:.2e}")

    worst = 0.0
    rng = np.random.default_rng(7)
    for jt in (0.7, 1.9):
        t = jt / jhat
        for n in [n for n in cfg.n_list if n <= 8]:
            state = post_state(params, t, n)
            if state.coeffs.degenerate and n % 2 == 1:
                continue
            vec = fock_oracle.projected_vector(params, t, n)
            ps_c = photon_stats(state)
            ps_o = fock_oracle.fock_observables(vec)
            worst = max(worst, abs(ps_c.mean_n - ps_o.mean_n),
                        abs(ps_c.variance - ps_o.variance))
            for theta in rng.uniform(0.0, math.pi, 3):
                worst = max(worst, abs(quadrature_variance(state, theta)
                                       - fock_oracle.fock_quadrature(vec, theta)))
            alphas = rng.uniform(-2, 2, 4) + 1j * rng.uniform(-2, 2, 4)
            worst = max(worst, float(np.max(np.abs(
                wigner.wigner_eval(state, alphas)
                - fock_oracle.fock_wigner(vec, alphas)))))
    check("closed-form-vs-oracle", worst < 1e-8, f"worst deviation {worst:.2e}")

    t_mid = 1.45 / jhat
    state = post_state(params, t_mid, cfg.n_list[0])
    alphas = rng.uniform(-3, 3, 100) + 1j * rng.uniform(-3, 3, 100)
    vals = wigner.wigner_eval(state, alphas)
    mirrored = wigner.wigner_eval(state, -alphas)
    worst = float(np.max(np.abs(vals - mirrored)))
    check("wigner-parity", worst < 1e-12, f"worst |W(a)-W(-a)| {worst:.2e}")

    bstate = post_state(params, 0.0, cfg.n_list[0])
    ps = photon_stats(bstate)
    ok = (abs(ps.mean_n - bstate.n) < 1e-9 and abs(ps.variance) < 1e-9
          and abs(ps.mandel_q + 1.0) < 1e-9
          and abs(quadrature_variance(bstate, 0.3) - bstate.n - 0.5) < 1e-9)
    check("boundary-limits", ok)

    res = wigner.normalization_integral(state, tol=1e-3)
    check("wigner-normalization", abs(res.value - 1.0) < 1e-3,
          f"integral {res.value:.6f}")

    same = wigner.hs_distance(state, state)
    s6 = post_state(params, t_mid, 6)
    s7 = post_state(params, t_mid, 7)
    cross = wigner.hs_distance(s6, s7)
    check("hs-structure", same < 1e-9 and abs(cross - math.sqrt(2)) < 1e-6,
          f"d(n,n) = {same:.2e}, d(6,7) = {cross:.10f}")

    failed = [name for name, passed, _ in checks if not passed]
    if failed:
        sys.stdout.write("FAILED: " + ", ".join(failed) + "\n")
        return 1
    sys.stdout.write(f"all {len(checks)} checks passed\n")
    return 0


COMMANDS = {
    "coeffs": cmd_coeffs,
    "stats": cmd_stats,
    "mandel": cmd_mandel,
    "squeeze": cmd_squeeze,
    "wigner": cmd_wigner,
    "negativity": cmd_negativity,
    "hs": cmd_hs,
    "validate": cmd_validate,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="postfock",
        description="Conditioned-state observables for two coupled bosonic "
                    "modes: coefficient sweeps, photon statistics, squeezing, "
                    "Wigner grids and negativity, Hilbert-Schmidt distances.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
            ("coeffs", "time-dependent state coefficients"),
            ("stats", "photon statistics per (n, t)"),
            ("mandel", "Mandel Q parameter per (n, t)"),
            ("squeeze", "extremal quadrature variances per (n, t)"),
            ("wigner", "write Wigner grid files per (n, t)"),
            ("negativity", "excess absolute Wigner volume per (n, t)"),
            ("hs", "Hilbert-Schmidt distances for outcome pairs"),
            ("validate", "run the cross-route invariant battery"),
            ("sweep", "combined statistics + squeezing sweep")]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--j", type=float, help="hopping rate J")
        p.add_argument("--delta", type=float, help="detuning")
        p.add_argument("--r", type=float, help="squeeze magnitude")
        p.add_argument("--phi", type=float, help="squeeze phase (radians)")
        p.add_argument("--n", help="comma list of Fock outcomes")
        p.add_argument("--preset", choices=sorted(PRESETS),
                       help="named outcome set (overrides --n)")
        p.add_argument("--t-grid", dest="t_grid",
                       help="scaled times jhat*t as start:stop:count")
        p.add_argument("--tol", type=float, help="quadrature tolerance")
        p.add_argument("--nmax", help="oracle truncation override")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--out", help="output path (directory for wigner)")
        p.add_argument("--verify", action="store_true",
                       help="also compute the dual-route check where available")
        p.add_argument("--oracle-only", dest="oracle_only", action="store_true",
                       help="compute every row with the Fock oracle")
        p.add_argument("--workers", type=int, help="worker threads for sweeps")
        if name == "wigner":
            p.add_argument("--bounds", help="re_min:re_max:im_min:im_max")
            p.add_argument("--nx", type=int)
            p.add_argument("--ny", type=int)
            p.add_argument("--negativity", action="store_true",
                           help="append a negativity summary")
        if name == "hs":
            p.add_argument("--pairs", help="outcome pairs like 6:7,5:7")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        report = validate(cfg.params)
        if not report.valid:
            sys.stderr.write(f"invalid parameters: {report.reason}\n")
            return 2
        return COMMANDS[args.command](cfg)
    except (InvalidParamsError, ValueError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2
    except QuadratureError as exc:
        sys.stderr.write(f"numeric failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
