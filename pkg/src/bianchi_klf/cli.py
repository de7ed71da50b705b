"""Command-line harness: one subcommand per operation plus ``verify-all``.

Every subcommand emits line-delimited JSON records with the fields
{id, anchor, inputs, value, residual, tol, status, ms} and prints a summary
table.  The exit status is 0 iff no pass/fail record failed; configuration
errors exit with status 2.

Configuration precedence is CLI flag > environment (``BKLF_<SECTION>_<KEY>``)
> INI file (``--config``) > built-in defaults.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import eisenstein as eis
from . import elliptic as ell
from . import limit as lim
from . import verify
from .hspace import GMatrix, HPoint
from .numfield import SUPPORTED_D, AlgInt, ImagQuadField
from .verify import FAIL, REPORT, Check, _gate, _Timer, matrix_inputs, point_inputs

ENV_PREFIX = "BKLF_"
EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending key path."""


# -- configuration ---------------------------------------------------------------


@dataclass
class RunConfig:
    d: int = -1
    c_max: float = 60.0
    omega_max: float | None = None
    w_max: float | None = None
    eps_schedule: tuple = eis.EPS_SCHEDULE
    grid: int = 24
    tolerances: dict = field(default_factory=dict)
    threads: int = 1
    output: str | None = None
    format: str = "jsonl"

    def validate(self) -> None:
        if self.d not in SUPPORTED_D:
            raise ConfigError(f"field.d: {self.d} is not one of {SUPPORTED_D}")
        for key in ("c_max", "omega_max", "w_max"):
            v = getattr(self, key)
            if v is not None and not v > 0:
                raise ConfigError(f"truncation.{key}: must be positive, got {v}")
        eps = self.eps_schedule
        if len(eps) < 3 or any(e <= 0 for e in eps) or any(b >= a for a, b in zip(eps, eps[1:])):
            raise ConfigError(f"laurent.eps_schedule: need >= 3 positive strictly decreasing values, got {eps}")
        if self.grid < 4:
            raise ConfigError(f"quadrature.grid: must be >= 4, got {self.grid}")
        if self.threads < 1:
            raise ConfigError(f"run.threads: must be >= 1, got {self.threads}")
        if self.format not in ("jsonl", "json"):
            raise ConfigError(f"output.format: must be jsonl or json, got {self.format!r}")
        for k, v in self.tolerances.items():
            if k not in verify.TOLERANCE_KEYS:
                raise ConfigError(f"tolerances.{k}: unknown key")
            if not v > 0:
                raise ConfigError(f"tolerances.{k}: must be positive, got {v}")

    def suite(self) -> verify.SuiteConfig:
        return verify.SuiteConfig(
            d=self.d, c_max=self.c_max, grid=self.grid,
            eps_schedule=tuple(self.eps_schedule), tolerances=dict(self.tolerances),
        )


def _floats(text: str) -> tuple:
    return tuple(float(t) for t in re.split(r"[,\s]+", text.strip()) if t)


def _optional_float(text: str) -> float | None:
    return None if text.strip().lower() in ("", "none", "auto") else float(text)


# section -> key -> (RunConfig attribute, parser)
SCHEMA = {
    "field": {"d": ("d", int)},
    "truncation": {
        "c_max": ("c_max", float),
        "omega_max": ("omega_max", _optional_float),
        "w_max": ("w_max", _optional_float),
    },
    "laurent": {"eps_schedule": ("eps_schedule", _floats)},
    "quadrature": {"grid": ("grid", int)},
    "run": {"threads": ("threads", int)},
    "output": {"path": ("output", str), "format": ("format", str)},
}


def _apply(cfg: RunConfig, section: str, key: str, raw: str, origin: str) -> None:
    path = f"{section}.{key}"
    if section == "tolerances":
        if key not in verify.TOLERANCE_KEYS:
            raise ConfigError(f"{path}: unknown key ({origin})")
        try:
            cfg.tolerances[key] = float(raw)
        except ValueError as exc:
            raise ConfigError(f"{path}: {exc} ({origin})") from None
        return
    if section not in SCHEMA:
        raise ConfigError(f"{section}: unknown section ({origin})")
    if key not in SCHEMA[section]:
        raise ConfigError(f"{path}: unknown key ({origin})")
    attr, parse = SCHEMA[section][key]
    try:
        setattr(cfg, attr, parse(raw))
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc} ({origin})") from None


def load_config(path: str | None = None, env=None, overrides: dict | None = None) -> RunConfig:
    """Defaults, then the INI file, then ``BKLF_SECTION_KEY`` variables, then CLI overrides."""
    cfg = RunConfig()
    if path is not None:
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        try:
            with open(path) as fh:
                parser.read_file(fh)
        except (OSError, configparser.Error) as exc:
            raise ConfigError(f"{path}: {exc}") from None
        for section in parser.sections():
            for key, raw in parser.items(section):
                _apply(cfg, section, key, raw, f"file {path}")
    env = os.environ if env is None else env
    sections = sorted(list(SCHEMA) + ["tolerances"], key=len, reverse=True)
    for name in sorted(env):
        if not name.startswith(ENV_PREFIX):
            continue
        rest = name[len(ENV_PREFIX):].lower()
        for section in sections:
            if rest.startswith(section + "_"):
                _apply(cfg, section, rest[len(section) + 1:], env[name], f"env {name}")
                break
        else:
            raise ConfigError(f"{rest}: unknown environment key (env {name})")
    for (section, key), raw in (overrides or {}).items():
        if raw is not None:
            _apply(cfg, section, key, str(raw), "command line")
    cfg.validate()
    return cfg


# -- argument parsing helpers ------------------------------------------------------


def parse_point(text: str) -> HPoint:
    """``x,y,r`` -> HPoint."""
    try:
        x, y, r = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"point must be x,y,r, got {text!r}") from None
    if not r > 0:
        raise argparse.ArgumentTypeError(f"point needs r > 0, got {text!r}")
    return HPoint(complex(x, y), r)


def parse_entry(F: ImagQuadField, text: str) -> AlgInt:
    """``p+qw`` in the basis (1, w) of O_K; ``i`` is accepted as ``w`` for d = -1."""
    t = text.replace(" ", "")
    terms = re.findall(r"[+-]?[^+-]+", t)
    if not t or "".join(terms) != t:
        raise ValueError(f"cannot parse ring element {text!r}")
    p = q = 0
    for term in terms:
        m = re.fullmatch(r"([+-]?)(\d*)\*?([wi]?)", term)
        if m is None or (m.group(3) == "i" and F.d != -1) or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse ring element {text!r}")
        coef = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        if m.group(3):
            q += coef
        else:
            p += coef
    return F(p, q)


def parse_matrix(F: ImagQuadField, text: str) -> GMatrix:
    """``a,b;c,d`` with entries ``p+qw``."""
    rows = text.split(";")
    if len(rows) != 2 or any(len(r.split(",")) != 2 for r in rows):
        raise ValueError(f"matrix must be a,b;c,d, got {text!r}")
    (a, b), (c, d) = ([parse_entry(F, e) for e in r.split(",")] for r in rows)
    return GMatrix(a, b, c, d)


def parse_complex_pair(text: str) -> complex:
    """``x,y`` -> x + iy."""
    try:
        x, y = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}") from None
    return complex(x, y)


# -- serialization -------------------------------------------------------------------


def encode(x) -> str:
    """JSON text with every float written to 17 significant digits.

    Complex numbers become {"re", "im"}; ring elements, points and matrices use
    their command-line spelling; non-finite floats become strings.
    """
    if x is None or isinstance(x, bool):
        return json.dumps(x)
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        f = float(x)
        return format(f, ".17g") if math.isfinite(f) else json.dumps(str(f))
    if isinstance(x, (complex, np.complexfloating)):
        return encode({"re": x.real, "im": x.imag})
    if isinstance(x, AlgInt):
        return json.dumps(repr(x))
    if isinstance(x, HPoint):
        return encode(point_inputs(x))
    if isinstance(x, GMatrix):
        return json.dumps(matrix_inputs(x))
    if isinstance(x, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {encode(v)}" for k, v in x.items()) + "}"
    if isinstance(x, (list, tuple, np.ndarray)):
        return "[" + ", ".join(encode(v) for v in x) + "]"
    return json.dumps(repr(x))


def write_report(checks: list[Check], path: str | None, fmt: str = "jsonl") -> None:
    ids = [c.id for c in checks]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate check ids in report")
    records = [encode(c.as_record()) for c in checks]
    text = "\n".join(records) + "\n" if fmt == "jsonl" else "[\n" + ",\n".join(records) + "\n]\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _short(x) -> str:
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.10g}"
    if isinstance(x, (complex, np.complexfloating)):
        return f"{x.real:.10g}{x.imag:+.10g}i"
    if isinstance(x, dict):
        return f"{{{len(x)} fields}}"
    if isinstance(x, (list, tuple)):
        return f"[{len(x)} items]"
    return str(x)


def summary_table(checks: list[Check]) -> str:
    rows = [("id", "status", "value", "residual", "tol", "ms")]
    for c in checks:
        rows.append((
            c.id, c.status, _short(c.value),
            "" if c.residual is None else f"{c.residual:.3e}",
            "" if c.tol is None else f"{c.tol:.1e}",
            f"{c.ms:.0f}",
        ))
    widths = [min(max(len(r[k]) for r in rows), 40) for k in range(len(rows[0]))]
    lines = ["  ".join(cell[:40].ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    n_pass, n_fail, n_rep = verify.summarize(checks)
    lines.append(f"{n_pass} pass, {n_fail} fail, {n_rep} report-only")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------------------


def _check(id, anchor, inputs, value, residual=None, tol=None, ms=0.0, gated=False) -> Check:
    status = _gate(residual, tol) if gated else REPORT
    return Check(id, anchor, inputs, value, residual, tol, status, ms)


def cmd_eisenstein(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    u, s = args.point, args.s
    routes = ["direct", "brute", "hat", "fourier"] if args.route == "all" else [args.route]
    values, out = {}, []
    for route in routes:
        with _Timer() as t:
            if route == "fourier":
                v = eis.eisenstein_fourier(F, u, s, cfg.omega_max)
            elif route == "hat":
                v = eis.eisenstein_hat(F, u, s)
            else:
                method = "ewald" if route == "direct" else "brute"
                v = eis.eisenstein_direct(F, u, s, c_max=cfg.c_max, method=method)
        values[route] = v.value
        inputs = {"d": F.d, "u": point_inputs(u), "s": s, "route": route, "truncation": v.truncation}
        out.append(_check(f"eisenstein.{route}", "Eisenstein series", inputs, v.value, v.tail_bound or None, ms=t.ms))
    if "direct" in values and "fourier" in values:
        res = abs(values["direct"] - values["fourier"])
        out.append(_check(
            "eisenstein.direct-vs-fourier", "Eisenstein series: two routes",
            {"d": F.d, "u": point_inputs(u), "s": s}, values["direct"], res, cfg.suite().tol("master", 1e-6), gated=True,
        ))
    return out


def cmd_fourier_coeff(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    w, r, s = args.omega, args.r, args.s
    inputs = {"d": F.d, "omega": w, "r": r, "s": s}
    with _Timer() as t:
        closed = eis.fourier_coefficient(F, w, r, s)
    out = [_check("fourier-coeff.closed", "Fourier coefficient a_omega(r, s)", inputs, closed, ms=t.ms)]
    if args.quadrature:
        with _Timer() as t:
            quad = eis.fourier_coefficient_quadrature(F, w, r, s, cfg.grid)
        out.append(_check(
            "fourier-coeff.quadrature", "Fourier coefficient by quadrature", dict(inputs, grid=cfg.grid),
            quad, abs(quad - closed), cfg.suite().tol("quadrature", 1e-6), t.ms, gated=True,
        ))
    return out


def cmd_phi(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    w, s = args.omega, args.s
    inputs = {"d": F.d, "omega": w, "s": s}
    with _Timer() as t:
        closed = eis.phi(F, w, s)
    out = [_check("phi.closed", "phi_omega(s) closed form", inputs, closed, ms=t.ms)]
    if args.brute:
        with _Timer() as t:
            brute = eis.phi(F, w, s, c_max=args.brute_c_max, method="brute")
        out.append(_check(
            "phi.brute", "phi_omega(s) by smoothed residue sum", dict(inputs, c_max=args.brute_c_max),
            brute, abs(brute - closed), ms=t.ms,
        ))
    return out


def cmd_laurent(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    with _Timer() as t:
        L = eis.laurent_a0(F, args.r, cfg.eps_schedule)
    inputs = {"d": F.d, "r": args.r, "eps": list(cfg.eps_schedule)}
    return [
        _check("laurent.a", "Laurent data of phi_0: residue a", inputs, L.a, ms=t.ms),
        _check("laurent.b", "Laurent data of phi_0: constant b", inputs, L.b, L.errors.get("richardson")),
        _check("laurent.alpha", "residue of E at s = 1", inputs, L.alpha),
        _check(
            "laurent.beta", "constant term of a_0(r, s) at s = 1", inputs, L.beta,
            L.errors["beta_residual"], cfg.suite().tol("klf", 1e-3), gated=True,
        ),
        _check("laurent.beta-printed", "constant term without the 1/s factor", inputs,
               eis.beta_as_printed(F, args.r), abs(eis.beta_as_printed(F, args.r) - L.beta)),
    ]


def cmd_klf(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    u = args.point
    inputs = {"d": F.d, "u": point_inputs(u), "eps": list(cfg.eps_schedule), "route": args.route}
    with _Timer() as t:
        lhs = lim.klf_lhs(F, u, cfg.eps_schedule, route=args.route)
        rhs = lim.klf_rhs(F, u, cfg.omega_max)
    printed = lim.klf_rhs_as_printed(F, u, cfg.omega_max)
    return [
        _check("klf.lhs", "limit of E(u, s) - alpha/(s - 1)", inputs, lhs.value, lhs.diagnostics["richardson"]),
        _check("klf.rhs", "Kronecker limit formula right-hand side", inputs, rhs),
        _check("klf.residual", "Kronecker limit formula", inputs, rhs, abs(lhs.value - rhs),
               cfg.suite().tol("klf", 1e-3), t.ms, gated=True),
        _check("klf.printed-constant", "limit formula with the volume constant", inputs, printed, abs(lhs.value - printed)),
    ]


def cmd_eta(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    u = args.point
    with _Timer() as t:
        e = lim.log_eta(F, u, cfg.omega_max)
    inputs = {"d": F.d, "u": point_inputs(u), "R": e.R}
    return [_check("eta.log", "log eta(u)", inputs, e.log_eta, e.tail_bound, ms=t.ms)]


def cmd_dgamma(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    if args.batch:
        return verify.criterion_7(cfg.suite())
    if args.matrix is None:
        raise ConfigError("dgamma: give --matrix a,b;c,d or --batch")
    M = parse_matrix(F, args.matrix)
    suite = cfg.suite()
    with _Timer() as t:
        dm = lim.d_gamma(F, M)
        d2 = lim.d_gamma(F, M @ M)
    inputs = {"d": F.d, "M": matrix_inputs(M)}
    hom = abs(d2.value - 2 * dm.value)
    return [
        _check("dgamma.value", "D(M)", inputs, dm.value, ms=t.ms),
        _check("dgamma.sample-sd", "D(M) independent of u", dict(inputs, samples=len(dm.samples)),
               {"sd": dm.sd, "differences": list(dm.differences)}, dm.sd, suite.tol("d_sd", 1e-6), gated=True),
        _check("dgamma.square", "D(M^2) = 2 D(M)", dict(inputs, M2=matrix_inputs(M @ M)),
               d2.value, hom, suite.tol("d_hom", 1e-6), gated=True),
    ]


def cmd_elliptic_dedekind(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    c, d = parse_entry(F, args.c), parse_entry(F, args.d_entry)
    with _Timer() as t:
        D = ell.elliptic_dedekind(c, d, method=args.method)
        Dbar = ell.elliptic_dedekind(c.conj(), d.conj(), method=args.method)
    inputs = {"d": F.d, "c": repr(c), "d_entry": repr(d), "method": args.method}
    return [
        _check("elliptic-dedekind.value", "elliptic Dedekind sum D(c, d)", inputs, D.value, ms=t.ms),
        _check("elliptic-dedekind.conjugate", "D(conj c, conj d) = -D(c, d)", inputs, Dbar.value,
               abs(Dbar.value + D.value), cfg.suite().tol("elliptic", 1e-10), gated=True),
    ]


def cmd_g_compare(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    u = args.point
    with _Timer() as t:
        res = ell.geta_comparison(F, u, cfg.w_max)
    inputs = {"d": F.d, "u": point_inputs(u), "w_max": cfg.w_max}
    return [_check("g-compare", "g against log|eta| plus B(r)", inputs, res, abs(res["residual"]), ms=t.ms)]


def cmd_zeta2(cfg: RunConfig, args) -> list[Check]:
    F = ImagQuadField.of(cfg.d)
    with _Timer() as t:
        res = ell.zeta2_check(F)
    best = min(abs(v["residual"]) for v in res["readings"].values())
    return [_check("zeta2", "zeta_K(2) from the dual lattice area", {"d": F.d}, res, best, ms=t.ms)]


def cmd_verify_all(cfg: RunConfig, args) -> list[Check]:
    which = None
    if args.criteria:
        which = [int(t) for t in args.criteria.split(",")]
        bad = [n for n in which if n not in verify.CRITERIA]
        if bad:
            raise ConfigError(f"criteria: unknown group(s) {bad}")
    return verify.run(cfg.suite(), which)


COMMANDS = {
    "eisenstein": cmd_eisenstein,
    "fourier-coeff": cmd_fourier_coeff,
    "phi": cmd_phi,
    "laurent": cmd_laurent,
    "klf": cmd_klf,
    "eta": cmd_eta,
    "dgamma": cmd_dgamma,
    "elliptic-dedekind": cmd_elliptic_dedekind,
    "g-compare": cmd_g_compare,
    "zeta2": cmd_zeta2,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="INI file with sections field, truncation, laurent, quadrature, tolerances, run, output")
    common.add_argument("--d", type=int, help="field: Q(sqrt d) with d in -1, -2, -3, -7, -11")
    common.add_argument("--c-max", type=float, help="coset-sum truncation |c| <= c_max")
    common.add_argument("--omega-max", type=float, help="Fourier truncation |omega| <= omega_max")
    common.add_argument("--w-max", type=float, help="truncation of the g series")
    common.add_argument("--eps", help="comma-separated, strictly decreasing eps schedule")
    common.add_argument("--grid", type=int, help="quadrature grid points per side")
    common.add_argument("--threads", type=int, help="thread count")
    common.add_argument("--output", "-o", help="report file (default: standard output)")
    common.add_argument("--format", choices=("jsonl", "json"), help="report format")
    common.add_argument("--quiet", "-q", action="store_true", help="suppress the summary table")

    p = argparse.ArgumentParser(prog="bianchi-klf", description="Eisenstein series and limit formulas for Bianchi groups.")
    sub = p.add_subparsers(dest="command", required=True)
    point = dict(type=parse_point, default=HPoint(0.3 + 0.4j, 0.9), help="x,y,r")

    q = sub.add_parser("eisenstein", parents=[common], help="E(u, s) by one or all routes")
    q.add_argument("--point", **point)
    q.add_argument("--s", type=float, default=2.0)
    q.add_argument("--route", choices=("direct", "brute", "hat", "fourier", "all"), default="all")

    q = sub.add_parser("fourier-coeff", parents=[common], help="a_omega(r, s)")
    q.add_argument("--omega", type=parse_complex_pair, default=complex(0, 1), help="x,y of a dual lattice point")
    q.add_argument("--r", type=float, default=0.9)
    q.add_argument("--s", type=float, default=2.0)
    q.add_argument("--quadrature", action="store_true", help="also integrate over the fundamental domain")

    q = sub.add_parser("phi", parents=[common], help="phi_omega(s)")
    q.add_argument("--omega", type=parse_complex_pair, default=complex(0, 1))
    q.add_argument("--s", type=float, default=2.0)
    q.add_argument("--brute", action="store_true", help="also sum residues mod c directly")
    q.add_argument("--brute-c-max", type=float, default=30.0)

    q = sub.add_parser("laurent", parents=[common], help="Laurent data at s = 1")
    q.add_argument("--r", type=float, default=0.9)

    q = sub.add_parser("klf", parents=[common], help="both sides of the limit formula")
    q.add_argument("--point", **point)
    q.add_argument("--route", choices=("fourier", "ewald"), default="fourier")

    q = sub.add_parser("eta", parents=[common], help="log eta(u)")
    q.add_argument("--point", **point)

    q = sub.add_parser("dgamma", parents=[common], help="D(M) for one matrix or the property batch")
    q.add_argument("--matrix", help="a,b;c,d with entries p+qw")
    q.add_argument("--batch", action="store_true")

    q = sub.add_parser("elliptic-dedekind", parents=[common], help="D(c, d) from E_1")
    q.add_argument("--c", required=True, help="ring element p+qw")
    q.add_argument("--d-entry", dest="d_entry", required=True, help="ring element p+qw")
    q.add_argument("--method", choices=("hecke", "weierstrass", "hecke-richardson"), default="hecke")

    q = sub.add_parser("g-compare", parents=[common], help="g against log|eta|")
    q.add_argument("--point", **point)

    sub.add_parser("zeta2", parents=[common], help="zeta_K(2) from the dual lattice area")

    q = sub.add_parser("verify-all", parents=[common], help="the full verification suite")
    q.add_argument("--criteria", help="comma-separated group numbers (default: all)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        ("field", "d"): args.d,
        ("truncation", "c_max"): args.c_max,
        ("truncation", "omega_max"): args.omega_max,
        ("truncation", "w_max"): args.w_max,
        ("laurent", "eps_schedule"): args.eps,
        ("quadrature", "grid"): args.grid,
        ("run", "threads"): args.threads,
        ("output", "path"): args.output,
        ("output", "format"): args.format,
    }
    try:
        cfg = load_config(args.config, overrides=overrides)
        checks = COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    write_report(checks, cfg.output, cfg.format)
    if not args.quiet:
        print(summary_table(checks))
    return EXIT_FAIL if any(c.status == FAIL for c in checks) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
