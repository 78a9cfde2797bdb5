"""quotloc command line.

Exit codes: 0 success, 1 internal invariant violation (or a failed ``check``),
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import List, Optional, Sequence

from .blockform import block_forms, render_ascii
from .errors import InvariantError, UsageError
from .euler import component_euler_factors, render_factors
from .flagint import FlagIntegrator
from .mirror import component_integral, component_integrals, degree_total, duality_check, euler_series_table
from .partitions import FixedComponent, admissible_pairs, distinguished_components, fixed_components
from .weights import cardinality_check, weights_to_json, zero_multiplicity_check

log = logging.getLogger("quotloc")

COMMANDS = ("components", "weights", "blockform", "euler", "integral", "total", "series", "check")


def parse_seq(text: str) -> tuple:
    try:
        vals = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"malformed sequence {text!r}: expected comma-separated non-negative integers")
    if not vals:
        raise UsageError(f"empty sequence {text!r}")
    if any(v < 0 for v in vals):
        raise UsageError(f"sequence {text!r} has negative entries")
    ordered = sorted(vals)
    if ordered != vals:
        log.warning("sequence %s reordered to %s", text, ",".join(map(str, ordered)))
    return tuple(ordered)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quotloc", description="Fixed-point localization on Quot schemes of P^1 -> Gr_r(C^n).")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int, required=True, help="ambient dimension n")
    p.add_argument("--r", type=int, help="subspace rank r (inferred from --alpha)")
    p.add_argument("--d", type=int, help="degree d (d_max for 'series')")
    p.add_argument("--alpha", help="comma-separated alpha sequence")
    p.add_argument("--beta", help="comma-separated beta sequence (default all zero)")
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.add_argument("--distinguished", action="store_true", help="components: only beta = 0")
    p.add_argument("--parallel", action="store_true", help="evaluate components in parallel (QUOTLOC_THREADS workers)")
    p.add_argument("--lambda", dest="lam", help="comma-separated distinct integration values (expert)")
    return p


class Config:
    def __init__(self, args: argparse.Namespace):
        self.command = args.command
        self.n = args.n
        self.format = args.format
        self.distinguished = args.distinguished
        self.alpha = parse_seq(args.alpha) if args.alpha else None
        self.beta = parse_seq(args.beta) if args.beta else None
        self.r = args.r
        self.d = args.d
        if self.alpha is not None:
            if self.r is not None and self.r != len(self.alpha):
                raise UsageError(f"--r {self.r} does not match len(alpha)={len(self.alpha)}")
            self.r = len(self.alpha)
            if self.beta is None:
                self.beta = (0,) * self.r
            if len(self.beta) != self.r:
                raise UsageError(f"beta has length {len(self.beta)}, expected r={self.r}")
            deg = sum(self.alpha) + sum(self.beta)
            if self.d is not None and self.command != "series" and self.d != deg:
                raise UsageError(f"--d {self.d} does not match sum(alpha)+sum(beta)={deg}")
            self.d = deg
        elif self.beta is not None:
            raise UsageError("--beta requires --alpha")
        if self.n < 1:
            raise UsageError(f"n must be positive, got {self.n}")
        if self.r is not None and not 1 <= self.r <= self.n:
            raise UsageError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")
        if self.d is not None and self.d < 0:
            raise UsageError(f"degree must be non-negative, got d={self.d}")
        self.workers = 1
        if args.parallel:
            self.workers = int(os.environ.get("QUOTLOC_THREADS", os.cpu_count() or 1))
        lam = parse_lambda(args.lam) if args.lam else None
        self.integrator = FlagIntegrator(lam)
        if lam is not None:
            self.integrator.values_for(self.n)

    def need(self, *names: str) -> None:
        missing = [k for k in names if getattr(self, k) is None]
        if missing:
            flags = ", ".join("--" + k for k in missing)
            raise UsageError(f"'{self.command}' needs {flags}")

    def component(self) -> FixedComponent:
        self.need("alpha")
        return FixedComponent(self.alpha, self.beta, self.n)

    def distinguished_component(self) -> FixedComponent:
        c = self.component()
        if not c.is_distinguished:
            raise UsageError(f"{c.label()} is not distinguished: '{self.command}' requires beta = 0")
        return c


def parse_lambda(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed --lambda {text!r}")


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _series_text(series, fmt: str) -> str:
    return series.to_latex() if fmt == "latex" else series.to_plain()


def cmd_components(cfg: Config, out) -> int:
    cfg.need("r", "d")
    comps = distinguished_components(cfg.n, cfg.r, cfg.d) if cfg.distinguished else fixed_components(cfg.n, cfg.r, cfg.d)
    if cfg.format == "json":
        _emit(out, json.dumps([c.to_json() for c in comps]))
        return 0
    for c in comps:
        blocks = ",".join(map(str, c.flag_blocks))
        name = c.label() if cfg.format == "plain" else c.label().replace(";", r";\,")
        _emit(out, f"{name}  dim={c.dimension}  codim={c.codimension}  flag_blocks=({blocks})")
    return 0


def cmd_weights(cfg: Config, out) -> int:
    c = cfg.component()
    data = weights_to_json(c)
    if cfg.format == "json":
        _emit(out, json.dumps(data))
        return 0
    for name, ws in data.items():
        body = ", ".join(f"{w}:{m}" for w, m in ws.items())
        _emit(out, f"{name}: {{{body}}}")
    return 0


def cmd_blockform(cfg: Config, out) -> int:
    c = cfg.distinguished_component()
    forms = block_forms(c.alpha, c.n)
    if cfg.format == "json":
        _emit(out, json.dumps([f.to_json() for f in forms]))
    else:
        _emit(out, render_ascii(forms, c.alpha, c.n))
    return 0


def cmd_euler(cfg: Config, out) -> int:
    c = cfg.distinguished_component()
    factors = component_euler_factors(c)
    if cfg.format == "json":
        _emit(out, json.dumps([[f.w, f.i, f.j] for f in factors]))
    else:
        _emit(out, render_factors(factors, cfg.format))
    return 0


def cmd_integral(cfg: Config, out) -> int:
    if cfg.alpha is not None:
        c = cfg.distinguished_component()
        results = [component_integral(c.alpha, c.n, c.r, cfg.integrator)]
    else:
        cfg.need("r", "d")
        results = component_integrals(cfg.n, cfg.r, cfg.d, cfg.integrator, cfg.workers)
    if cfg.format == "json":
        payload = [ci.to_json() for ci in results]
        _emit(out, json.dumps(payload[0] if cfg.alpha is not None else payload))
        return 0
    for ci in results:
        text = _series_text(ci.value, cfg.format)
        if cfg.alpha is not None:
            _emit(out, text)
        else:
            _emit(out, f"{ci.component.label()}: {text}")
    return 0


def cmd_total(cfg: Config, out) -> int:
    cfg.need("r", "d")
    total = degree_total(cfg.n, cfg.r, cfg.d, cfg.integrator, cfg.workers)
    if cfg.format == "json":
        _emit(out, json.dumps({"n": cfg.n, "r": cfg.r, "d": cfg.d, "total": total.to_json()}))
    else:
        _emit(out, _series_text(total, cfg.format))
    return 0


def cmd_series(cfg: Config, out) -> int:
    cfg.need("r", "d")
    rows = euler_series_table(cfg.n, cfg.r, cfg.d, cfg.integrator, cfg.workers)
    if cfg.format == "json":
        _emit(out, json.dumps([{"d": d, "total": s.to_json()} for d, s in rows]))
        return 0
    for d, s in rows:
        _emit(out, f"d={d}: {_series_text(s, cfg.format)}")
    return 0


def cmd_check(cfg: Config, out) -> int:
    cfg.need("d")
    ranks: List[int] = [cfg.r] if cfg.r is not None else list(range(1, cfg.n))
    ranks = [r for r in ranks if r < cfg.n]
    n_comp = n_bad = 0
    for r in ranks:
        for d in range(cfg.d + 1):
            for a, b in admissible_pairs(r, d):
                c = FixedComponent(a, b, cfg.n)
                n_comp += 1
                if not (zero_multiplicity_check(c) and cardinality_check(c)):
                    n_bad += 1
                    _emit(out, f"FAIL weights {c.label()} n={cfg.n}")
    dual_ok = dual_total = 0
    for r in ranks:
        for d in range(cfg.d + 1):
            dual_total += 1
            if duality_check(cfg.n, r, d, cfg.integrator):
                dual_ok += 1
            else:
                _emit(out, f"FAIL duality n={cfg.n} r={r} d={d}")
    ok = n_bad == 0 and dual_ok == dual_total
    status = "OK" if ok else "FAILED"
    _emit(out, f"{status}: {n_comp - n_bad}/{n_comp} components pass the weight checks; "
               f"{dual_ok}/{dual_total} duality checks pass (n={cfg.n}, d<={cfg.d})")
    return 0 if ok else 1


HANDLERS = {
    "components": cmd_components,
    "weights": cmd_weights,
    "blockform": cmd_blockform,
    "euler": cmd_euler,
    "integral": cmd_integral,
    "total": cmd_total,
    "series": cmd_series,
    "check": cmd_check,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = Config(args)
        return HANDLERS[cfg.command](cfg, out)
    except UsageError as exc:
        err.write(f"quotloc: usage error: {exc}\n")
        return 2
    except InvariantError as exc:
        err.write(f"quotloc: internal invariant violated: {exc}\n")
        return 1


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="quotloc: %(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
