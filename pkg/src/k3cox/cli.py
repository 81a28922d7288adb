"""Command-line front end.

    k3cox info   --family A --d 3
    k3cox count  --family A --d 3 --degree 5,5
    k3cox verify --family A --d 3 --bound 12 --seeds 1,2,3 --format json --output out.json
    k3cox verify --paper-counts

Exit status: 0 success, 1 a check failed, 2 bad configuration.  When
``K3COX_OUTPUT_DIR`` is set and ``--output`` is not given, verify reports are
written there.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import OutOfCatalog, OutOfCatalogError, catalog_entry
from .lattice import DivisorClass, LatticeError, h0_effective, is_effective, is_nef, lattice
from .monomials import EnumerationCapExceeded, count_monomials
from .polynomial import DEFAULT_MODULUS, CoefficientField, is_prime
from .presentation import MODES, ideal_slice_dim, instantiate_template
from .verify import VerificationReport, info, verify_paper_counts, verify_presentation

OUTPUT_ENV = "K3COX_OUTPUT_DIR"
FORMATS = ("json", "tsv", "text")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    family: str | None = None
    d: int | None = None
    bound: int | None = None
    seeds: list[int] = field(default_factory=lambda: [1])
    modulus: int | None = DEFAULT_MODULUS
    format: str = "text"
    output: Path | None = None
    mode: str = "auto"

    def __post_init__(self):
        if self.modulus is not None and not is_prime(self.modulus):
            raise ConfigError(f"modulus {self.modulus} is not prime")
        if self.bound is not None and self.bound < 1:
            raise ConfigError("bound must be at least 1")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")

    @property
    def field(self) -> CoefficientField:
        return CoefficientField(self.modulus)

    def as_dict(self) -> dict:
        return {"family": self.family, "d": self.d, "bound": self.bound, "seeds": list(self.seeds),
                "modulus": self.modulus, "mode": self.mode}


def parse_degree(text: str) -> DivisorClass:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree must look like 'a,b', got {text!r}") from None
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError(f"degree components must be nonnegative, got {text!r}")
    return DivisorClass(a, b)


def parse_seeds(text: str) -> list[int]:
    try:
        seeds = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be comma-separated integers, got {text!r}") from None
    if not seeds:
        raise argparse.ArgumentTypeError("at least one seed is required")
    return seeds


# -- rendering ------------------------------------------------------------------------------

def report_payload(report: VerificationReport, config: RunConfig) -> dict:
    return {
        "config": config.as_dict() | {"template": report.template},
        "catalog_metadata": report.metadata,
        "rows": [r.as_dict() for r in report.rows],
        "flags": list(report.flags),
        "summary": report.summary(),
        "pass": report.passed,
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cell(v) -> str:
    if isinstance(v, list):
        return ",".join(_cell(x) for x in v)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_tsv(payload: dict) -> str:
    rows = payload["rows"]
    if not rows:
        return ""
    cols = list(rows[0])
    lines = ["\t".join(cols)]
    lines += ["\t".join(_cell(r[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def render_text(payload: dict) -> str:
    lines = [f"template: {payload['config']['template']}"]
    for r in payload["rows"]:
        mark = "PASS" if r["match"] else "FAIL"
        if "item" in r:
            lines.append(f"{mark}  {r['item']}: expected {r['expected']}, observed {r['observed']}  [{r['claim']}]")
        else:
            extra = f" koszul={r['koszul']}" if r["koszul"] is not None else ""
            edge = " boundary" if r["boundary"] else ""
            lines.append(f"{mark}  seed={r['seed']} D=({r['degree'][0]},{r['degree'][1]}) monomials={r['monomials']} "
                         f"slice={r['slice_dim']} quotient={r['quotient']} h0={r['predicted']}{extra}{edge}")
    for flag in payload["flags"]:
        lines.append(f"FLAG  {flag}")
    lines.append(f"{'PASS' if payload['pass'] else 'FAIL'}  {payload['summary']}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "tsv": render_tsv, "text": render_text}


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path}")


# -- commands -------------------------------------------------------------------------------

def cmd_info(config: RunConfig, grid: int = 0) -> int:
    data = info(config.family, config.d)
    if data["validation"] != "ok":
        print(f"error: invalid intersection matrix {config.family}{config.d}: {data['validation']}", file=sys.stderr)
        return 2
    if grid:
        M = lattice(config.family, config.d)
        nef = set(map(tuple, data["nef_hilbert_basis"]))
        rows = []
        for b in range(grid, -1, -1):
            rows.append(" ".join("*" if (a, b) in nef else "o" if is_nef((a, b), M) else "."
                                 for a in range(grid + 1)))
        data["grid"] = rows
    if config.format == "json":
        _emit(render_json(data), config.output)
        return 0
    lines = [f"family {data['family']}, d = {data['d']}",
             f"intersection matrix: {data['matrix']}",
             f"validation: {data['validation']}",
             f"effective generators: {data['effective_generators']}",
             f"nef extremal rays: {data['nef_extremal_rays']}",
             f"nef Hilbert basis: {data['nef_hilbert_basis']}"]
    if "generator_lower_bound" in data:
        lines.append(f"generator lower bound: {data['generator_lower_bound']}")
    if "quoted_basis_discrepancy" in data:
        lines.append(f"quoted basis discrepancy: {data['quoted_basis_discrepancy']}")
    cat = data["catalog"]
    if "out_of_catalog" in cat:
        lines.append(f"catalog: out of catalog ({cat['out_of_catalog']})")
    else:
        lines.append(f"generators: {cat['generators']}")
        degs = cat["relation_degrees"]
        lines.append(f"relations: {len(degs)} at {degs}")
        for note in cat["notes"]:
            lines.append(f"note: {note}")
    if grid:
        lines.append("nef lattice points (top row b = max, columns a = 0..max; * basis, o nef, . other):")
        lines += data["grid"]
    _emit("\n".join(lines) + "\n", config.output)
    return 0


def cmd_count(config: RunConfig, D: DivisorClass) -> int:
    M = lattice(config.family, config.d)
    if not is_effective(D, M):
        raise ConfigError(f"{D} is not effective")
    entry = catalog_entry(config.family, config.d)
    data = {"family": M.family, "d": M.d, "degree": [D.a, D.b], "h0": h0_effective(D, M)}
    if isinstance(entry, OutOfCatalog):
        data["catalog"] = f"out of catalog: {entry.reason}"
    else:
        P = instantiate_template(entry, config.seeds[0], config.field, config.mode)
        data["monomials"] = count_monomials(entry.generators, D)
        data["slice"] = ideal_slice_dim(P, D)
        data["quotient"] = data["monomials"] - data["slice"]
        data["seed"] = config.seeds[0]
    if config.format == "json":
        _emit(render_json(data), config.output)
    else:
        _emit("\n".join(f"{k}: {_cell(v)}" for k, v in data.items()) + "\n", config.output)
    return 0


def cmd_verify(config: RunConfig, paper_counts: bool = False) -> int:
    if paper_counts:
        report = verify_paper_counts()
    else:
        report = verify_presentation(config.family, config.d, config.bound, config.seeds, config.field,
                                     config.mode)
    payload = report_payload(report, config)
    path = config.output
    if path is None and os.environ.get(OUTPUT_ENV):
        ext = {"json": "json", "tsv": "tsv", "text": "txt"}[config.format]
        path = Path(os.environ[OUTPUT_ENV]) / f"verify-{report.template}.{ext}"
    _emit(RENDERERS[config.format](payload), path)
    if not report.passed:
        bad = report.failing_rows()
        first = bad[0].as_dict() if bad else None
        print(f"verification failed: {first if first else report.flags[0]}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3cox", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="text"):
        p.add_argument("--family", type=str.upper, choices=["A", "B", "C"])
        p.add_argument("--d", type=int)
        p.add_argument("--format", choices=FORMATS, default=fmt_default)
        p.add_argument("--output", type=Path)
        p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS,
                       help="prime modulus of the coefficient field")
        p.add_argument("--rationals", action="store_true", help="compute over QQ instead of GF(p)")
        p.add_argument("--mode", choices=MODES, default="auto")

    p_info = sub.add_parser("info", help="lattice, cone and catalog data")
    common(p_info)
    p_info.add_argument("--grid", type=int, default=0, help="print nef lattice points up to this coordinate")

    p_count = sub.add_parser("count", help="monomial count, h0 and ideal slice at one degree")
    common(p_count)
    p_count.add_argument("--degree", type=parse_degree, required=True)
    p_count.add_argument("--seed", type=int, default=1)

    p_verify = sub.add_parser("verify", help="compare a presentation with Riemann-Roch")
    common(p_verify)
    p_verify.add_argument("--bound", type=int)
    p_verify.add_argument("--seeds", type=parse_seeds, default=[1, 2, 3])
    p_verify.add_argument("--paper-counts", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        needs_family = not (args.command == "verify" and args.paper_counts)
        if needs_family and (args.family is None or args.d is None):
            raise ConfigError("--family and --d are required")
        seeds = args.seeds if args.command == "verify" else [getattr(args, "seed", 1)]
        config = RunConfig(args.family, args.d, getattr(args, "bound", None), seeds,
                           None if args.rationals else args.modulus, args.format, args.output, args.mode)
        if args.command == "info":
            return cmd_info(config, args.grid)
        if args.command == "count":
            return cmd_count(config, args.degree)
        return cmd_verify(config, args.paper_counts)
    except (ConfigError, LatticeError, OutOfCatalogError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
