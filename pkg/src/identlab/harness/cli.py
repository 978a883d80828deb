"""Command-line interface: ``identlab list|verify|verify-all|sweep|report``.

Exit codes: 0 when no identity lands in the ``fail`` bucket (audit
discrepancies and failing negative controls never count), 1 otherwise,
2 for usage errors (unknown id, parameter outside its domain, bad grid or
config).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .. import __version__
from .config import ConfigError, load_config
from .domain import DomainError, parse_value
from .registry import list_identities
from .report import FORMATS, ReportDocument, render
from .runner import GridError, run_meta, sweep, verify, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(pairs) -> dict:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise UsageError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = parse_value(v)
    return out


def _add_output(p: argparse.ArgumentParser, default_fmt: str) -> None:
    p.add_argument("--format", choices=FORMATS, default=default_fmt, help=f"output format (default {default_fmt})")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")


def _global_options(parser: argparse.ArgumentParser, default) -> None:
    g = parser.add_argument_group("global options")
    g.add_argument("--tol-rel", type=float, default=default, help="override the relative tolerance of every identity")
    g.add_argument("--tol-abs", type=float, default=default, help="override the absolute tolerance of every identity")
    g.add_argument("--budget", type=int, default=default, help="maximum integrand evaluations per quadrature")
    g.add_argument("--config", metavar="PATH", default=default, help="key=value config file (default: $IDENTLAB_CONFIG)")
    g.add_argument(
        "--timing", action="store_true", default=default, help="record wall time per check (reports stop being reproducible)"
    )


def build_parser() -> argparse.ArgumentParser:
    # Global options are accepted before or after the subcommand; the
    # subcommand copies use SUPPRESS so they do not reset earlier values.
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="identlab", description="Verify registered special-function identities.")
    _global_options(ap, None)
    ap.add_argument("--version", action="version", version=f"identlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[common], help="list registered identities")
    p.add_argument("--filter", default="", metavar="PREFIX", help="only ids starting with PREFIX")
    p.add_argument("--verbose", "-v", action="store_true", help="show defaults and parameter domains")

    p = sub.add_parser("verify", parents=[common], help="verify one identity")
    p.add_argument("id")
    p.add_argument("--param", "-p", action="append", metavar="K=V", help="parameter value (repeatable); e.g. a=6, x=pi/4")
    _add_output(p, "text")

    p = sub.add_parser("verify-all", parents=[common], help="verify every registered identity")
    p.add_argument("--filter", default="", metavar="PREFIX", help="only ids starting with PREFIX")
    p.add_argument("--seed", type=int, help="seed for the random points (default 0)")
    p.add_argument("--samples", type=int, help="random points per identity with a sampler (default 1)")
    p.add_argument("--jobs", type=int, help="worker processes (default 1)")
    p.add_argument("--include-controls", action="store_true", help="also run the negative controls")
    _add_output(p, "json")

    p = sub.add_parser("sweep", parents=[common], help="evaluate one identity on a parameter grid")
    p.add_argument("id")
    p.add_argument("--grid", required=True, help="'a=0.1:0.9:5;x=pi/4,pi/3' or 'random=N'")
    p.add_argument("--seed", type=int, help="seed for random=N grids (default 0)")
    p.add_argument("--jobs", type=int, help="worker processes (default 1)")
    _add_output(p, "json")

    p = sub.add_parser("report", parents=[common], help="convert a saved JSON report (or run verify-all and report it)")
    p.add_argument("--in", dest="inp", metavar="PATH", help="saved JSON report; omitted: run verify-all")
    p.add_argument("--filter", default="", metavar="PREFIX", help="verify-all filter when --in is omitted")
    p.add_argument("--seed", type=int, help="verify-all seed when --in is omitted")
    _add_output(p, "text")
    return ap


def _config(args):
    cfg = load_config(args.config)
    upd = {}
    for name in ("tol_rel", "tol_abs", "budget", "timing", "seed", "samples", "jobs"):
        v = getattr(args, name, None)
        if v is not None:
            upd[name] = v
    cfg = replace(cfg, **upd)
    cfg.integration_budget()  # validate early
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _list(args) -> int:
    for d in list_identities(args.filter):
        print(f"{d.id:28s} {d.status:7s} {d.module:13s} {d.anchor}")
        if args.verbose:
            for k, dom in d.domain.items():
                print(f"    {k} = {d.defaults[k]!r:24s} {dom.describe()}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _list(args)
        cfg = _config(args)
        if args.command == "verify":
            res = verify(args.id, _params(args.param), cfg)
            doc = ReportDocument(run_meta(cfg, verify=args.id), [res])
        elif args.command == "verify-all":
            doc = verify_all(args.filter, cfg, include_controls=args.include_controls)
        elif args.command == "sweep":
            doc = sweep(args.id, args.grid, cfg)
        else:
            if args.inp:
                try:
                    doc = ReportDocument.from_json(Path(args.inp).read_text())
                except (OSError, ValueError, KeyError) as exc:
                    raise UsageError(f"cannot read report {args.inp}: {exc}") from None
            else:
                doc = verify_all(args.filter, cfg)
        _emit(render(doc, args.format), args.out)
        return doc.exit_code
    except KeyError as exc:
        print(f"identlab: error: {exc.args[0]}", file=sys.stderr)
    except (DomainError, GridError, ConfigError, UsageError) as exc:
        print(f"identlab: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
