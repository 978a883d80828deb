"""Running registered identities: single checks, batch runs and sweeps.

Randomized parameter points come from a counter-based generator
(Philox) keyed by ``(seed, id, point index)``, so any single point can be
reproduced in isolation and the result does not depend on run order or
on the number of worker processes.
"""

from __future__ import annotations

import hashlib
import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

import numpy as np

from .. import __version__
from ..numkernel import CheckResult, NumericalError, eval_counter
from .config import RunConfig
from .domain import DomainError, parse_value
from .registry import IdentityDescriptor, get_identity, list_identities
from .report import ReportDocument

__all__ = ["verify", "verify_all", "sweep", "point_rng", "parse_grid", "GridError"]


class GridError(ValueError):
    """Malformed sweep grid specification."""


def point_rng(seed: int, id: str, index: int) -> np.random.Generator:
    """Independent generator for point ``index`` of identity ``id``."""
    digest = hashlib.sha256(f"{int(seed)}|{id}|{int(index)}".encode()).digest()
    return np.random.Generator(np.random.Philox(key=int.from_bytes(digest[:16], "little")))


def _started_at() -> str:
    # Reports must be byte-reproducible, so the timestamp is taken from
    # SOURCE_DATE_EPOCH (default 0) rather than the wall clock.
    epoch = int(os.environ.get("SOURCE_DATE_EPOCH", "0"))
    return datetime.fromtimestamp(epoch, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def run_meta(config: RunConfig, **extra) -> dict:
    m = {"seed": config.seed, "version": __version__, "started_at": _started_at(), "config_hash": config.digest()}
    m.update(extra)
    return m


def _failed(desc: IdentityDescriptor, params: dict, reason: str) -> CheckResult:
    nan = float("nan")
    return CheckResult(None, None, nan, nan, False, dict(params), 0, note=reason)


def verify(id: str, params: dict | None = None, config: RunConfig | None = None) -> CheckResult:
    """Evaluate identity ``id`` at ``params`` (merged over its defaults).

    Raises
    ------
    KeyError
        Unknown id.
    DomainError
        A parameter lies outside the declared domain.

    Numerical failures (budget exhaustion, non-convergence, invalid
    intermediate values) do not raise: they yield a non-passing result
    whose ``note`` carries the reason.
    """
    config = config or RunConfig()
    desc = get_identity(id)
    resolved = desc.resolve(params)
    tol = config.tolerance_for(id, desc.tol)
    budget = config.integration_budget()
    t0 = time.perf_counter()
    with eval_counter() as box:
        try:
            res = desc.evaluator(tol=tol, budget=budget, **resolved)
        except (NumericalError, ValueError, ZeroDivisionError, OverflowError, FloatingPointError) as exc:
            res = _failed(desc, resolved, f"{type(exc).__name__}: {exc}")
    res.evals = int(box[0])
    res.id = desc.id
    res.status = desc.status
    res.params = dict(resolved)
    res.ms = round((time.perf_counter() - t0) * 1e3, 3) if config.timing else None
    return res


def _task(args):
    id, params, config = args
    return verify(id, params, config)


def _run(tasks, jobs: int) -> list[CheckResult]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_task, tasks, chunksize=1))


def _points(desc: IdentityDescriptor, seed: int, samples: int):
    pts = [None]
    if desc.sampler is not None:
        pts += [desc.sampler(point_rng(seed, desc.id, i)) for i in range(samples)]
    return pts


def verify_all(prefix: str = "", config: RunConfig | None = None, include_controls: bool = False) -> ReportDocument:
    """Run every identity whose id starts with ``prefix``.

    Each identity is evaluated at its defaults; identities with a sampler
    are additionally evaluated at ``config.samples`` seeded random points.
    Negative controls run only with ``include_controls=True``.  Results
    are ordered by id, then point index.
    """
    config = config or RunConfig()
    descs = [d for d in list_identities(prefix) if include_controls or d.status != "control"]
    tasks = [(d.id, p, config) for d in descs for p in _points(d, config.seed, config.samples)]
    results = _run(tasks, config.jobs)
    return ReportDocument(run_meta(config, filter=prefix, samples=config.samples, include_controls=include_controls), results)


def parse_grid(desc: IdentityDescriptor, spec: str, seed: int) -> list[dict]:
    """Expand a grid specification into parameter points.

    ``"a=0.1:0.9:5;x=pi/4,pi/3"``
        Cartesian product; ``lo:hi:n`` is ``n`` evenly spaced values
        (endpoints included), a comma list is taken literally.
    ``"random=N"``
        ``N`` draws from the identity's sampler, keyed by ``seed``.
    """
    spec = spec.strip()
    if spec.startswith("random="):
        try:
            n = int(spec.split("=", 1)[1])
        except ValueError:
            raise GridError("random=N needs an integer N") from None
        if n < 1:
            raise GridError("random=N needs N >= 1")
        if desc.sampler is None:
            raise GridError(f"{desc.id} has no sampler; give an explicit grid")
        return [desc.sampler(point_rng(seed, desc.id, i)) for i in range(n)]
    axes = []
    for part in filter(None, (s.strip() for s in spec.split(";"))):
        if "=" not in part:
            raise GridError(f"bad grid axis {part!r} (expected name=values)")
        name, vals = (s.strip() for s in part.split("=", 1))
        if name not in desc.domain:
            raise GridError(f"{desc.id} has no parameter {name!r} (known: {', '.join(desc.domain)})")
        if ":" in vals:
            bits = vals.split(":")
            if len(bits) != 3:
                raise GridError(f"range for {name} must be lo:hi:n")
            lo, hi, n = parse_value(bits[0]), parse_value(bits[1]), parse_value(bits[2])
            if not all(isinstance(v, (int, float)) for v in (lo, hi)) or not isinstance(n, int) or n < 1:
                raise GridError(f"bad range for {name}: {vals!r}")
            values = [float(v) for v in np.linspace(lo, hi, n)]
        else:
            values = [parse_value(v) for v in vals.split(",")]
        axes.append((name, values))
    if not axes:
        raise GridError("empty grid")
    names = [a[0] for a in axes]
    return [dict(zip(names, combo)) for combo in itertools.product(*(a[1] for a in axes))]


def sweep(id: str, grid: str, config: RunConfig | None = None) -> ReportDocument:
    """Evaluate ``id`` on every point of ``grid`` (see :func:`parse_grid`).

    Every point is domain-checked before any evaluation starts.
    """
    config = config or RunConfig()
    desc = get_identity(id)
    points = parse_grid(desc, grid, config.seed)
    for p in points:
        desc.resolve(p)
    results = _run([(id, p, config) for p in points], config.jobs)
    return ReportDocument(run_meta(config, sweep=id, grid=grid), results)

