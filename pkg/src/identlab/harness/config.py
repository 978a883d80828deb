"""Run configuration: ``key = value`` files, tolerance manifests and precedence.

A configuration file holds one ``key = value`` pair per line; ``#`` starts
a comment.  Recognised keys:

``seed``, ``samples``, ``jobs``
    Integers for ``verify-all``.
``tol_rel``, ``tol_abs``
    Global tolerance override applied to every identity.
``budget``
    Maximum integrand evaluations per quadrature.
``timing``
    ``true`` to record wall time (makes reports non-reproducible).
``manifest``
    Path (relative to the config file) of a tolerance manifest.
``tol.<ID>.rel``, ``tol.<ID>.abs``
    Per-identity tolerance override.

A manifest uses the same syntax but only ``tol.<ID>.*`` keys.  Precedence,
highest first: command-line flags, per-identity overrides, the config
file's global keys, the registry defaults.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from ..numkernel import DEFAULT_BUDGET, IntegrationBudget, Tolerance

__all__ = ["RunConfig", "ConfigError", "load_config", "parse_kv_lines", "CONFIG_ENV"]

CONFIG_ENV = "IDENTLAB_CONFIG"


class ConfigError(ValueError):
    """Malformed configuration or manifest."""


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings for one harness invocation."""

    seed: int = 0
    samples: int = 1
    jobs: int = 1
    tol_rel: float | None = None
    tol_abs: float | None = None
    budget: int | None = None
    timing: bool = False
    overrides: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tol_rel is not None and not self.tol_rel > 0:
            raise ConfigError(f"tol_rel must be positive, got {self.tol_rel}")
        if self.tol_abs is not None and not self.tol_abs >= 0:
            raise ConfigError(f"tol_abs must be non-negative, got {self.tol_abs}")
        if self.samples < 0:
            raise ConfigError(f"samples must be non-negative, got {self.samples}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be at least 1, got {self.jobs}")

    def tolerance_for(self, id: str, default: Tolerance) -> Tolerance:
        """Effective tolerance of identity ``id``."""
        rel, abs_ = default.rel, default.abs
        o = self.overrides.get(id, {})
        rel, abs_ = o.get("rel", rel), o.get("abs", abs_)
        if self.tol_rel is not None:
            rel = self.tol_rel
        if self.tol_abs is not None:
            abs_ = self.tol_abs
        try:
            return Tolerance(rel, abs_)
        except ValueError as exc:
            raise ConfigError(f"{id}: {exc}") from None

    def integration_budget(self) -> IntegrationBudget:
        if self.budget is None:
            return DEFAULT_BUDGET
        if self.budget <= 0:
            raise ConfigError("budget must be positive")
        return replace(DEFAULT_BUDGET, max_evals=int(self.budget))

    def digest(self) -> str:
        """Stable hash of every setting that can change results."""
        d = asdict(self)
        d.pop("jobs")  # parallelism never changes results
        blob = json.dumps(d, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


_INT_KEYS = {"seed", "samples", "jobs", "budget"}
_FLOAT_KEYS = {"tol_rel", "tol_abs"}


def parse_kv_lines(text: str, source: str = "<config>") -> dict:
    """Parse ``key = value`` lines into a dict of strings."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key = value")
        k, v = (s.strip() for s in line.split("=", 1))
        if not k:
            raise ConfigError(f"{source}:{lineno}: empty key")
        out[k] = v
    return out


def _overrides(kv: dict, source: str) -> dict:
    out: dict = {}
    for k, v in kv.items():
        if not k.startswith("tol."):
            continue
        parts = k.split(".")
        if len(parts) != 3 or parts[2] not in ("rel", "abs"):
            raise ConfigError(f"{source}: bad override key {k!r} (expected tol.<ID>.rel or tol.<ID>.abs)")
        try:
            out.setdefault(parts[1], {})[parts[2]] = float(v)
        except ValueError:
            raise ConfigError(f"{source}: {k} must be a number") from None
    return out


def _bool(v: str) -> bool:
    s = v.lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {v!r}")


def load_config(path: str | os.PathLike | None = None) -> RunConfig:
    """Load a configuration file.

    ``path=None`` falls back to ``$IDENTLAB_CONFIG``; with neither set the
    defaults are returned.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV) or None
    if path is None:
        return RunConfig()
    p = Path(path)
    try:
        kv = parse_kv_lines(p.read_text(), str(p))
    except OSError as exc:
        raise ConfigError(f"cannot read config {p}: {exc}") from None
    fields: dict = {}
    overrides = {}
    if "manifest" in kv:
        mp = (p.parent / kv["manifest"]) if not Path(kv["manifest"]).is_absolute() else Path(kv["manifest"])
        try:
            mkv = parse_kv_lines(mp.read_text(), str(mp))
        except OSError as exc:
            raise ConfigError(f"cannot read manifest {mp}: {exc}") from None
        unknown = [k for k in mkv if not k.startswith("tol.")]
        if unknown:
            raise ConfigError(f"{mp}: manifest may only contain tol.<ID>.* keys, got {unknown[0]!r}")
        overrides.update(_overrides(mkv, str(mp)))
    for id_, o in _overrides(kv, str(p)).items():
        overrides.setdefault(id_, {}).update(o)
    for k, v in kv.items():
        if k.startswith("tol.") or k == "manifest":
            continue
        try:
            if k in _INT_KEYS:
                fields[k] = int(v)
            elif k in _FLOAT_KEYS:
                fields[k] = float(v)
            elif k == "timing":
                fields[k] = _bool(v)
            else:
                raise ConfigError(f"{p}: unknown key {k!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"{p}: bad value for {k}: {v!r}") from None
    return RunConfig(overrides=overrides, **fields)
