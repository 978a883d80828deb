"""Identity registry, runner, reports and CLI."""

from .config import RunConfig, load_config
from .domain import DomainError
from .registry import IdentityDescriptor, get_identity, list_identities
from .report import ReportDocument, render
from .runner import sweep, verify, verify_all

__all__ = [
    "DomainError",
    "IdentityDescriptor",
    "ReportDocument",
    "RunConfig",
    "get_identity",
    "list_identities",
    "load_config",
    "render",
    "sweep",
    "verify",
    "verify_all",
]
