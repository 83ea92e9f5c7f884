"""HTTP service and persistence layer."""

from .app import create_app, serve
from .config import ServiceConfig

__all__ = ["ServiceConfig", "create_app", "serve"]
