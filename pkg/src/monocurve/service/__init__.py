"""HTTP service exposing the library over FastAPI."""

from .app import app

__all__ = ["app"]
