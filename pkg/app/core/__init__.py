"""
Core utilities: settings, logging and exceptions.

Import app.core.config and app.core.logging explicitly; loading settings reads
the environment and may raise ConfigurationError.
"""
from app.core import exceptions

__all__ = ["exceptions"]
