"""Command-line front end."""

from .app import main

__all__ = ['main']
