"""Exact line geometry and classical quartic surfaces."""

__version__ = "0.1.0"
