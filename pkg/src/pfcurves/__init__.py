"""Pairing-friendly elliptic curve toolkit."""

__version__ = "0.1.0"
