"""Desk-scale homotopy colimits, siftedness certificates and homotopy algebras."""

__version__ = "0.1.0"
FORMAT_VERSION = "1"
