"""Equivariant cohomology of antisymmetric quadrics."""

__version__ = "1.0.0"
