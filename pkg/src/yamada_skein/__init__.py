"""Yamada and Kauffman skein invariants of spatial graph diagrams, with periodicity obstructions."""

__version__ = "0.1.0"
