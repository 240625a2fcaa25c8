"""Exact polar ideals, Lê numbers and Milnor numbers of polynomial hypersurface germs."""

__version__ = "0.1.0"
