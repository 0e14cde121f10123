"""Exact Betti and Bass numbers of multigraded modules and their upper bounds."""

__version__ = "0.1.0"
