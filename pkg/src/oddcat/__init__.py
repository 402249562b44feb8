"""Exact verification of odd nilHecke, odd symmetric function and odd Grassmannian computations."""

__version__ = "0.1.0"
