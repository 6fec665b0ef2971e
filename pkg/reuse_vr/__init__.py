"""Sample reuse for variance-reduced outer/sub-solver methods."""

__version__ = '0.1.0'
