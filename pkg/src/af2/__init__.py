"""af2: computational toolkit for the rank-2 free factor complex."""

__version__ = "0.1.0"
