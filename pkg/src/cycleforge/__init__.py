"""Construction and exact verification of cubic graphs with a unique longest cycle."""

__version__ = "0.1.0"
