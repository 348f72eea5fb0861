"""Linear network coding for single-source multicast, gammoids and field lifting."""

__version__ = "0.1.0"
