"""Network fragmentation and trust-weighted rewiring restoration."""

__version__ = "0.1.0"
