"""Anisotropic mixed-norm Hardy/Campanato duality toolkit."""

__version__ = "0.1.0"
