"""Init file for spherelp."""

__version__ = "0.1.0"
