"""Mappa Mundi: interactive mind-map synthesis with Shan-shui projection."""

__version__ = "0.1.0"
