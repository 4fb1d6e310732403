"""Unstructured mesh data management: topology, distribution, orderings and data layout."""

__version__ = "0.1.0"
