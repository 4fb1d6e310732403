"""Unit tests for plexlayout."""
