"""Test suite for plexlayout."""
