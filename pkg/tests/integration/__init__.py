"""Integration tests for the plexlayout command line."""
