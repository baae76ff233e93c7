"""Integration tests for the curvature laboratory."""
