"""Test numerics."""
