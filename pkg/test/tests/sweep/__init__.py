"""Test sweep."""
