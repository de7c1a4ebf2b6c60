"""Test darwinism."""
