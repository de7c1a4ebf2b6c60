"""Zeno Darwin tests."""
