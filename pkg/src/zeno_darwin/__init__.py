"""Collision-model simulator for redundant records of a qubit system."""
