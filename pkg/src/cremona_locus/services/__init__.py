"""Finite-field oracle services."""
