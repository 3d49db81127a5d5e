"""Notation and runtime configuration helpers."""
