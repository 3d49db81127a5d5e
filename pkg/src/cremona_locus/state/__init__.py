"""State management for the verification workflow."""

from .graph_state import VerifyState

__all__ = ["VerifyState"]
