"""Taxonomy-guided LLM assistance for Qiskit code migration."""
from qmigrate.modes import PromptMode

__version__ = "0.1.0"

__all__ = ["PromptMode", "__version__"]
