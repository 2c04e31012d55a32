"""Validation of candidate intersection arrays."""

from src.validators.array_validator import ArrayValidator

__all__ = ["ArrayValidator"]
