"""Intersection arrays: detection, intersection numbers, inequalities."""

from src.drg.params import (
    basic_inequalities,
    check_distance_regular,
    closed_form_array,
    hamming_array,
    intersection_numbers,
    johnson_array,
)

__all__ = [
    "basic_inequalities",
    "check_distance_regular",
    "closed_form_array",
    "hamming_array",
    "intersection_numbers",
    "johnson_array",
]
