"""Exact computations for group-graded algebras over prime fields."""

__version__ = "0.1.0"
