"""Permutations as arc diagrams: crossing and nesting numbers, the involution swapping them and
exhaustive enumeration of their distributions."""

__version__ = '0.1.0'
