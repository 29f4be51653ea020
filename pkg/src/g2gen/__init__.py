"""Torsion-subgroup generator toolkit for genus-2 Jacobians over small fields."""

__version__ = "0.1.0"
