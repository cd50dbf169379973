"""Exact finite-group computations and a verification harness for subgroup embedding properties."""
