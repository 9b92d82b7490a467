"""Imbalance calculus, increasing-set search and the positive-fraction pipeline."""
