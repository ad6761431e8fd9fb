"""Exact monotone path polytopes of cross-polytopes."""
