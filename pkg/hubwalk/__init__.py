"""Quantum-walk and classical hub/authority centrality for directed graphs."""

__version__ = "0.1.0"
