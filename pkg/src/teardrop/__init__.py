"""Quantum teardrops, quantum lens spaces and O(SU_q(2)) as exact *-algebras."""
__version__ = "0.1.0"
