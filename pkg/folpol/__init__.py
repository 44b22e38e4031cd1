"""
folpol - Exact invariants of plane foliation singularities
"""

__version__ = "1.0.0"
