"""
bracketfix - Demand Tournament Fixing solvers
"""

__version__ = "0.1.0"
__author__ = "Isaac & Claude"
