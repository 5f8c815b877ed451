"""
Schema models and error types for bracketfix
"""
