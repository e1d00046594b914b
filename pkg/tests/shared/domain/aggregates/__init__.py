"""
Shared Domain Aggregate Tests Module.
"""
