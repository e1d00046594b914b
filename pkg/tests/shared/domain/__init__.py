"""
Shared Domain Tests Module.
"""
