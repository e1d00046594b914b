"""
Shared Tests Module.
"""
