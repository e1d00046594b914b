"""
Shared Infrastructure Tests Module.
"""
