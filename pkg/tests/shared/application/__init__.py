"""
Shared Application Tests Module.
"""
