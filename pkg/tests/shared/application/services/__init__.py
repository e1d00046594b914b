"""
Shared Application Services Tests Module.
"""
