"""
Tests for Shared Domain Services.
"""
