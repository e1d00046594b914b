"""
Unit Tests for Shared Domain Exceptions.
"""
