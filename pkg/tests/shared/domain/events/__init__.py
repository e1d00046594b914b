"""
Tests for Shared Domain Events.
"""
