"""
Tests for Shared Infrastructure Repositories.
"""
