"""
Tests for Shared Infrastructure Event Bus.
"""
