"""
Test suite for the toolkit.
"""
