"""
Configuration module for the toolkit.
"""
