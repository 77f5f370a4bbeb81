"""
Tests package for the deformation toolkit.
"""
