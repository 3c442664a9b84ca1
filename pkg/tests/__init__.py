"""
Test package for Early Stage GitHub Signals Platform.
"""
