"""
Library tests package
"""
