# ABOUTME: Tests package initialization
# ABOUTME: Marks directory as Python package
