# ABOUTME: CLI tests package initialization
# ABOUTME: Marks directory as Python package
