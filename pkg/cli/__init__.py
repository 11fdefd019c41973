# ABOUTME: CLI package initialization
# ABOUTME: Marks directory as Python package
