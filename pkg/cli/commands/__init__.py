# ABOUTME: CLI commands package initialization
# ABOUTME: Marks directory as Python package
