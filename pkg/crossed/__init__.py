"""
Finite crossed structures and their verification
"""
