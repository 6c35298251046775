"""
Core helpers shared by every package area: exceptions, bitset utilities and
input readers.
"""
