"""
Stub refiner: answers with text that is not a formalization.
Path: tests/refiners/garbage.py
"""
import sys

sys.stdin.read()
print("I think the answer is 42 ((")
