"""
Stub refiner: returns the draft unchanged.
Path: tests/refiners/echo.py
"""
from _stream import read_request

print(read_request().get("FORMALIZATION", ""))
