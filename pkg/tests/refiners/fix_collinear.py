"""
Stub refiner: drops Triangle declarations, answering the collinearity clash.
Path: tests/refiners/fix_collinear.py
"""
from _stream import read_request

request = read_request()
kept = [l for l in request.get("FORMALIZATION", "").splitlines() if not l.strip().startswith("Triangle(")]
print("### FORMALIZATION")
print("\n".join(kept))
