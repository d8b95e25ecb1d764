"""
Request parsing shared by the stub refiners.
Path: tests/refiners/_stream.py
"""
import sys
from typing import Dict


def read_request() -> Dict[str, str]:
    """Sections of the request on stdin keyed by marker name."""
    sections: Dict[str, list] = {}
    current = None
    for line in sys.stdin.read().splitlines():
        if line.startswith("### "):
            current = line[4:].strip()
            sections[current] = []
        elif current is not None:
            sections[current].append(line)
    return {name: "\n".join(lines) for name, lines in sections.items()}
