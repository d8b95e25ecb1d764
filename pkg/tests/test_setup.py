import importlib
import sys

import pytest

print(f"Python version: {sys.version}")


@pytest.mark.parametrize("module", [
    "lark", "sympy", "numpy", "scipy", "networkx", "pydantic", "pandas", "dotenv", "yaml", "click", "tenacity",
])
def test_stack_is_installed(module):
    assert importlib.import_module(module) is not None
