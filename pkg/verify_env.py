"""
Environment check: third-party stack, config, corpus and the solver's own tables.
Path: verify_env.py
"""
import importlib
import sys
from pathlib import Path

ROOT = Path(__file__).parent
STACK = ["lark", "sympy", "numpy", "scipy", "networkx", "pydantic", "pandas",
         "dotenv", "yaml", "click", "tenacity", "pytest", "black", "flake8"]


def check_stack() -> list:
    missing = []
    for package in STACK:
        try:
            importlib.import_module(package)
        except ImportError as e:
            print(f"[ERROR] {package}: {e}")
            missing.append(package)
    if not missing:
        print(f"[OK] {len(STACK)} packages import")
    return missing


def check_project() -> list:
    problems = []
    if not (ROOT / "config.yaml").exists():
        problems.append("config.yaml missing")
    corpus = ROOT / "data" / "corpus"
    desks = [p for p in corpus.iterdir() if p.is_dir()] if corpus.is_dir() else []
    if desks:
        print(f"[OK] corpus holds {len(desks)} problems")
    else:
        problems.append("data/corpus is empty or missing")

    sys.path.insert(0, str(ROOT))
    try:
        from src.formal_lang import parse_logic_form
        from src.theorems.registry import list_theorems

        parse_logic_form("Equals(LengthOf(Line(A,B)),5)")
        print(f"[OK] grammar loads, {len(list_theorems())} theorems registered")
    except Exception as e:  # noqa: BLE001
        problems.append(f"solver tables failed to load: {e}")
    for problem in problems:
        print(f"[ERROR] {problem}")
    return problems


if __name__ == "__main__":
    print("=" * 80)
    print(f"Python {sys.version.split()[0]}")
    print("=" * 80)
    missing = check_stack()
    problems = check_project() if not missing else []
    if missing or problems:
        sys.exit(1)
    print("[OK] environment ready")
