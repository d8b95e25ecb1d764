"""
Solve every desk corpus problem and check each solution's step chain.
Path: scripts/test/verify_corpus.py
"""
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.config import load_config, resolve_path, section
from src.harness.corpus import load_corpus
from src.harness.scoring import score_completion
from src.solver.config import SolverConfig
from src.solver.engine import Solution, solve
from src.solver.render import check_solution
from src.utils.logger import setup_logging


def main():
    config = load_config()
    setup_logging("WARNING")
    corpus = resolve_path(section(config, "paths").get("corpus", "./data/corpus"))
    cfg = SolverConfig.from_config(config)

    print("=" * 80)
    print(f"Verifying {corpus}")
    print("=" * 80)

    failures = 0
    for record in load_corpus(corpus):
        if record.problem_path is None:
            print(f"[WARN] {record.id}: no problem.txt, skipped")
            continue
        result = solve(record.formalization(), cfg)
        if not isinstance(result, Solution):
            print(f"[ERROR] {record.id}: {result.status}")
            failures += 1
            continue
        problems = check_solution(result)
        if problems or not score_completion(float(result.value), record.truth):
            print(f"[ERROR] {record.id}: value {float(result.value):.3f}, truth {record.truth}")
            for p in problems:
                print(f"        {p}")
            failures += 1
        else:
            print(f"[OK] {record.id}: {float(result.value):.3f} in {len(result.steps)} step(s)")

    print("-" * 80)
    if failures:
        print(f"[ERROR] {failures} problem(s) failed")
        sys.exit(1)
    print("Verification SUCCESS.")


if __name__ == "__main__":
    main()
