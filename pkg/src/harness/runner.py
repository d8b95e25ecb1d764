"""
Corpus scoring: formalize, refine, solve and score every problem.
Path: src/harness/runner.py
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import pandas as pd

from src.formal_lang import Formalization
from src.solver.config import SolverConfig
from src.solver.engine import Solution, solve
from src.text_parser.parser import parse_text_report
from src.utils.state_manager import StateManager

from .corpus import ProblemRecord
from .errors import CorpusError
from .refine import GiveUp, Refiner, refine_loop
from .scoring import close_enough, jaccard, majority_answer, score_choice, score_completion

logger = logging.getLogger(__name__)

CHOICE = "choice"
COMPLETION = "completion"
MODES = (CHOICE, COMPLETION)

COLUMNS = [
    "id", "status", "reason", "answer", "truth", "choice", "correct", "valid", "rounds",
    "edges", "edges_in_minimal", "compression", "wall_time", "jaccard", "pass_at_k", "major_at_k",
]


@dataclass
class ScoreOptions:
    """
    Settings of one scoring run.

    Args:
        mode: "choice" (nearest of four options) or "completion" (numeric answer)
        attempts: Formalize/solve attempts per problem, each with its own refiner seed
        seed: Base seed of the refiner and of the random choice fallback
        workers: Problems solved in parallel
        refiner: External formalizer, None to run without refinement
        max_refinements: Refiner rounds per attempt
        solver: Solver budgets
    """
    mode: str = COMPLETION
    attempts: int = 1
    seed: int = 0
    workers: int = 4
    refiner: Optional[Refiner] = None
    max_refinements: int = 5
    solver: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        if self.attempts < 1 or self.workers < 1:
            raise ValueError("attempts and workers must be positive")


@dataclass
class Attempt:
    status: str
    reason: str = ""
    answer: Optional[float] = None
    rounds: int = 0
    edges: int = 0
    edges_in_minimal: int = 0
    wall_time: float = 0.0
    formalization: Optional[Formalization] = None


def first_draft(record: ProblemRecord) -> Tuple[str, Union[str, Formalization]]:
    """(problem text, draft) where the draft is problem.txt or the text parser's output."""
    text = record.text()
    if record.problem_path is not None:
        return text, record.problem_path.read_text(encoding="utf-8")
    report = parse_text_report(text)
    if report.unmatched:
        logger.debug("%s: unmatched text %s", record.id, report.unmatched)
    return text, report.to_text()


def run_attempt(record: ProblemRecord, opts: ScoreOptions, attempt: int = 0) -> Attempt:
    """Refine the draft until consistent, then solve it."""
    text, draft = first_draft(record)
    refiner = opts.refiner.with_seed(opts.seed + attempt) if opts.refiner else None
    outcome = refine_loop(text, draft, refiner, opts.max_refinements)
    rounds = refiner.calls if refiner else 0
    if isinstance(outcome, GiveUp):
        return Attempt("inconsistent", "validation", rounds=outcome.rounds)

    result = solve(outcome, opts.solver)
    if isinstance(result, Solution):
        s = result.stats
        return Attempt("solved", "", float(result.value), rounds, s.edges, s.edges_in_minimal, s.wall_time, outcome)
    if hasattr(result, "stats"):
        s = result.stats
        return Attempt(result.status, result.reason, None, rounds, s.edges, 0, s.wall_time, outcome)
    return Attempt(result.status, "validation", rounds=rounds, formalization=outcome)


def _judge(record: ProblemRecord, opts: ScoreOptions, answer: Optional[float], salt: int) -> Tuple[bool, Optional[int]]:
    """(correct, chosen option index)"""
    if opts.mode == COMPLETION:
        return score_completion(answer, record.truth), None
    idx = score_choice(answer, record.choices, opts.seed + salt)
    return close_enough(float(record.choices[idx]), float(record.truth)), idx


def score_problem(record: ProblemRecord, opts: ScoreOptions) -> Dict[str, Any]:
    """
    Score one corpus problem.

    Returns:
        One report row; the first attempt fills the per-attempt columns

    Raises:
        CorpusError: meta.json lacks the truth (or choices) the mode needs
    """
    if record.truth is None:
        raise CorpusError(record.directory, "meta.json has no truth")
    if opts.mode == CHOICE and record.choices is None:
        raise CorpusError(record.directory, "meta.json has no choices")

    attempts = [run_attempt(record, opts, k) for k in range(opts.attempts)]
    first = attempts[0]
    correct, choice = _judge(record, opts, first.answer, 0)
    answers = [a.answer for a in attempts]
    gold = record.gold_literals()

    row = {
        "id": record.id,
        "status": first.status,
        "reason": first.reason,
        "answer": first.answer,
        "truth": record.truth,
        "choice": choice,
        "correct": correct,
        "valid": first.answer is not None,
        "rounds": first.rounds,
        "edges": first.edges,
        "edges_in_minimal": first.edges_in_minimal,
        "compression": round(first.edges_in_minimal / first.edges, 4) if first.edges else None,
        "wall_time": round(first.wall_time, 3),
        "jaccard": (float(jaccard(first.formalization.literals(), gold))
                    if gold is not None and first.formalization is not None else None),
        "pass_at_k": any(_judge(record, opts, a, k)[0] for k, a in enumerate(answers)),
        "major_at_k": _judge(record, opts, majority_answer(answers), 0)[0],
    }
    logger.info("%s: %s answer=%s correct=%s", record.id, row["status"], row["answer"], correct)
    return row


def summarize(report: pd.DataFrame) -> Dict[str, float]:
    """
    Corpus-level figures.

    accuracy is correct / problems, ARR is correct answers among valid ones
    (0 when nothing produced an answer).
    """
    n = len(report)
    if n == 0:
        return {"problems": 0, "accuracy": 0.0, "arr": 0.0, "pass_at_k": 0.0, "major_at_k": 0.0, "solved": 0}
    valid = report["valid"].astype(bool)
    correct_valid = int((report["correct"].astype(bool) & valid).sum())
    summary = {
        "problems": n,
        "solved": int((report["status"] == "solved").sum()),
        "accuracy": float(report["correct"].astype(bool).mean()),
        "arr": correct_valid / int(valid.sum()) if valid.any() else 0.0,
        "pass_at_k": float(report["pass_at_k"].astype(bool).mean()),
        "major_at_k": float(report["major_at_k"].astype(bool).mean()),
    }
    compression = pd.to_numeric(report["compression"], errors="coerce").dropna()
    if not compression.empty:
        summary["mean_compression"] = float(compression.mean())
    return summary


def run_key(corpus: Path, opts: ScoreOptions) -> str:
    return f"{corpus.name}:{opts.mode}:k{opts.attempts}:seed{opts.seed}"


def score_corpus(
    records: List[ProblemRecord],
    opts: ScoreOptions,
    state: Optional[StateManager] = None,
    run: str = "default",
) -> pd.DataFrame:
    """
    Score every record in a worker pool.

    Args:
        records: Corpus problems
        opts: Run settings
        state: Run state; rows already recorded under run are reused
        run: Run name inside the state file

    Returns:
        One row per problem in corpus order
    """
    done = state.completed(run) if state else {}
    todo = [r for r in records if r.id not in done]
    if done:
        logger.info("resuming %s: %d of %d problem(s) already scored", run, len(records) - len(todo), len(records))

    def work(record: ProblemRecord) -> Dict[str, Any]:
        row = score_problem(record, opts)
        if state:
            state.update_state(run, record.id, row)
        return row

    with ThreadPoolExecutor(max_workers=opts.workers) as pool:
        fresh = dict(zip((r.id for r in todo), pool.map(work, todo)))
    rows = [fresh[r.id] if r.id in fresh else done[r.id] for r in records]
    return pd.DataFrame(rows, columns=COLUMNS)
