"""
Answer and formalization scoring.
Path: src/harness/scoring.py
"""
from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from src.formal_lang import Literal, canonicalize

REL_TOL = 1e-3
ABS_TOL = 5e-4


def jaccard(predicted: Iterable[Literal], gold: Iterable[Literal]) -> Fraction:
    """
    |P ∩ Y| / |P ∪ Y| over canonical literals; literal order does not matter.

    Two empty sets score 1.
    """
    p = {canonicalize(l) for l in predicted}
    y = {canonicalize(l) for l in gold}
    union = p | y
    if not union:
        return Fraction(1)
    return Fraction(len(p & y), len(union))


def close_enough(answer: float, truth: float) -> bool:
    return abs(answer - truth) <= max(REL_TOL * abs(truth), ABS_TOL)


def score_choice(answer: Optional[float], options: Sequence[float], seed: Optional[int] = None) -> int:
    """
    Index of the option nearest to the answer.

    Args:
        answer: Solver output, None when unresolved
        options: The candidate values
        seed: Seed of the uniform fallback used when answer is None

    Returns:
        argmin |option - answer| (lowest index on ties), or a seeded random index
    """
    if answer is None:
        return int(np.random.default_rng(seed).integers(len(options)))
    distances = [abs(float(o) - answer) for o in options]
    return distances.index(min(distances))


def score_completion(answer: Optional[float], truth: float) -> bool:
    """Numerical equivalence within three decimals; unresolved answers are wrong."""
    return answer is not None and close_enough(float(answer), float(truth))


def majority_answer(answers: Iterable[Optional[float]]) -> Optional[float]:
    """Most frequent answer rounded to three decimals; earliest first on ties."""
    rounded = [round(a, 3) for a in answers if a is not None]
    if not rounded:
        return None
    counts = Counter(rounded)
    best = max(counts.values())
    return next(a for a in rounded if counts[a] == best)
