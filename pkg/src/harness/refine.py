"""
Validate -> feedback -> refine loop around an external formalizer.
Path: src/harness/refine.py

The refiner is any executable. It receives on stdin

    ### PROBLEM
    <problem text>
    ### FORMALIZATION
    <draft, one literal per line>
    ### FEEDBACK
    <validation feedback>

and writes a revised formalization on stdout, either bare or after a
"### FORMALIZATION" marker line. GEODEDUCE_SEED carries the attempt seed.
"""
import logging
import os
import shlex
import subprocess
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from tenacity import before_sleep_log, retry, retry_if_exception_type, stop_after_attempt, wait_exponential

from src.config import SEED_ENV_VAR
from src.formal_lang import Formalization, parse_problem
from src.formal_lang.errors import FormalLanguageError
from src.validation.report import build_sketch, format_feedback

from .errors import RefinerMalformedOutput, RefinerUnavailable

logger = logging.getLogger(__name__)

PROBLEM_MARKER = "### PROBLEM"
FORMALIZATION_MARKER = "### FORMALIZATION"
FEEDBACK_MARKER = "### FEEDBACK"


def compose_request(problem_text: str, draft: str, feedback: str) -> str:
    return "\n".join([
        PROBLEM_MARKER, problem_text.strip(),
        FORMALIZATION_MARKER, draft.strip(),
        FEEDBACK_MARKER, feedback.strip(),
    ]) + "\n"


def extract_formalization(output: str) -> str:
    """Text after the last FORMALIZATION marker up to the next marker, else all of it."""
    lines = output.splitlines()
    starts = [i for i, l in enumerate(lines) if l.strip() == FORMALIZATION_MARKER]
    if not starts:
        return output
    body: List[str] = []
    for line in lines[starts[-1] + 1:]:
        if line.startswith("### "):
            break
        body.append(line)
    return "\n".join(body)


class Refiner:
    """
    Subprocess wrapper for one external formalizer.

    Args:
        command: Command line (shell-split when given as a string)
        timeout: Seconds allowed per invocation
        seed: Exported as GEODEDUCE_SEED
    """

    def __init__(self, command: Union[str, Sequence[str]], timeout: float = 120, seed: Optional[int] = None):
        self.argv = shlex.split(command) if isinstance(command, str) else list(command)
        if not self.argv:
            raise RefinerUnavailable("empty refiner command")
        self.timeout = timeout
        self.seed = seed
        self.calls = 0

    def with_seed(self, seed: Optional[int]) -> "Refiner":
        return Refiner(self.argv, self.timeout, seed)

    @retry(
        stop=stop_after_attempt(3),
        wait=wait_exponential(multiplier=0.1, min=0.1, max=2),
        retry=retry_if_exception_type(OSError),
        before_sleep=before_sleep_log(logger, logging.WARNING),
        reraise=True,
    )
    def _launch(self, request: str) -> subprocess.CompletedProcess:
        env = dict(os.environ)
        if self.seed is not None:
            env[SEED_ENV_VAR] = str(self.seed)
        return subprocess.run(
            self.argv, input=request, capture_output=True, text=True,
            encoding="utf-8", timeout=self.timeout, env=env,
        )

    def refine(self, problem_text: str, draft: str, feedback: str) -> Formalization:
        """
        Run one refinement round.

        Raises:
            RefinerUnavailable: the command cannot be started
            RefinerMalformedOutput: non-zero exit, timeout or output that
                is not a formalization
        """
        self.calls += 1
        try:
            done = self._launch(compose_request(problem_text, draft, feedback))
        except subprocess.TimeoutExpired as e:
            raise RefinerMalformedOutput(f"refiner timed out after {e.timeout}s") from e
        except OSError as e:
            raise RefinerUnavailable(f"cannot start {self.argv[0]}: {e}") from e
        if done.returncode != 0:
            tail = done.stderr.strip().splitlines()[-1:] or [""]
            raise RefinerMalformedOutput(f"refiner exited with {done.returncode} {tail[0]}".strip())
        try:
            return parse_problem(extract_formalization(done.stdout))
        except FormalLanguageError as e:
            raise RefinerMalformedOutput(f"refiner output is not a formalization: {_parse_error(e)}") from e


@dataclass(frozen=True)
class GiveUp:
    """No consistent formalization within the refinement budget"""
    feedback: str
    rounds: int
    last_draft: str


def _parse_error(e: FormalLanguageError) -> str:
    line = getattr(e, "line", None)
    return f"line {line}: {e}" if line else str(e)


def check_draft(draft: Union[Formalization, str]) -> Tuple[Optional[Formalization], str]:
    """
    Parse and validate a draft.

    Returns:
        (formalization when consistent else None, feedback text)
    """
    if isinstance(draft, str):
        try:
            draft = parse_problem(draft)
        except FormalLanguageError as e:
            return None, f"ERROR: {_parse_error(e)}"
    _, report = build_sketch(draft)
    feedback = format_feedback(report)
    return (draft if report.consistent else None), feedback


def refine_loop(
    problem_text: str,
    draft: Union[Formalization, str],
    refiner: Optional[Refiner],
    max_refinements: int = 5,
) -> Union[Formalization, GiveUp]:
    """
    Resubmit a draft to the refiner until it validates.

    Args:
        problem_text: Natural-language problem handed to the refiner
        draft: First formalization (text that may not even parse)
        refiner: External formalizer, None to surface the first feedback
        max_refinements: Refiner invocations allowed

    Returns:
        The first consistent formalization, or GiveUp with the last feedback
    """
    text = draft.to_text() if isinstance(draft, Formalization) else draft
    good, feedback = check_draft(draft)
    if good is not None:
        return good
    if refiner is None:
        return GiveUp(feedback, 0, text)

    for round_no in range(1, max_refinements + 1):
        try:
            revised = refiner.refine(problem_text, text, feedback)
        except RefinerMalformedOutput as e:
            # the draft and its feedback are resent unchanged
            logger.warning("refinement round %d failed: %s", round_no, e)
            continue
        text = revised.to_text()
        good, feedback = check_draft(revised)
        if good is not None:
            logger.info("formalization consistent after %d refinement round(s)", round_no)
            return good
        logger.debug("round %d still inconsistent:\n%s", round_no, feedback)
    logger.info("giving up after %d refinement round(s)", max_refinements)
    return GiveUp(feedback, max_refinements, text)
