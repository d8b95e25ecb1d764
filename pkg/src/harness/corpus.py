"""
Desk corpus: one directory per problem.
Path: src/harness/corpus.py

<corpus>/<id>/problem.txt   formalization (optional when text.txt exists)
<corpus>/<id>/text.txt      problem text (optional)
<corpus>/<id>/meta.json     {"choices": [4 numbers], "truth": number, "gold": [literal, ...]}
"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.formal_lang import Formalization, Literal, load_problem, parse_logic_form
from src.formal_lang.errors import FormalLanguageError

from .errors import CorpusError

logger = logging.getLogger(__name__)

PROBLEM_FILE = "problem.txt"
TEXT_FILE = "text.txt"
META_FILE = "meta.json"


class ProblemMeta(BaseModel):
    """meta.json of one corpus problem"""
    model_config = ConfigDict(extra="forbid")

    choices: Optional[List[float]] = Field(default=None, min_length=4, max_length=4)
    truth: Optional[float] = None
    gold: Optional[List[str]] = None


@dataclass(frozen=True)
class ProblemRecord:
    """
    One corpus entry.

    Args:
        id: Directory name
        directory: Problem directory
        meta: Parsed meta.json (empty when absent)
    """
    id: str
    directory: Path
    meta: ProblemMeta

    @property
    def problem_path(self) -> Optional[Path]:
        p = self.directory / PROBLEM_FILE
        return p if p.exists() else None

    @property
    def text_path(self) -> Optional[Path]:
        p = self.directory / TEXT_FILE
        return p if p.exists() else None

    @property
    def choices(self) -> Optional[List[float]]:
        return self.meta.choices

    @property
    def truth(self) -> Optional[float]:
        return self.meta.truth

    def text(self) -> str:
        return self.text_path.read_text(encoding="utf-8") if self.text_path else ""

    def formalization(self) -> Formalization:
        """
        Load problem.txt.

        Raises:
            FormalLanguageError: problem.txt does not parse
            CorpusError: the problem has no problem.txt
        """
        if self.problem_path is None:
            raise CorpusError(self.directory, f"no {PROBLEM_FILE}")
        return load_problem(self.problem_path)

    def gold_literals(self) -> Optional[List[Literal]]:
        if self.meta.gold is None:
            return None
        try:
            return [parse_logic_form(text) for text in self.meta.gold]
        except FormalLanguageError as e:
            raise CorpusError(self.directory / META_FILE, f"bad gold literal: {e}") from e


def load_meta(path: Path) -> ProblemMeta:
    if not path.exists():
        return ProblemMeta()
    try:
        return ProblemMeta(**json.loads(path.read_text(encoding="utf-8")))
    except json.JSONDecodeError as e:
        raise CorpusError(path, f"invalid JSON: {e}") from e
    except (TypeError, ValidationError) as e:
        raise CorpusError(path, f"invalid meta: {e}") from e


def load_corpus(directory: Union[str, Path]) -> List[ProblemRecord]:
    """
    Load every problem directory under a corpus root, sorted by id.

    Raises:
        CorpusError: missing root, a problem without problem.txt or text.txt,
            or a malformed meta.json
    """
    root = Path(directory)
    if not root.is_dir():
        raise CorpusError(root, "corpus directory not found")

    records = []
    for entry in sorted(p for p in root.iterdir() if p.is_dir()):
        if not (entry / PROBLEM_FILE).exists() and not (entry / TEXT_FILE).exists():
            raise CorpusError(entry, f"needs {PROBLEM_FILE} or {TEXT_FILE}")
        records.append(ProblemRecord(entry.name, entry, load_meta(entry / META_FILE)))
    logger.info("loaded %d problem(s) from %s", len(records), root)
    return records
