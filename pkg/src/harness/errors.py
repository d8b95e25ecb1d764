"""
Harness errors.
Path: src/harness/errors.py
"""


class HarnessError(Exception):
    """Base class for corpus and refiner failures"""


class CorpusError(HarnessError):
    """A corpus directory or problem record is malformed"""

    def __init__(self, path, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class RefinerUnavailable(HarnessError):
    """The refiner command could not be launched"""


class RefinerMalformedOutput(HarnessError):
    """The refiner answered with something that is not a formalization"""
