from .catalog import CATALOG, PredicateSpec, lookup
from .errors import (
    ArityMismatch, FormalLanguageError, InvalidFact, LiteralSyntaxError,
    MissingGoal, MultipleGoals, UnknownPredicate,
)
from .literal import (
    Arg, Expr, Literal, Point, angle, apply, canonicalize, collect_points,
    figure, line, print_literal, walk,
)
from .parser import parse_literal, parse_logic_form
from .problem import Formalization, load_problem, parse_problem
from .notation import render_literal
