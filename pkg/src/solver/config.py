"""
Solver budgets and switches.
Path: src/solver/config.py
"""
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt

from src.config import load_config, section


class SolverConfig(BaseModel):
    """
    Budgets of one solve.

    Args:
        max_iterations: DR/AR rounds before giving up
        timeout: Wall-clock seconds per problem
        max_refinements: Validate -> feedback -> refine rounds in the harness
        beam_cap: Candidate supports kept per node during minimal extraction
        exact_subgraph_limit: Cone size up to which minimality is verified by enumeration
        premise_limit: Relevant equations up to which algebra premise sets are exactly minimal
        ascii: Plain ASCII notation in rendered solutions
        rel_tol: Relative equality tolerance of approximate values
        abs_tol: Absolute equality tolerance of approximate values
        root_grid_cells: Grid cells scanned for numeric roots of trigonometric equations
        root_xtol: Bisection tolerance of those roots
        deductive: Run the deductive (theorem) pass
        algebraic: Run the algebraic pass
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    max_iterations: PositiveInt = 100
    timeout: PositiveFloat = 1800.0
    max_refinements: PositiveInt = 5
    beam_cap: PositiveInt = 8
    exact_subgraph_limit: PositiveInt = 16
    premise_limit: PositiveInt = 24
    ascii: bool = False
    rel_tol: PositiveFloat = 1e-6
    abs_tol: PositiveFloat = 1e-9
    root_grid_cells: PositiveInt = 1024
    root_xtol: PositiveFloat = 1e-12
    deductive: bool = True
    algebraic: bool = True

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]] = None, **overrides) -> "SolverConfig":
        """Build from the solver/hypergraph/algebra sections of config.yaml."""
        config = load_config() if config is None else config
        values: Dict[str, Any] = {}
        solver = section(config, "solver")
        for name in ("max_iterations", "timeout", "max_refinements", "beam_cap", "ascii"):
            if name in solver:
                values[name] = solver[name]
        if "exact_subgraph_limit" in section(config, "hypergraph"):
            values["exact_subgraph_limit"] = section(config, "hypergraph")["exact_subgraph_limit"]
        algebra = section(config, "algebra")
        if "exact_premise_limit" in algebra:
            values["premise_limit"] = algebra["exact_premise_limit"]
        for name in ("rel_tol", "abs_tol", "root_grid_cells", "root_xtol"):
            if name in algebra:
                values[name] = algebra[name]
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
