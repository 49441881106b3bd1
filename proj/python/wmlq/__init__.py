"""Maximum-weight many-to-one matching with lower and upper quotas."""

from ._core import (
    Edge,
    EvaluateResult,
    Instance,
    SolveResult,
    brute_force,
    evaluate,
    gen_random,
    gen_tight_a,
    gen_tight_b,
    parse_instance,
    render_instance,
    simplify,
    solve,
    validate,
)

__all__ = [
    "Edge",
    "EvaluateResult",
    "Instance",
    "SolveResult",
    "brute_force",
    "evaluate",
    "gen_random",
    "gen_tight_a",
    "gen_tight_b",
    "parse_instance",
    "render_instance",
    "simplify",
    "solve",
    "validate",
]
