"""Exact splitting measures of S_n, finite-field oracles and integer box densities.

Rational results come back as fractions.Fraction. Partitions are tuples of parts
in descending order; any function taking a partition also accepts bracket
notation such as "<1^2,2>".
"""

import json
from fractions import Fraction

from ._core import (
    DEFAULT_BUDGET,
    BudgetError,
    Error,
    InputError,
    ParseError,
    PoleError,
    bhargava_ramification,
    chebotarev_measure,
    class_size,
    cycle_poly,
    format_bracket,
    measure_table,
    necklace_poly,
    parse_bracket,
    partitions_of,
    sn_certify,
    splitting_measure_class,
    splitting_measure_element,
    vanishing_pairs,
)
from . import _core

__all__ = [
    "DEFAULT_BUDGET", "BudgetError", "Error", "InputError", "ParseError", "PoleError",
    "bhargava_ramification", "box_density", "chebotarev_measure", "class_size", "comparison",
    "cycle_poly", "format_bracket", "measure_table", "necklace_poly", "parse_bracket",
    "partitions_of", "sn_certify", "splitting_measure_class", "splitting_measure_element",
    "tally", "vanishing_pairs",
]


def _exact(node):
    # {"exact": "a/b", "decimal": ...} becomes a Fraction, recursively.
    if isinstance(node, dict):
        if set(node) == {"exact", "decimal"}:
            return Fraction(node["exact"])
        return {k: _exact(v) for k, v in node.items()}
    if isinstance(node, list):
        return [_exact(v) for v in node]
    return node


def tally(n, p, f=1, *, budget=DEFAULT_BUDGET, workers=1):
    """Classify every monic degree-n polynomial over F_{p^f}."""
    out = json.loads(_core.tally_json(n, p, f, budget, workers))
    out["nonsquarefree_target"] = int(out["nonsquarefree_target"])
    for row in out["squarefree"].values():
        row["target"] = int(row["target"])
    return out


def box_density(n, B, primes, types=None, *, samples=0, seed=0, certify=False,
                budget=DEFAULT_BUDGET, workers=1):
    """Density report over the box of monic integer polynomials with coefficients in (-B, B].

    samples=0 enumerates the whole box; otherwise that many polynomials are drawn.
    """
    raw = _core.box_json(n, B, list(primes), types, samples, seed, certify, budget, workers)
    return _exact(json.loads(raw))


def comparison(n, p):
    """Splitting measure at z=p next to the uniform measure, plus ramification rates."""
    out = json.loads(_core.comparison_json(n, p))
    for group in [out["ramification"], *out["classes"].values()]:
        for key in group:
            group[key] = Fraction(group[key])
    return out
