"""Exact verification of an integral reflection group in SL(5, Z)."""

import json

from ._core import (
    Error,
    InvalidInput,
    ParseError,
    ResourceLimit,
    __version__,
    abelianization,
    cartan_matrix,
    char_poly,
    coset_count,
    factor_pattern,
    reflection_generators,
    signature,
)
from ._core import run as _run

COMMANDS = (
    "diagram analyze",
    "lanner enumerate",
    "rep build",
    "rep verify",
    "density certify",
    "subgroups search",
    "geometry orbit",
    "geometry limitset",
    "witness pipeline",
)


def run(command, **options):
    """Runs a command and returns (report dict, exit code).

    Options mirror the command-line flags: diagram (text), cartan (JSON text),
    seed, out_dir, rank, set, and the budgets max_cosets, max_index,
    low_index_nodes, word_length, prime_bound, density_words, depth, samples,
    sample_length, kernel_radius.
    """
    text, code = _run(command, **options)
    return json.loads(text), code


__all__ = [
    "COMMANDS",
    "Error",
    "InvalidInput",
    "ParseError",
    "ResourceLimit",
    "__version__",
    "abelianization",
    "cartan_matrix",
    "char_poly",
    "coset_count",
    "factor_pattern",
    "reflection_generators",
    "run",
    "signature",
]
