"""Right-angled Coxeter group toolkit.

Thin Python face of the compiled core: canonical (shortlex) words, graph-side
subgroup classifiers, dual van Kampen diagrams, Cayley-ball geometry, and the
full command-line interface via :func:`run`. Graphs travel as JSON strings
with ``vertices`` and ``edges`` fields; structured results come back as JSON
strings ready for :func:`json.loads`.
"""

from ._racg import (
    RacgError,
    ball,
    build_diagram,
    classify_parabolic,
    csupp_of,
    family,
    order_of,
    reduce,
    run,
)

__all__ = [
    "RacgError",
    "ball",
    "build_diagram",
    "classify_parabolic",
    "csupp_of",
    "family",
    "order_of",
    "reduce",
    "run",
]
