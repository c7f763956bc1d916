"""Exact Lie solvability / nilpotency toolkit for Leavitt path algebras and
Novikov algebras: python wrappers over the `_lienil` extension.

Every wrapper decodes the extension's JSON into plain dicts/lists.  Counts
that can be infinite (block sizes, pendant multiplicities) come back as
ints or the string ``"omega"``.
"""

import json

import _lienil

__all__ = [
    "classify",
    "decompose",
    "canonical_graph",
    "gl_verdicts",
    "truncated_novikov",
    "novikov_checks",
    "verify_embedding",
    "oracle_sweep",
]


def classify(graph_text, characteristic="2"):
    """Classify the graph's Leavitt path algebra as Lie solvable/nilpotent.

    ``characteristic`` is ``"2"`` or ``"not2"``.
    """
    return json.loads(_lienil.classify_json(graph_text, characteristic))


def decompose(graph_text, characteristic="2"):
    """Matrix-block decomposition; raises ValueError on non-solvable input."""
    return json.loads(_lienil.decompose_json(graph_text, characteristic))


def canonical_graph(graph_text):
    """Parse and re-serialize a graph description (idempotent)."""
    return _lienil.canonical_graph(graph_text)


def gl_verdicts(n, p):
    """Derived-series dims and Lie verdicts of gl(n, F_p)."""
    return json.loads(_lienil.gl_verdicts_json(n, p))


def truncated_novikov(n, low=2, field="Q"):
    """Structure constants (as a dict) of the truncated derivation algebra
    on basis x^low .. x^(n-1) with product a*(db/dx) mod x^n."""
    return json.loads(_lienil.truncated_novikov_json(n, low, field))


def novikov_checks(algebra, trials=25, seed=2024):
    """Run the central-chain check suite.

    ``algebra`` is a structure-constant dict (as from ``truncated_novikov``)
    or a JSON string.  Non-Novikov input is reported via the ``refusal``
    field rather than an exception.
    """
    if not isinstance(algebra, str):
        algebra = json.dumps(algebra)
    return json.loads(_lienil.novikov_checks_json(algebra, trials, seed))


def verify_embedding(which, field="Q"):
    """Verify one of the built-in 3x3 matrix-unit tables
    (``lemma33``, ``case1``, ``case2``) over ``Q`` or ``F<p>``."""
    return json.loads(_lienil.verify_embedding_json(which, field))


def oracle_sweep(max_vertices=2, max_edges=2, primes=None):
    """Exhaustive classifier-vs-structure-algebra consistency sweep."""
    return json.loads(
        _lienil.oracle_sweep_json(max_vertices, max_edges, primes or [])
    )
