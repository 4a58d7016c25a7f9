"""Relative automorphism groups of RAAGs, subgraph posets and finite coset complexes.

Graphs, specs, groups and families are plain dicts in the same JSON layout
the command-line tool reads.
"""

import json

from . import _raagcc
from ._raagcc import RaagccError, criterion_count

__all__ = [
    "RaagccError",
    "criterion_count",
    "example_graph",
    "rank",
    "maximal_parabolics",
    "decompose",
    "subgraph_homology",
    "complex_homology",
    "coset_complex",
    "run_criterion",
    "run_suite",
    "cli",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def example_graph(name, seed=0):
    """Built-in graph such as "diamonds:3" or "tree:random:12:7"."""
    return json.loads(_raagcc.example_graph(name, seed))


def _spec(graph_or_spec):
    if isinstance(graph_or_spec, str) and not graph_or_spec.lstrip().startswith("{"):
        return json.dumps(example_graph(graph_or_spec))
    return _dump(graph_or_spec)


def rank(spec):
    return _raagcc.rank(_spec(spec))


def maximal_parabolics(spec):
    return json.loads(_raagcc.maximal_parabolics(_spec(spec)))


def decompose(spec):
    """Tree, sorted base-case tokens, audit verdicts and a text rendering."""
    return json.loads(_raagcc.decompose(_spec(spec)))


def subgraph_homology(graph):
    return json.loads(_raagcc.subgraph_homology(_dump(graph)))


def complex_homology(faces):
    if isinstance(faces, list):
        faces = {"faces": faces}
    return json.loads(_raagcc.complex_homology(_dump(faces)))


def coset_complex(group, family):
    return json.loads(_raagcc.coset_complex(_dump(group), _dump(family)))


def run_criterion(criterion, seed=0):
    return json.loads(_raagcc.run_criterion(criterion, seed))


def run_suite(seed=0):
    return [run_criterion(i, seed) for i in range(1, criterion_count + 1)]


def cli(*args):
    """Runs the command-line front end in process; returns (exit_code, stdout, stderr)."""
    return _raagcc.cli([str(a) for a in args])
