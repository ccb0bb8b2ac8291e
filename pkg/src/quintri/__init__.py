"""Quintic multigraphs with the triangle property: analytics, reductions, enumeration."""

from .mgraph import GraphEditor, LoopError, Multigraph
from .canon import CanonicalForm, are_isomorphic, canonical_form, certificate

__all__ = [
    "CanonicalForm",
    "GraphEditor",
    "LoopError",
    "Multigraph",
    "are_isomorphic",
    "canonical_form",
    "certificate",
]
