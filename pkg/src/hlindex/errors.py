"""Exception types raised by hlindex.

Everything derives from HLIndexError so the CLI can map library failures to
exit status 2 in one place. Value-shaped problems also derive from ValueError.
"""

from __future__ import annotations


class HLIndexError(Exception):
    """Base class for all hlindex errors."""


class GraphError(HLIndexError, ValueError):
    """Invalid graph input: self-loop, index out of range, non-edge, bad cycle."""


class Graph6Error(GraphError):
    """Malformed or truncated graph6 text."""


class PartitionError(HLIndexError, ValueError):
    """Ordered partition does not fit the graph, or a moved set is not inside A."""


class SpectrumError(HLIndexError, ValueError):
    """Spectral query outside its domain (bound exceeded, k out of range, ...)."""


class CertificateError(HLIndexError):
    """A certificate failed replay. Always a bug, never an expected outcome."""


class SearchRefused(HLIndexError):
    """Search was asked to run on a component isomorphic to the Heawood graph."""


class GeneratorError(HLIndexError, ValueError):
    """Infeasible generator configuration or enumeration bound exceeded."""
