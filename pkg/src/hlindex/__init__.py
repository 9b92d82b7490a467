"""hlindex: median eigenvalues of bipartite subcubic graphs.

Exact and float spectra, the imbalance calculus for ordered partitions, a
bounded search for imbalance-raising sets, and a verified catalog of the
small graphs the case analysis relies on.
"""

__version__ = "0.1.0"
