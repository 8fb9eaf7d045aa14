"""Minimum cuts through isolating cuts on crossing lattices.

Solvers for subset edge cuts, hypergraph cuts, element connectivity and
weighted vertex connectivity, plus exhaustive oracles to check them.
"""

__version__ = "0.1.0"

from .core import INF, CutCertificate, ElementInstance, Hypergraph, InstanceError, WeightedGraph
from .edge import edge_isolating_cuts, min_st_edge_cut, steiner_min_cut
from .element import element_global_conn, element_isolating_cuts, element_min_cut
from .hyper import hyper_global_min_cut, hyper_isolating_cuts, hyper_min_st_cut
from .io import FormatError, parse_instance, serialize
from .lattice import SamplingParams, global_min_cut_sampling, isolating_cuts
from .maxflow import FlowNetwork, max_flow
from .setpair import SetPair
from .verify import verify_certificate
from .vertex import (
    NoCutError,
    VCParams,
    approx_vertex_connectivity,
    exact_vc_sparse,
    exact_vertex_connectivity,
    ni_sparsify,
    vertex_min_st_cut,
)

__all__ = [
    "INF",
    "CutCertificate",
    "ElementInstance",
    "FlowNetwork",
    "FormatError",
    "Hypergraph",
    "InstanceError",
    "NoCutError",
    "SamplingParams",
    "SetPair",
    "VCParams",
    "WeightedGraph",
    "approx_vertex_connectivity",
    "edge_isolating_cuts",
    "element_global_conn",
    "element_isolating_cuts",
    "element_min_cut",
    "exact_vc_sparse",
    "exact_vertex_connectivity",
    "global_min_cut_sampling",
    "hyper_global_min_cut",
    "hyper_isolating_cuts",
    "hyper_min_st_cut",
    "isolating_cuts",
    "max_flow",
    "min_st_edge_cut",
    "ni_sparsify",
    "parse_instance",
    "serialize",
    "steiner_min_cut",
    "verify_certificate",
    "vertex_min_st_cut",
]
