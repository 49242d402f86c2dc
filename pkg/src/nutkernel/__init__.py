"""Exact nullspace classification, constructions and censuses of nut digraphs."""

from .digraph import (Digraph, UndirectedGraph, as_symmetric_digraph,
                      cartesian_product, complete_graph, degrees,
                      delete_vertex, dicycle, from_arcs, graph_from_edges,
                      is_bipartite, is_connected, is_diregular, is_oriented,
                      is_strongly_connected, reverse, underlying)
from .linalg import (KernelBasis, RatMatrix, adjacency_matrix,
                     eigenspace_basis, full_vector_witness, intersect,
                     kernel_basis, rank)
from .spectral import (Gadget, NutReport, VertexProfile, as_gadget, classify,
                       classify_deletion, cokernel, core_vertices, kernel,
                       local_sums, pm_one_kernel)
from .families import circulant, d_family, dicycle_product, m_family
from .constructions import (BaseDigraph, UndirectedGadget, coalesce,
                            coalesce_gadgets, crossover, gadget_from_ambi,
                            multiplier, subdivide_arc, undirected_gadget,
                            undirected_multiplier, validate_base)
from .enumeration import (CensusRow, GenConstraints, automorphism_group,
                          canonical_digraph, census, gen_connected_graphs,
                          is_core_graph, is_nut_graph, orientations)
from .formats import (emit_digraph6, emit_graph6, emit_report,
                      parse_digraph6, parse_edge_list, parse_graph6)

__version__ = "0.1.0"
