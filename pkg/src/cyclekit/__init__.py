"""cyclekit: exact simple-cycle counting, extremal bounds and constructions."""

from .bounds import (BoundParams, BoundReport, ahrens, aldred_thomassen,
                     bounds_report, corollary_bound, max_product_partition,
                     multigraph_bounds, new_bound, vertex_cycle_bound)
from .constructions import (MultiCycleSpec, cnm_cycle_count, construct_cnm,
                            construct_gn, construct_hn,
                            construct_lower_bound_graph, path_count_P)
from .counting import (PairWeights, count_cycles, count_cycles_multi,
                       count_paths, cycles_through_vertex, pair_weights)
from .errors import (CapacityError, CycleKitError, DomainError,
                     GraphParseError, PreconditionError)
from .graphs import (DegreeStats, Multigraph, SimpleGraph, canonical_form,
                     component_count, degree_stats, is_connected,
                     parse_graph6, parse_multigraph, write_graph6,
                     write_multigraph)
from .reduction import (DeletionChoice, Quadripartition, reduce_max_degree,
                        reduce_to_bounded_degree, select_deletion_set,
                        select_quadripartition)
from .search import (ExtremalResult, enumerate_connected_graphs,
                     extremal_search, verify_bounds_on_corpus)

__version__ = "0.1.0"
