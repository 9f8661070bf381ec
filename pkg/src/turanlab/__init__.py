"""Exact counting, enumeration and certificate search for generalised Turán problems."""
from .constructions import (
    BlowupSpec, biclique, blown_path, bowtie, clique, cycle, double_star, end_blown_path_power,
    graph_power, materialize, parse_graph_expr, path, star, turan, unbalanced_cycle_power_host,
)
from .errors import ArgumentError, CapacityError, Graph6Error, ParseError, PreconditionError, TuranLabError
from .graph import Graph, automorphism_count, chromatic_number, count_copies, count_embeddings
from .homs import count_copies_blowup, count_embeddings_blowup, hom_exists
from .optimizer import best_multipartite
from .oracle import enumerate_graphs, ex_oracle

__version__ = "0.1.0"
