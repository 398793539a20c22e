"""Neighborhood-prime labeling workbench.

Construct, verify, and exhaustively search for neighborhood-prime
labelings: a labeling of a graph's vertices by 1..n is neighborhood-prime
when, at every vertex with two or more neighbors, the labels across the
neighborhood are collectively coprime.
"""

from .graphs import (
    Graph,
    GraphError,
    LobsterSpec,
    build_lobster,
    gen_complete,
    gen_cycle,
    gen_generalized_petersen,
    gen_grid,
    gen_lobster,
    gen_path,
    gen_star,
    gen_union,
)
from .formats import Graph6Error, export_dot, parse_graph6, write_graph6
from .numtheory import (
    CoprimeMatchingError,
    Interval,
    coprime_bijection,
    pillai_select,
    prime_pi,
    sieve_primes,
)
from .labeling import (
    Certificate,
    Labeling,
    NeighborhoodGraph,
    NOT_NPL,
    NPL,
    UNKNOWN,
    even_set_obstruction,
    is_neighborhood_prime,
    is_prime_labeling,
    lift_prime_to_npl,
    neighborhood_graphs,
    npl_iff_prime_2regular,
    unique_neighborhood_graph,
)
from .search import (
    Chord,
    HamiltonCycle,
    SearchBudget,
    find_chord_4k,
    find_cycle_missing_one,
    find_hamilton_cycle,
    find_odd_chord,
    search_npl,
    search_prime_labeling,
)
from .construct import (
    certify_sufficient,
    extend_with_pendants,
    label_circumference,
    label_cycle_standard,
    label_gp,
    label_grid,
    label_grid3,
    label_ham_chord_4k,
    label_ham_odd_chord,
    label_hamiltonian,
    label_large_degree,
    label_lobster_surplus,
    label_reduced_lobster,
    label_union_of_stars,
)
from .scan import ScanRecord, ScanReport, scan_graph6_stream
from .randomgraphs import ExperimentReport, experiment_npl_rate, sample_gnd, sample_gnp

__version__ = "0.1.0"
