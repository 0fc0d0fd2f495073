"""Vertex-minor toolkit: circle graphs, semi-ordered Eulerian tours, and the
reduction chain from cubic Hamiltonicity down to vertex-minor search."""

from .errors import ResourceLimitError
from .formats import (
    bundle_chain_for,
    make_bundle,
    parse_bundle,
    parse_graph,
    parse_subset,
    parse_tour,
    parse_witness,
    parse_word,
    payload_digest,
    serialize_bundle,
    serialize_graph,
    serialize_subset,
    serialize_tour,
    serialize_witness,
    serialize_word,
    verify_bundle_chain,
)
from .euler import (
    EulerianTour,
    SoetCertificate,
    canonical_tour,
    consecutive_pairs,
    enumerate_euler_tours,
    find_euler_tour,
    induced_word,
    is_soet,
    iso_soet_decide,
    maximal_subwords,
    soet_search,
    tour_from_word,
)
from .graphs import (
    MultiGraph,
    SimpleGraph,
    connected_components,
    find_isomorphism,
    induced_subgraph,
    is_regular,
)
from .lc import (
    apply_lc_word,
    classify_star_or_complete,
    lc_equivalent,
    lc_orbit,
    lc_word_between,
    local_complement,
    pivot,
)
from .lc import delete_vertex
from .reduction import (
    build_soet_from_ham,
    canonical_cycle,
    extract_ham_from_soet,
    k3_expand,
    reduce_cubham_to_isosoet,
    reduce_isosoet_to_starvm,
    reduce_starvm_to_isovm,
    soet_subset_for_cycle,
    validate_ham_cycle,
)
from .solvers import (
    Decision,
    VmWitness,
    enumerate_hamiltonian_cycles,
    hamiltonian_decide,
    iso_vm_decide,
    labeled_vm_decide,
    star_vm_decide,
    verify_vm_witness,
    vertex_minor_closure,
    vm_oracle_via_tours,
)
from .words import (
    Dow,
    DowClass,
    alternance_graph,
    alternances,
    canonicalize,
    induced_subword,
    mirror,
    multigraph_from_word,
    word_delete,
    word_local_complement,
)

__all__ = [
    "Decision",
    "Dow",
    "DowClass",
    "EulerianTour",
    "MultiGraph",
    "ResourceLimitError",
    "SimpleGraph",
    "SoetCertificate",
    "VmWitness",
    "alternance_graph",
    "alternances",
    "apply_lc_word",
    "build_soet_from_ham",
    "bundle_chain_for",
    "canonical_cycle",
    "canonical_tour",
    "canonicalize",
    "classify_star_or_complete",
    "connected_components",
    "consecutive_pairs",
    "delete_vertex",
    "enumerate_euler_tours",
    "enumerate_hamiltonian_cycles",
    "extract_ham_from_soet",
    "find_euler_tour",
    "find_isomorphism",
    "hamiltonian_decide",
    "induced_subgraph",
    "induced_subword",
    "induced_word",
    "is_regular",
    "is_soet",
    "iso_soet_decide",
    "iso_vm_decide",
    "k3_expand",
    "labeled_vm_decide",
    "lc_equivalent",
    "lc_orbit",
    "lc_word_between",
    "local_complement",
    "make_bundle",
    "maximal_subwords",
    "mirror",
    "multigraph_from_word",
    "parse_bundle",
    "parse_graph",
    "parse_subset",
    "parse_tour",
    "parse_witness",
    "parse_word",
    "payload_digest",
    "pivot",
    "reduce_cubham_to_isosoet",
    "reduce_isosoet_to_starvm",
    "reduce_starvm_to_isovm",
    "serialize_bundle",
    "serialize_graph",
    "serialize_subset",
    "serialize_tour",
    "serialize_witness",
    "serialize_word",
    "soet_search",
    "soet_subset_for_cycle",
    "star_vm_decide",
    "tour_from_word",
    "validate_ham_cycle",
    "verify_bundle_chain",
    "verify_vm_witness",
    "vertex_minor_closure",
    "vm_oracle_via_tours",
    "word_delete",
    "word_local_complement",
]
