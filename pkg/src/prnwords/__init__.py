"""Permutation-representing words for trees, paths, even cycles and book graphs."""

from .bookgraph import book, book_numbers, book_permutations, cartesian_product
from .graphcore import (
    CertificateError,
    Graph,
    InvalidArgument,
    alternates,
    as_perm_sequence,
    concat,
    derive_graph,
    represents,
    represents_permutationally,
    restrict,
    reverse_perm,
    uniformity,
)
from .oracle import (
    BoundExceeded,
    ChordDiagram,
    SearchBounds,
    chord_intersection_graph,
    circle_search,
    conjecture_probe,
    induced_subgraph,
    is_comparability_small,
    is_permutation_graph_small,
    isomorphic,
    local_complement,
    prn_search,
)
from .pathcycle import cycle_permutations, cycle_prn, path_permutations, path_word
from .treebuilder import contains_s, root_and_label, tree_permutations, tree_prn

__version__ = "0.1.0"
