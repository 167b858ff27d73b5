"""Quasimonotone graph recognition toolkit."""

__version__ = "0.1.0"

from .graphs import (  # noqa: F401
    Bipartition,
    CycleWitness,
    Graph,
    GraphInputError,
    SizeError,
    VertexPath,
    make_graph,
)
from .monotone import (  # noqa: F401
    ChainDecomposition,
    MonotoneOrdering,
    brute_force_monotone,
    chain_decomposition,
    is_chain_graph,
    recognize_monotone,
    validate_staircase,
)
from .flaws import FlawWitness, catalog, find_flaw, is_pre  # noqa: F401
from .holes import (  # noqa: F401
    find_hole,
    is_short_hole,
    odd_cycle_to_hole,
    shorten_to_short_hole,
)
from .oracle import (  # noqa: F401
    oracle_is_prehole,
    oracle_odd_chordal,
    oracle_quasi,
    oracle_quasimonotone,
    predicate_library,
)
from .splitting import (  # noqa: F401
    RingDecomposition,
    build_ring,
    check_gv_gw_monotone,
    validate_ring,
)
from .prehole_search import (  # noqa: F401
    InternalConsistencyError,
    crossover_scan,
    find_small_prehole,
    triangle_pair_scan,
    two_disjoint_paths,
    verify_prehole,
)
from .recognizer import Verdict, recognize  # noqa: F401
