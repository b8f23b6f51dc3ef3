"""Finite groups as Cayley tables, their subgroup lattices, Fitting-like
subgroups, formations, K-F-subnormality and N-critical graphs."""
from .canonical import (
    InconsistencyError,
    canonical_report,
    center,
    f_tilde,
    fitting,
    frattini,
    generalized_fitting,
    hypercenter,
    is_nilpotent,
    is_soluble,
    is_supersoluble,
    socle,
)
from .checks import CHECK_IDS, Report, run_suite, search_boundary, verify
from .corpus import GroupSpec, load_corpus, named_group, parse_group_spec
from .formations import (
    ABELIAN,
    ALL,
    NILPOTENT,
    SOLUBLE,
    SUPERSOLUBLE,
    Formation,
    SigmaPartition,
    delta_f,
    f_hypercenter,
    f_residual,
    get_formation,
    int_f,
    is_f_central_factor,
    sigma_nilpotent,
)
from .kernel import FiniteGroup, GroupError, OrderBoundError, SubgroupHandle, generate_group
from .lattice import LatticeBoundError, SubgroupLattice, all_subgroups, chief_series
from .schmidt import NCriticalGraph, corpus_graph, is_schmidt, n_critical_graph, schmidt_signature
from .subnormality import (
    SubnormalChain,
    c_f,
    is_k_f_subnormal,
    is_r_k_f_subnormal,
    s_f,
    weak_k_f_subnormalizers,
)

__version__ = "0.1.0"
