"""k-colored kernels in arc-colored semicomplete multipartite digraphs."""

from .chroma_paths import (
    PathWitness,
    WrongPartCount,
    check_distance_lemma,
    distance,
    k_closure,
    min_colors_path,
)
from .core_model import (
    ColorOutOfRange,
    ColoredDigraph,
    DigraphError,
    DuplicateArc,
    IntraPartArc,
    PartsNotPartition,
    StructureClass,
    VertexOutOfRange,
    asymmetric_subdigraph,
    build_digraph,
    classify,
    from_json,
    uncolored,
)
from .generators import (
    BudgetExceeded,
    GenParams,
    InvalidParams,
    coarsen_coloring,
    enumerate_smp,
    finest_short_cycle_coloring,
    random_colored_smp,
)
from .harness import (
    Campaign,
    CampaignReport,
    CorruptCheckpoint,
    InvalidCampaign,
    SearchCheckpoint,
    SearchReport,
    lemma_suite,
    search_conjecture,
    verify_theorem,
)
from .kernel_solver import (
    KernelResult,
    TooLarge,
    duchet_condition,
    find_k_colored_kernel,
    find_kernel,
    is_k_colored_kernel,
    is_kernel,
)
from .pattern_census import (
    HypothesisReport,
    PatternOccurrence,
    enumerate_cycles,
    enumerate_joined,
    hypothesis_report,
    is_3_quasi_transitive,
)

__version__ = "0.1.0"
