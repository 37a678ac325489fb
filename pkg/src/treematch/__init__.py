"""Exact matching statistics, extremal scans, and chain optimization on trees."""

from .counting import (
    brute_matchings,
    count_apm,
    count_k_sapm,
    count_maximal_matchings,
    count_sapm,
    fib,
    has_perfect_matching,
    hosoya_index,
    matching_profile,
    maximal_matching_degree_sums,
)
from .errors import (
    BadFamilyParams,
    InfeasibleParity,
    MixedKinds,
    NonPositiveParameter,
    NotATree,
    OddOrder,
    OrderTooLarge,
    OrderTooSmall,
    ParityMismatch,
    SpecParseError,
    TooLargeForOracle,
    TooLargeForSymbolic,
    TreematchError,
)
from .extremal import (
    BatteryReport,
    BoundFormula,
    CheckResult,
    ScanReport,
    Statistic,
    bound_value,
    f_table,
    resolve_statistic,
    run_theorem_battery,
    scan,
)
from .families import (
    FamilySpec,
    balanced_double_broom,
    double_broom,
    golden_dense,
    golden_sparse,
    k_spider_wheel,
    make_family,
    parse_family_spec,
    parse_family_tree,
    path,
    special_spider,
    spider,
    spider_chain,
    spider_trio,
    star,
    wide_spider,
)
from .hosoya import (
    GoldenValue,
    SymbolicIndex,
    WeightFamily,
    asymptotic_compare,
    balanced_product_bound,
    golden_value,
    parse_weight_family,
    weighted_hosoya_numeric,
    weighted_hosoya_symbolic,
)
from .spideropt import (
    ChainObjective,
    OptimizeResult,
    chain_count_polynomial,
    ksapm_chain_count,
    ksapm_growth_check,
    optimize_leaf_distribution,
)
from .treegen import TreeStream, enumerate_trees, partition_stream
from .trees import (
    Tree,
    build_tree,
    canonical_code,
    centroids,
    diameter,
    format_edge_list,
    isomorphic,
    one_subdivision,
    parse_edge_list,
)

__version__ = "0.1.0"
