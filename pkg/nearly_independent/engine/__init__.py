from nearly_independent.engine.goodness import EdgeVerdict, GoodnessReport, is_good, is_good_edge, is_good_graph
from nearly_independent.engine.memo import MemoTable
from nearly_independent.engine.sigma import (
    SigmaCount,
    SigmaMethod,
    induced_edge_count,
    sigma,
    sigma0_recursive,
    sigma1_recursive,
    sigma_bruteforce,
    sigma_components,
    sigma_distribution,
    sigma_pair,
)
