from nearly_independent.verifier.checks import (
    CHECKERS,
    find_minimum,
    load_corpus,
    verify_good_cyclic_minimum,
    verify_good_cyclic_no_bridge,
    verify_good_cyclic_no_cutvertex,
    verify_main_theorem,
    verify_range,
    verify_sigma1_at_least_m,
    verify_star_minimum,
    verify_structural_claims,
)
from nearly_independent.verifier.corpus import (
    GraphCorpus,
    Provenance,
    enumerate_connected,
    enumerate_connected_labeled,
)
from nearly_independent.verifier.evaluate import GraphFacts, VerifyOptions, evaluate_corpus, evaluate_graph
from nearly_independent.verifier.report import Counterexample, Verdict, VerificationReport, merge_reports
