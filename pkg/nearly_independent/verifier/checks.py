"""
Проверки утверждений о σ₁ на корпусе связных графов одного порядка.

Каждая проверка вычисляет (или берёт из кэша корпуса) факты о графах и
возвращает VerificationReport: контрпримеры с наблюдёнными значениями и
список графов, на которых достигается равенство.
"""
import time
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from loguru import logger

from nearly_independent.core.canonical import canonical_key
from nearly_independent.core.families import complete, complete_bipartite, star
from nearly_independent.core.graph import Graph, degree_profile
from nearly_independent.core.graph6 import from_graph6
from nearly_independent.source.errors import NoGraphs, Unsupported
from nearly_independent.source.settings import (
    MAX_BUILTIN_ORDER,
    MAX_VERIFY_ORDER,
    STATEMENT_BRIDGE,
    STATEMENT_CUT_VERTEX,
    STATEMENT_GOOD_MINIMUM,
    STATEMENT_MAIN,
    STATEMENT_SIZE,
    STATEMENT_STAR,
    STATEMENT_STRUCTURE,
    STATEMENTS,
    get_limits,
)
from nearly_independent.verifier.corpus import GraphCorpus, enumerate_connected
from nearly_independent.verifier.evaluate import GraphFacts, VerifyOptions, evaluate_corpus
from nearly_independent.verifier.report import Counterexample, Verdict, VerificationReport, merge_reports

FactsFilter = Callable[[GraphFacts], bool]

CLAUSE_FULL_DEGREE = "full-degree"
CLAUSE_MIN_DEGREE_THREE = "min-degree-three"
CLAUSE_MAX_DEGREE_NEAR_FULL = "max-degree-near-full"
CLAUSE_DEGREE_TWO_PROFILE = "degree-two-profile"
CLAUSE_FULL_NEIGHBORS_DEGREE_TWO = "full-neighbors-degree-two"
CLAUSE_TWO_DEGREE_CLASSES = "two-degree-classes"
CLAUSES = (
    CLAUSE_FULL_DEGREE,
    CLAUSE_MIN_DEGREE_THREE,
    CLAUSE_MAX_DEGREE_NEAR_FULL,
    CLAUSE_DEGREE_TWO_PROFILE,
    CLAUSE_FULL_NEIGHBORS_DEGREE_TWO,
    CLAUSE_TWO_DEGREE_CLASSES,
)


def cyclic_lower_bound(n: int) -> int:
    """Наименьшее σ₁ среди связных графов порядка n с циклом: n при n = 3, 2n − 4 при n ≥ 4."""
    return n if n == 3 else 2 * n - 4


def cyclic_extremal_graph(n: int) -> Graph:
    return complete(3) if n == 3 else complete_bipartite(2, n - 2)


def _key(graph: Graph) -> str:
    return canonical_key(graph).decode("ascii")


def _counterexample(facts: GraphFacts, **extra) -> Counterexample:
    observed = {"n": facts.n, "m": facts.m, "sigma1": facts.sigma1, "good": int(facts.good)}
    observed.update(extra)
    return Counterexample(graph6=facts.key, observed=observed)


def _audit_counterexamples(facts: Iterable[GraphFacts]) -> List[Counterexample]:
    return [_counterexample(f, brute=f.audit_sigma1, reason="audit") for f in facts if f.audit_mismatch]


def _exact_witnesses(
        witnesses: List[GraphFacts], expected: Graph, reason: str
) -> List[Counterexample]:
    """Контрпримеры, если множество графов с равенством не совпадает с {expected}."""
    expected_key = _key(expected)
    found = []
    for facts in witnesses:
        if facts.key != expected_key:
            found.append(_counterexample(facts, reason=reason))
    if all(facts.key != expected_key for facts in witnesses):
        found.append(Counterexample(graph6=expected_key, observed={"n": expected.n, "reason": "missing-extremal"}))
    return found


def _report(
        statement: str,
        corpus: GraphCorpus,
        facts: List[GraphFacts],
        started: float,
        counterexamples: List[Counterexample],
        witnesses: Iterable[GraphFacts],
        clauses: Optional[Dict[str, Verdict]] = None,
) -> VerificationReport:
    report = VerificationReport(
        statement=statement,
        n_min=corpus.n,
        n_max=corpus.n,
        graphs_checked=len(facts),
        counterexamples=sorted(counterexamples + _audit_counterexamples(facts), key=Counterexample.sort_key),
        witnesses=sorted({f.key for f in witnesses}),
        clauses=clauses or {},
        elapsed=time.perf_counter() - started,
    )
    log = logger.success if report.passed else logger.warning
    log(
        f" - {statement} n={corpus.n}: {report.verdict.value}, графов {report.graphs_checked}, "
        f"контрпримеров {len(report.counterexamples)}, {report.elapsed:.2f} с"
    )
    return report


def find_minimum(
        corpus: GraphCorpus,
        predicate: Optional[FactsFilter] = None,
        options: Optional[VerifyOptions] = None,
) -> Tuple[int, List[str]]:
    """Наименьшее σ₁ среди графов корпуса, прошедших фильтр, и канонические ключи всех графов, где оно достигается."""
    facts = [f for f in evaluate_corpus(corpus, options) if predicate is None or predicate(f)]
    if not facts:
        raise NoGraphs(f"В корпусе порядка {corpus.n} нет графов, удовлетворяющих фильтру")
    lowest = min(f.sigma1 for f in facts)
    return lowest, sorted({f.key for f in facts if f.sigma1 == lowest})


def verify_sigma1_at_least_m(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """σ₁(G) ≥ m, равенство тогда и только тогда, когда G хороший. Графы без рёбер не рассматриваются."""
    started = time.perf_counter()
    facts = [f for f in evaluate_corpus(corpus, options) if f.m >= 1]
    counterexamples = [
        _counterexample(f) for f in facts if f.sigma1 < f.m or (f.sigma1 == f.m) != f.good
    ]
    witnesses = [f for f in facts if f.sigma1 == f.m]
    return _report(STATEMENT_SIZE, corpus, facts, started, counterexamples, witnesses)


def verify_star_minimum(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """σ₁(G) ≥ n − 1, равенство только для звезды K_{1,n−1}."""
    started = time.perf_counter()
    facts = evaluate_corpus(corpus, options) if corpus.n >= 2 else []
    bound = corpus.n - 1
    counterexamples = [_counterexample(f) for f in facts if f.sigma1 < bound]
    witnesses = [f for f in facts if f.sigma1 == bound]
    if facts:
        counterexamples += _exact_witnesses(witnesses, star(corpus.n), reason="unexpected-equality")
    return _report(STATEMENT_STAR, corpus, facts, started, counterexamples, witnesses)


def verify_good_cyclic_no_bridge(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """У хорошего графа с циклом нет мостов."""
    started = time.perf_counter()
    facts = evaluate_corpus(corpus, options)
    covered = [f for f in facts if f.good and f.cyclic]
    counterexamples = [_counterexample(f, bridges=f.bridge_count) for f in covered if f.bridge_count]
    return _report(STATEMENT_BRIDGE, corpus, facts, started, counterexamples, covered)


def verify_good_cyclic_no_cutvertex(
        corpus: GraphCorpus, options: Optional[VerifyOptions] = None
) -> VerificationReport:
    """У хорошего графа с циклом нет точек сочленения."""
    started = time.perf_counter()
    facts = evaluate_corpus(corpus, options)
    covered = [f for f in facts if f.good and f.cyclic]
    counterexamples = [
        _counterexample(f, cut_vertices=f.cut_vertex_count) for f in covered if f.cut_vertex_count
    ]
    return _report(STATEMENT_CUT_VERTEX, corpus, facts, started, counterexamples, covered)


def verify_main_theorem(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """
    Связный граф порядка n ≥ 3 с циклом: σ₁ ≥ n при n = 3 и σ₁ ≥ 2n − 4 при n ≥ 4,
    равенство только для K₃ и K_{2,n−2}.
    """
    started = time.perf_counter()
    facts = [f for f in evaluate_corpus(corpus, options) if f.cyclic] if corpus.n >= 3 else []
    bound = cyclic_lower_bound(corpus.n)
    counterexamples = [_counterexample(f, bound=bound) for f in facts if f.sigma1 < bound]
    witnesses = [f for f in facts if f.sigma1 == bound]
    if facts:
        counterexamples += _exact_witnesses(witnesses, cyclic_extremal_graph(corpus.n), reason="unexpected-equality")
    return _report(STATEMENT_MAIN, corpus, facts, started, counterexamples, witnesses)


def _structure_violations(facts: GraphFacts) -> List[str]:
    """Нарушенные структурные утверждения для одного графа (n ≥ 4)."""
    n = facts.n
    bound = 2 * n - 4
    violated = []
    if facts.cyclic and facts.max_degree == n - 1 and facts.sigma1 <= bound:
        violated.append(CLAUSE_FULL_DEGREE)
    if facts.cyclic and facts.min_degree >= 3 and facts.sigma1 <= bound:
        violated.append(CLAUSE_MIN_DEGREE_THREE)
    if not (facts.good and facts.min_degree == 2):
        return violated
    if facts.max_degree < n - 2:
        violated.append(CLAUSE_MAX_DEGREE_NEAR_FULL)
    if facts.max_degree != n - 2:
        return violated

    graph = from_graph6(facts.graph6)
    profiles = [degree_profile(graph, v) for v in range(n)]
    if any(p.degree == 2 and p.neighbor_degrees != (n - 2, n - 2) for p in profiles):
        violated.append(CLAUSE_DEGREE_TWO_PROFILE)
    if any(p.degree == n - 2 and set(p.neighbor_degrees) != {2} for p in profiles):
        violated.append(CLAUSE_FULL_NEIGHBORS_DEGREE_TWO)
    if any(p.degree not in (2, n - 2) for p in profiles):
        violated.append(CLAUSE_TWO_DEGREE_CLASSES)
    return violated


def verify_structural_claims(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """
    Структурные утверждения об экстремальных графах с циклом (n ≥ 4), по вердикту на каждое:
    оценки при Δ = n − 1 и при δ ≥ 3 — для всех связных графов с циклом, остальные —
    для хороших графов с δ = 2 (и Δ = n − 2).
    """
    started = time.perf_counter()
    facts = evaluate_corpus(corpus, options) if corpus.n >= 4 else []
    counterexamples = []
    failed = set()
    for f in facts:
        for clause in _structure_violations(f):
            failed.add(clause)
            counterexamples.append(_counterexample(f, clause=clause))
    clauses = {clause: Verdict.FAIL if clause in failed else Verdict.PASS for clause in CLAUSES} if facts else {}
    witnesses = [
        f for f in facts if f.good and f.min_degree == 2 and f.max_degree == corpus.n - 2
    ]
    return _report(STATEMENT_STRUCTURE, corpus, facts, started, counterexamples, witnesses, clauses)


def verify_good_cyclic_minimum(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> VerificationReport:
    """Хорошие графы с циклом порядка n ≥ 4 имеют σ₁ = m ≥ 2n − 4, равенство только для K_{2,n−2}."""
    started = time.perf_counter()
    facts = [f for f in evaluate_corpus(corpus, options) if f.good and f.cyclic] if corpus.n >= 4 else []
    bound = 2 * corpus.n - 4
    counterexamples = [_counterexample(f, bound=bound) for f in facts if f.sigma1 < bound or f.sigma1 != f.m]
    witnesses = [f for f in facts if f.sigma1 == bound]
    if facts:
        counterexamples += _exact_witnesses(witnesses, complete_bipartite(2, corpus.n - 2), reason="unexpected-equality")
    return _report(STATEMENT_GOOD_MINIMUM, corpus, facts, started, counterexamples, witnesses)


CHECKERS: Dict[str, Callable[[GraphCorpus, Optional[VerifyOptions]], VerificationReport]] = {
    STATEMENT_SIZE: verify_sigma1_at_least_m,
    STATEMENT_STAR: verify_star_minimum,
    STATEMENT_BRIDGE: verify_good_cyclic_no_bridge,
    STATEMENT_CUT_VERTEX: verify_good_cyclic_no_cutvertex,
    STATEMENT_MAIN: verify_main_theorem,
    STATEMENT_STRUCTURE: verify_structural_claims,
    STATEMENT_GOOD_MINIMUM: verify_good_cyclic_minimum,
}


def check_order(n: int, corpus_path=None) -> None:
    cap = get_limits().canonical_cap
    if n > cap:
        raise Unsupported(f"Сравнение графов по изоморфизму ограничено порядком n ≤ {cap}, получено n={n}")
    if corpus_path is not None and n > MAX_VERIFY_ORDER:
        raise Unsupported(f"Проверка ограничена порядком n ≤ {MAX_VERIFY_ORDER}, получено n={n}")
    if corpus_path is None and n > MAX_BUILTIN_ORDER:
        raise Unsupported(f"Для n={n} > {MAX_BUILTIN_ORDER} укажите внешний корпус graph6")


def load_corpus(n: int, corpus_path=None) -> GraphCorpus:
    """Встроенный корпус для n ≤ 8 или внешний файл graph6 (n ≤ 9)."""
    check_order(n, corpus_path)
    if corpus_path is not None:
        return GraphCorpus.from_graph6_file(corpus_path, n)
    return enumerate_connected(n)


def verify_range(
        statements: Iterable[str],
        orders: Iterable[int],
        options: Optional[VerifyOptions] = None,
        corpus_path=None,
) -> List[VerificationReport]:
    """Запускает проверки по всем порядкам и сводит отчёты: по одному на утверждение."""
    statements = list(statements)
    unknown = [s for s in statements if s not in CHECKERS]
    if unknown:
        raise Unsupported(f"Неизвестные утверждения: {unknown}; доступны: {', '.join(STATEMENTS)}")
    # пределы порядков проверяются до начала долгих вычислений
    orders = list(orders)
    for n in orders:
        check_order(n, corpus_path)
    per_statement: Dict[str, List[VerificationReport]] = {s: [] for s in statements}
    for n in orders:
        corpus = load_corpus(n, corpus_path)
        logger.info(f" - Порядок n={n}: корпус {corpus.provenance.value}")
        for statement in statements:
            per_statement[statement].append(CHECKERS[statement](corpus, options))
    return [merge_reports(reports) for reports in per_statement.values() if reports]
