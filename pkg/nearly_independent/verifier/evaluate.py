import zlib
from functools import partial
from multiprocessing import Pool
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel, Field
from tqdm import tqdm

from nearly_independent.core.canonical import canonical_key
from nearly_independent.core.graph import max_degree, min_degree
from nearly_independent.core.graph6 import from_graph6, to_graph6
from nearly_independent.core.structure import bridges, cut_vertices, has_cycle
from nearly_independent.engine.goodness import is_good
from nearly_independent.engine.memo import MemoTable
from nearly_independent.engine.sigma import sigma_bruteforce, sigma_pair
from nearly_independent.source.settings import AUDIT_RESOLUTION, DEFAULT_AUDIT_FRACTION, get_limits
from nearly_independent.verifier.corpus import GraphCorpus


class VerifyOptions(BaseModel):
    workers: int = Field(default=1, ge=1)
    audit_fraction: float = Field(default=DEFAULT_AUDIT_FRACTION, ge=0.0, le=1.0)
    progress: bool = False
    chunk_size: int = Field(default=64, ge=1)


class GraphFacts(BaseModel):
    """Всё, что проверкам нужно знать об одном графе корпуса."""

    graph6: str
    # канонический ключ (graph6 канонической формы), если n в пределах канонизации
    key: str
    n: int
    m: int
    sigma0: int
    sigma1: int
    good: bool
    cyclic: bool
    bridge_count: int
    cut_vertex_count: int
    min_degree: int
    max_degree: int
    # σ₁ полным перебором для графов, попавших в выборку аудита
    audit_sigma1: Optional[int] = None

    @property
    def audit_mismatch(self) -> bool:
        return self.audit_sigma1 is not None and self.audit_sigma1 != self.sigma1


def selected_for_audit(graph6: str, audit_fraction: float) -> bool:
    """Детерминированная выборка: не зависит ни от порядка обработки, ни от числа процессов."""
    threshold = round(audit_fraction * AUDIT_RESOLUTION)
    return zlib.crc32(graph6.encode("ascii")) % AUDIT_RESOLUTION < threshold


def evaluate_graph(graph6: str, audit_fraction: float = DEFAULT_AUDIT_FRACTION) -> GraphFacts:
    graph = from_graph6(graph6)
    # у каждого графа своя таблица, между процессами ничего не разделяется
    memo = MemoTable()
    sigma0, sigma1 = sigma_pair(graph, memo)
    memo.log_stats()
    key = canonical_key(graph).decode("ascii")
    audit = None
    if selected_for_audit(graph6, audit_fraction) and graph.n <= get_limits().brute_force_cap:
        audit = sigma_bruteforce(graph, 1).value
        if audit != sigma1:
            logger.error(f" - Аудит: σ₁({graph6}) рекурсией {sigma1}, перебором {audit}")
    return GraphFacts(
        graph6=graph6,
        key=key,
        n=graph.n,
        m=graph.m,
        sigma0=sigma0,
        sigma1=sigma1,
        good=is_good(graph),
        cyclic=has_cycle(graph),
        bridge_count=len(bridges(graph)),
        cut_vertex_count=len(cut_vertices(graph)),
        min_degree=min_degree(graph) if graph.n else 0,
        max_degree=max_degree(graph) if graph.n else 0,
        audit_sigma1=audit,
    )


def evaluate_corpus(corpus: GraphCorpus, options: Optional[VerifyOptions] = None) -> List[GraphFacts]:
    """
    Вычисляет факты для всех графов корпуса, при workers > 1 — в пуле процессов.

    Порядок результатов совпадает с порядком корпуса при любом числе процессов.
    Результат кэшируется в корпусе (по доле аудита), чтобы несколько проверок
    одного порядка не пересчитывали σ₁ заново.
    """
    options = options or VerifyOptions()
    cached = corpus.facts_cache.get(options.audit_fraction)
    if cached is not None:
        return cached

    encoded = (to_graph6(graph) for graph in corpus)
    worker = partial(evaluate_graph, audit_fraction=options.audit_fraction)
    progress = dict(
        total=corpus.size_hint(),
        disable=not options.progress,
        desc=f"n={corpus.n}",
        unit="graph",
        leave=False,
    )
    if options.workers > 1:
        with Pool(options.workers) as pool:
            facts = list(tqdm(pool.imap(worker, encoded, chunksize=options.chunk_size), **progress))
    else:
        facts = list(tqdm(map(worker, encoded), **progress))

    audited = sum(1 for f in facts if f.audit_sigma1 is not None)
    logger.debug(f" - n={corpus.n}: вычислено {len(facts)} графов, из них {audited} сверено полным перебором")
    corpus.facts_cache[options.audit_fraction] = facts
    return facts
