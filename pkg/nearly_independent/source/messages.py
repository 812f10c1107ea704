APP_HELP = "Точный подсчёт k-почти независимых множеств вершин и проверка экстремальных оценок для σ₁"

SIGMA_HELP = "Печатает σ_k для каждого входного графа"
GOOD_HELP = "Печатает отчёт о хороших рёбрах для каждого входного графа"
GEN_HELP = "Печатает графы семейства или весь корпус связных графов в формате graph6"
VERIFY_HELP = "Проверяет утверждения об оценках σ₁ на всех связных графах заданных порядков"

FAMILY_NAMES_HELP = "path, cycle, complete, bipartite, star, k4-minus-edge, empty"

INPUT_SOURCE_HINT = "Укажите ровно один источник: --graph6 FILE, --edges FILE или --family NAME --n N"

STATEMENT_TITLES = {
    "size": "σ₁(G) ≥ m, равенство ровно на хороших графах",
    "star": "σ₁(G) ≥ n−1, равенство только для звезды K_{1,n−1}",
    "bridge": "хороший граф с циклом не содержит мостов",
    "cut-vertex": "хороший граф с циклом не содержит точек сочленения",
    "main": "граф с циклом: σ₁ ≥ n (n=3) / 2n−4 (n≥4), равенство для K₃ и K_{2,n−2}",
    "structure": "структурные утверждения об экстремальном графе с циклом",
    "good-minimum": "хорошие графы с циклом и σ₁ = m = 2n−4 — только K_{2,n−2}",
}

CLAUSE_TITLES = {
    "full-degree": "Δ = n−1 ⇒ σ₁ > 2n−4",
    "min-degree-three": "δ ≥ 3 ⇒ σ₁ > 2n−4",
    "max-degree-near-full": "хороший, δ = 2 ⇒ Δ ≥ n−2",
    "degree-two-profile": "хороший, δ = 2, Δ = n−2 ⇒ вершины степени 2 — (n−2, n−2)-вершины",
    "full-neighbors-degree-two": "хороший, δ = 2, Δ = n−2 ⇒ соседи вершин степени n−2 имеют степень 2",
    "two-degree-classes": "хороший, δ = 2, Δ = n−2 ⇒ все степени равны 2 или n−2",
}
