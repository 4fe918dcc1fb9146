#include "tropattack/spectral.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tropattack {

namespace {

std::vector<std::vector<int>> adjacency_of(const TropMatrix& f) {
    std::vector<std::vector<int>> adj(f.rows());
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            if (f.at(i, j).is_finite()) adj[i].push_back(j);
        }
    }
    return adj;
}

void require_square(const TropMatrix& f, const char* op) {
    if (!f.is_square()) {
        throw DimensionError(std::string(op) + ": matrix is not square (" +
                             std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ")");
    }
}

// Maximum cycle mean within one strongly connected component via Karp's
// recurrence on longest-walk weights from a fixed source.
TropScalar karp_component(const TropMatrix& f, const std::vector<int>& comp) {
    int n = static_cast<int>(comp.size());
    if (n == 1) {
        const TropScalar& loop = f.at(comp[0], comp[0]);
        return loop;  // -inf when there is no self-loop
    }
    std::map<int, int> local;
    for (int i = 0; i < n; ++i) local[comp[i]] = i;

    struct Arc {
        int from, to;
        TropScalar w;
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const TropScalar& w = f.at(comp[i], comp[j]);
            if (w.is_finite()) arcs.push_back({i, j, w});
        }
    }

    // d[k][v] = max weight of a length-k walk from node 0 to v.
    std::vector<std::vector<TropScalar>> d(
        n + 1, std::vector<TropScalar>(n, TropScalar::neg_inf()));
    d[0][0] = TropScalar(0);
    for (int k = 1; k <= n; ++k) {
        for (const Arc& a : arcs) {
            if (d[k - 1][a.from].is_neg_inf()) continue;
            TropScalar cand = trop_mul(d[k - 1][a.from], a.w);
            if (d[k][a.to] < cand) d[k][a.to] = cand;
        }
    }

    TropScalar best = TropScalar::neg_inf();
    for (int v = 0; v < n; ++v) {
        if (d[n][v].is_neg_inf()) continue;
        bool have = false;
        TropScalar inner;  // min over k of (d[n][v] - d[k][v]) / (n - k)
        for (int k = 0; k < n; ++k) {
            if (d[k][v].is_neg_inf()) continue;
            TropScalar diff = trop_mul(d[n][v], trop_neg(d[k][v]));
            TropScalar mean = rational_div(diff, TropScalar(n - k));
            if (!have || mean < inner) {
                inner = mean;
                have = true;
            }
        }
        if (have && best < inner) best = inner;
    }
    return best;
}

}  // namespace

std::vector<std::vector<int>> scc_components(const std::vector<std::vector<int>>& adjacency) {
    int n = static_cast<int>(adjacency.size());
    std::vector<int> index(n, -1), low(n, 0), comp_of(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    auto strongconnect = [&](auto& self, int v) -> void {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : adjacency[v]) {
            if (index[w] == -1) {
                self(self, w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp_of[w] = static_cast<int>(comps.size());
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v) {
        if (index[v] == -1) strongconnect(strongconnect, v);
    }
    return comps;
}

TropScalar max_cycle_mean(const TropMatrix& f) {
    require_square(f, "max_cycle_mean");
    auto comps = scc_components(adjacency_of(f));
    TropScalar best = TropScalar::neg_inf();
    for (const auto& comp : comps) {
        TropScalar lam = karp_component(f, comp);
        if (best < lam) best = lam;
    }
    return best;
}

std::set<std::pair<int, int>> critical_arcs(const TropMatrix& f, const TropScalar& lambda) {
    require_square(f, "critical_arcs");
    if (lambda.is_neg_inf()) {
        throw SpectrumError("critical_arcs: acyclic digraph has no critical arcs");
    }
    TropMatrix g = scalar_mul(trop_neg(lambda), f);
    TropMatrix gplus = metric_matrix(g);  // SpectrumError when lambda undershoots
    const TropScalar zero(0);
    std::set<std::pair<int, int>> arcs;
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            if (!g.at(i, j).is_finite()) continue;
            if (trop_mul(g.at(i, j), gplus.at(j, i)) == zero) arcs.insert({i, j});
        }
    }
    return arcs;
}

CriticalCycle find_critical_cycle(const TropMatrix& f) {
    TropScalar lambda = max_cycle_mean(f);
    if (lambda.is_neg_inf()) {
        throw SpectrumError("find_critical_cycle: digraph is acyclic");
    }
    auto arcs = critical_arcs(f, lambda);

    // Lowest-indexed outgoing critical arc per node; std::set iteration
    // order gives that directly.
    std::vector<int> next(f.rows(), -1);
    int start = -1;
    for (const auto& [i, j] : arcs) {
        if (next[i] == -1) next[i] = j;
        if (start == -1 || i < start) start = i;
    }

    std::vector<int> walk;
    std::vector<int> pos(f.rows(), -1);
    int cur = start;
    while (pos[cur] == -1) {
        pos[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        cur = next[cur];
    }
    CriticalCycle z;
    z.nodes.assign(walk.begin() + pos[cur], walk.end());
    return z;
}

bool is_critical_cycle(const TropMatrix& f, const std::vector<int>& nodes,
                       const TropScalar& lambda) {
    require_square(f, "is_critical_cycle");
    if (nodes.empty() || lambda.is_neg_inf()) return false;
    std::vector<bool> seen(f.rows(), false);
    for (int v : nodes) {
        if (v < 0 || v >= f.rows() || seen[v]) return false;
        seen[v] = true;
    }
    int l = static_cast<int>(nodes.size());
    TropScalar total(0);
    for (int p = 0; p < l; ++p) {
        const TropScalar& w = f.at(nodes[p], nodes[(p + 1) % l]);
        if (w.is_neg_inf()) return false;
        total = trop_mul(total, w);
    }
    return rational_div(total, TropScalar(l)) == lambda;
}

std::vector<int> critical_component(const TropMatrix& f, const CriticalCycle& z) {
    TropScalar lambda = max_cycle_mean(f);
    if (!is_critical_cycle(f, z.nodes, lambda)) {
        throw InputError("critical_component: cycle is not critical for this matrix");
    }
    auto arcs = critical_arcs(f, lambda);
    std::vector<std::vector<int>> adj(f.rows());
    for (const auto& [i, j] : arcs) adj[i].push_back(j);
    auto comps = scc_components(adj);
    for (const auto& comp : comps) {
        if (std::binary_search(comp.begin(), comp.end(), z.nodes.front())) return comp;
    }
    throw InputError("critical_component: cycle start is not in any component");
}

TropMatrix metric_matrix(const TropMatrix& f) {
    require_square(f, "metric_matrix");
    int d = f.rows();
    TropMatrix w = f;
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d; ++i) {
            const TropScalar& wik = w.at(i, k);
            if (wik.is_neg_inf()) continue;
            for (int j = 0; j < d; ++j) {
                if (w.at(k, j).is_neg_inf()) continue;
                TropScalar cand = trop_mul(wik, w.at(k, j));
                if (w.at(i, j) < cand) w.at(i, j) = cand;
            }
        }
    }
    const TropScalar zero(0);
    for (int i = 0; i < d; ++i) {
        if (zero < w.at(i, i)) {
            throw SpectrumError("metric_matrix: positive cycle, the power series diverges");
        }
    }
    return w;
}

TropMatrix kleene_star(const TropMatrix& f) {
    return mat_add(TropMatrix::identity(f.rows()), metric_matrix(f));
}

bool is_irreducible(const TropMatrix& f) {
    require_square(f, "is_irreducible");
    return scc_components(adjacency_of(f)).size() == 1;
}

SpectralSummary analyze_spectrum(const TropMatrix& f) {
    SpectralSummary s;
    s.lambda = max_cycle_mean(f);
    if (s.lambda.is_finite()) s.critical_arcs = critical_arcs(f, s.lambda);
    s.irreducible = is_irreducible(f);
    return s;
}

}  // namespace tropattack
