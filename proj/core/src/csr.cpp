#include "tropattack/csr.hpp"

#include <algorithm>
#include <string>

namespace tropattack {

CsrTriple build_csr_from_cycle(const TropMatrix& f, const CriticalCycle& z,
                               const TropScalar& lambda) {
    if (!f.is_square()) throw DimensionError("build_csr_from_cycle: matrix is not square");
    if (!is_critical_cycle(f, z.nodes, lambda)) {
        throw InputError("build_csr_from_cycle: cycle is not critical for this matrix");
    }
    int d = f.rows();
    int l = z.length();

    TropMatrix g = scalar_mul(trop_neg(lambda), f);
    TropMatrix u = metric_matrix(mat_pow(g, l));

    std::vector<bool> on_cycle(d, false);
    for (int v : z.nodes) on_cycle[v] = true;

    CsrTriple csr{TropMatrix(d, d), TropMatrix(d, d), TropMatrix(d, d), lambda, z};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (on_cycle[j]) csr.c.at(i, j) = u.at(i, j);
            if (on_cycle[i]) csr.r.at(i, j) = u.at(i, j);
        }
    }
    for (int p = 0; p < l; ++p) {
        int from = z.nodes[p];
        int to = z.nodes[(p + 1) % l];
        csr.s.at(from, to) = g.at(from, to);
    }
    return csr;
}

TropMatrix csr_term(const CsrTriple& csr, long long t, bool include_r) {
    if (t < 0) throw InputError("csr_term: negative exponent");
    int l = csr.cycle.length();
    int k = static_cast<int>(t % l);

    // Right-multiplying by S permutes the cycle columns and shifts them by
    // the arc weight: column z_{p+1} of X S is column z_p of X plus s_p.
    TropMatrix x = csr.c;
    for (int step = 0; step < k; ++step) {
        TropMatrix y(x.rows(), x.cols());
        for (int p = 0; p < l; ++p) {
            int from = csr.cycle.nodes[p];
            int to = csr.cycle.nodes[(p + 1) % l];
            const TropScalar& w = csr.s.at(from, to);
            for (int i = 0; i < x.rows(); ++i) {
                y.at(i, to) = trop_mul(x.at(i, from), w);
            }
        }
        x = std::move(y);
    }
    return include_r ? mat_mul(x, csr.r) : x;
}

BMatrix b_matrix(const TropMatrix& f, const std::vector<int>& removed) {
    if (!f.is_square()) throw DimensionError("b_matrix: matrix is not square");
    std::vector<int> nodes = removed;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int v : nodes) {
        if (v < 0 || v >= f.rows()) {
            throw InputError("b_matrix: node " + std::to_string(v) + " out of range");
        }
    }
    BMatrix b{f, nodes};
    for (int v : nodes) {
        for (int j = 0; j < f.cols(); ++j) b.matrix.at(v, j) = TropScalar::neg_inf();
        for (int i = 0; i < f.rows(); ++i) b.matrix.at(i, v) = TropScalar::neg_inf();
    }
    return b;
}

ExpansionSides csr_expansion_residual(const TropMatrix& f, long long t) {
    if (!f.is_square()) throw DimensionError("csr_expansion_residual: matrix is not square");
    int d = f.rows();
    if (t < power_stability_threshold(d)) {
        throw InputError("csr_expansion_residual: exponent below the stability threshold");
    }
    TropScalar lambda = max_cycle_mean(f);
    if (lambda.is_neg_inf()) {
        throw SpectrumError("csr_expansion_residual: acyclic digraph");
    }
    CriticalCycle z = find_critical_cycle(f);
    CsrTriple csr = build_csr_from_cycle(f, z, lambda);
    std::vector<int> component = critical_component(f, z);
    BMatrix b = b_matrix(f, component);

    ExpansionSides sides;
    sides.lhs = mat_pow(f, t);
    sides.rhs = mat_add(scalar_mul(trop_pow(lambda, t), csr_term(csr, t, true)),
                        mat_pow(b.matrix, t));
    return sides;
}

}  // namespace tropattack
