#include "weylkit/sym_trunc.hpp"

#include <algorithm>

namespace weylkit {

namespace {

struct SymData {
    std::vector<std::vector<int>> monos;       // sorted index multisets
    std::map<std::vector<int>, int> index;
    std::vector<long> weights;
    Matrix E, F;
};

SymData build_sym(const GradedWeightedModule& V, int k, long size_limit) {
    int base = V.lo_degree();
    int n = V.dim(base);
    SymData s;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_i) -> void {
        if (remaining == 0) {
            s.index[cur] = int(s.monos.size());
            s.monos.push_back(cur);
            return;
        }
        for (int i = min_i; i < n; ++i) {
            cur.push_back(i);
            self(self, remaining - 1, i);
            cur.pop_back();
        }
    };
    rec(rec, k, 0);
    if (long(s.monos.size()) > size_limit)
        throw wk_error(wk_error::code::cap_exceeded, "symmetric power exceeds the basis size limit");
    for (const auto& m : s.monos) {
        long w = 0;
        for (int i : m) w += V.weight(base, i);
        s.weights.push_back(w);
    }
    auto leibniz = [&](const Matrix& A) {
        Matrix M(int(s.monos.size()), int(s.monos.size()));
        for (size_t c = 0; c < s.monos.size(); ++c) {
            const auto& mono = s.monos[c];
            for (size_t t = 0; t < mono.size(); ++t)
                for (int r = 0; r < n; ++r) {
                    const Rat& a = A.at(r, mono[t]);
                    if (sgn(a) == 0) continue;
                    std::vector<int> img = mono;
                    img[t] = r;
                    std::sort(img.begin(), img.end());
                    M.at(s.index.at(img), int(c)) += a;
                }
        }
        return M;
    };
    s.E = leibniz(V.act_e(base));
    s.F = leibniz(V.act_f(base));
    return s;
}

ModulePtr sym_as_module(AlgebraPtr alg, const SymData& s, int degree) {
    auto mod = std::make_shared<StoredModule>(alg, degree);
    mod->push_component(s.weights);
    Sl2Triple t = alg->sl2();
    mod->set_action(0, t.e, degree, s.E);
    mod->set_action(0, t.f, degree, s.F);
    return mod;
}

}  // namespace

ModulePtr sym_power(const GradedWeightedModule& V, int d) {
    if (V.lo_degree() != V.hi_degree())
        throw wk_error(wk_error::code::invalid_input, "sym_power needs a one-component module");
    SymData s = build_sym(V, d, 1000000);
    return sym_as_module(V.algebra(), s, d);
}

TruncatedSymAlgebra truncated_sym_algebra(const GradedWeightedModule& V, const TruncationSet& om,
                                          const SymTruncOptions& opt) {
    if (V.lo_degree() != V.hi_degree())
        throw wk_error(wk_error::code::invalid_input, "truncated_sym_algebra needs a one-component module");
    AlgebraPtr alg = V.algebra();
    Sl2Triple tri = alg->sl2();
    TruncatedSymAlgebra out;
    out.omega = om;
    auto result = std::make_shared<StoredModule>(alg, 0);

    if (!om.contains(0)) {
        // the unit is truncated away, so the whole algebra vanishes
        out.terminated = true;
        result->push_component({});
        out.graded_dims.push_back(0);
        out.module = result;
        out.decomposition = decompose_module(*result);
        return out;
    }

    std::vector<SymData> sym;                       // S^k V
    std::vector<std::vector<Vec>> bad;              // Bad_k rows in S^k coords
    std::vector<std::vector<long>> kept_weights;    // A_d basis weights
    std::vector<RrefBuilder> ideal;                 // I_d as RREF over S^d coords
    std::vector<std::vector<int>> kept_positions;   // S^d positions spanning A_d

    int zero_at = -1;
    for (int d = 0; d <= opt.max_degree; ++d) {
        sym.push_back(build_sym(V, d, opt.basis_size_limit));
        const SymData& s = sym.back();
        int nd = int(s.monos.size());

        // Bad_d: isotypic complement of Omega inside S^d V
        ModulePtr smod = sym_as_module(alg, s, d);
        IsotypicSplit split = truncate_isotypic(*smod, om);
        std::vector<Vec> bad_rows;
        const Subspace& disc = split.discarded.at(d);
        for (int r = 0; r < disc.basis().rows(); ++r) bad_rows.push_back(disc.basis().row(r));
        bad.push_back(std::move(bad_rows));

        // I_d = sum_k S^{d-k} . Bad_k
        RrefBuilder id(nd);
        for (int k = 1; k <= d; ++k) {
            if (bad[k].empty()) continue;
            const SymData& slow = sym[d - k];
            for (const Vec& row : bad[k])
                for (const auto& mu : slow.monos) {
                    Vec v(nd, Rat(0));
                    for (size_t c = 0; c < row.size(); ++c) {
                        if (sgn(row[c]) == 0) continue;
                        std::vector<int> prod = mu;
                        prod.insert(prod.end(), sym[k].monos[c].begin(), sym[k].monos[c].end());
                        std::sort(prod.begin(), prod.end());
                        v[s.index.at(prod)] += row[c];
                    }
                    id.insert(std::move(v));
                }
        }

        if (opt.self_check) {
            // the ideal is sl2-stable (e and f act by derivations)
            for (const Vec& row : id.sorted_rows()) {
                if (!id.contains(s.E.apply(row)) || !id.contains(s.F.apply(row)))
                    throw wk_error(wk_error::code::internal, "truncation ideal is not sl2-stable");
            }
        }

        // A_d = S^d / I_d
        std::vector<bool> pivot(nd, false);
        for (int c : id.pivots()) pivot[c] = true;
        std::vector<int> kept;
        std::vector<long> ws;
        for (int c = 0; c < nd; ++c)
            if (!pivot[c]) kept.push_back(c);
        // canonical order: weight descending, then monomial order
        std::stable_sort(kept.begin(), kept.end(),
                         [&](int a, int b) { return s.weights[a] > s.weights[b]; });
        for (int c : kept) ws.push_back(s.weights[c]);
        kept_positions.push_back(kept);
        ideal.push_back(std::move(id));
        kept_weights.push_back(ws);

        result->push_component(ws);
        out.graded_dims.push_back(long(ws.size()));

        // project E/F to the quotient
        auto project_action = [&](const Matrix& A) {
            Matrix M(int(kept.size()), int(kept.size()));
            for (size_t c = 0; c < kept.size(); ++c) {
                Vec img = ideal[d].reduce(A.apply(unit_vec(nd, kept[c])));
                for (size_t r = 0; r < kept.size(); ++r) M.at(int(r), int(c)) = img[kept[r]];
            }
            return M;
        };
        if (!kept.empty()) {
            result->set_action(0, tri.e, d, project_action(s.E));
            result->set_action(0, tri.f, d, project_action(s.F));
        }

        if (opt.self_check && d >= 1 && !kept_positions[d - 1].empty()) {
            // multiplication A_1 x A_{d-1} -> A_d is surjective
            RrefBuilder span(nd);
            int rank_target = int(kept.size());
            for (int x = 0; x < V.dim(V.lo_degree()); ++x)
                for (int c : kept_positions[d - 1]) {
                    std::vector<int> prod = sym[d - 1].monos[c];
                    prod.push_back(x);
                    std::sort(prod.begin(), prod.end());
                    span.insert(ideal[d].reduce(unit_vec(nd, s.index.at(prod))));
                }
            if (span.dim() != rank_target)
                throw wk_error(wk_error::code::internal, "A_1 . A_(d-1) does not span A_d");
        }

        if (kept.empty()) {
            zero_at = d;
            break;
        }
    }

    out.terminated = zero_at >= 0;
    out.module = result;
    out.decomposition = decompose_module(*result);
    out.total_dim = out.decomposition.total_dim;

    if (opt.self_check && out.terminated) {
        // zero propagation: the next component is zero as well
        int d = zero_at + 1;
        if (d <= opt.max_degree) {
            SymData s = build_sym(V, d, opt.basis_size_limit);
            RrefBuilder id(int(s.monos.size()));
            for (int k = 1; k <= d && k < int(bad.size()); ++k) {
                for (const Vec& row : bad[k])
                    for (const auto& mu : sym[d - k].monos) {
                        Vec v(s.monos.size(), Rat(0));
                        for (size_t c = 0; c < row.size(); ++c) {
                            if (sgn(row[c]) == 0) continue;
                            std::vector<int> prod = mu;
                            prod.insert(prod.end(), sym[k].monos[c].begin(), sym[k].monos[c].end());
                            std::sort(prod.begin(), prod.end());
                            v[s.index.at(prod)] += row[c];
                        }
                        id.insert(std::move(v));
                    }
            }
            // Bad_d of the new degree also belongs to the ideal sum
            ModulePtr smod = sym_as_module(alg, s, d);
            IsotypicSplit split = truncate_isotypic(*smod, om);
            const Subspace& disc = split.discarded.at(d);
            for (int r = 0; r < disc.basis().rows(); ++r) id.insert(disc.basis().row(r));
            if (id.dim() != int(s.monos.size()))
                throw wk_error(wk_error::code::internal, "zero component did not propagate");
        }
    }
    return out;
}

}  // namespace weylkit
