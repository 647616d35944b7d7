#include "weylkit/endo.hpp"

#include <algorithm>

namespace weylkit {

namespace {

Vec apply_word(const GradedWeightedModule& V, const HbarWord& w, Vec v, int d) {
    for (int t = int(w.elems.size()) - 1; t >= 0; --t) {
        auto [adeg, aidx] = w.elems[t];
        v = V.action(adeg, aidx, d).apply(v);
        d += adeg;
    }
    return v;
}

}  // namespace

EndomorphismAlgebra::EndomorphismAlgebra(WeylResultPtr weyl) : weyl_(std::move(weyl)) {
    if (weyl_->kind != WeylKind::global)
        throw wk_error(wk_error::code::invalid_input, "A_la needs a global Weyl module");
    if (!weyl_->termination.certified)
        throw wk_error(wk_error::code::invalid_input, "A_la needs a certified-complete Weyl module");
    AlgebraPtr g = weyl_->algebra();
    long la = weyl_->lambda;
    int top = weyl_->hi_degree();

    // weight-zero positive generators, ordered by (degree, index)
    std::vector<std::pair<int, int>> hbar;
    for (int i = 1; i <= top; ++i)
        for (int a : g->weight_zero_indices(i)) hbar.emplace_back(i, a);

    for (int d = 0; d <= top; ++d) {
        first_index_per_degree_.push_back(int(degrees_.size()));
        std::vector<int> slice = weyl_->weight_slice(d, la);
        slice_.push_back(slice);
        int sdim = int(slice.size());
        if (sdim == 0) continue;

        // enumerate words of total degree d in lex order until the slice is spanned
        RrefBuilder span(sdim);
        std::vector<std::pair<HbarWord, Vec>> accepted;
        Vec vla(weyl_->dim(0), Rat(0));
        vla[0] = 1;
        HbarWord cur;
        auto consider = [&](const HbarWord& w) {
            if (span.dim() == sdim) return;
            Vec img = apply_word(*weyl_, w, vla, 0);
            Vec s(sdim);
            for (int p = 0; p < sdim; ++p) s[p] = img[slice[p]];
            if (span.insert(s)) accepted.emplace_back(w, std::move(s));
        };
        auto rec = [&](auto&& self, int remaining, size_t min_pos) -> void {
            if (span.dim() == sdim) return;
            if (remaining == 0) {
                consider(cur);
                return;
            }
            for (size_t p = min_pos; p < hbar.size(); ++p) {
                if (hbar[p].first > remaining) continue;
                cur.elems.push_back(hbar[p]);
                // ordered words: any sequence, enumerated lexicographically
                self(self, remaining - hbar[p].first, 0);
                cur.elems.pop_back();
                if (span.dim() == sdim) return;
            }
        };
        rec(rec, d, 0);
        if (span.dim() != sdim)
            throw wk_error(wk_error::code::internal,
                           "h-bar words failed to span the weight slice (surjectivity violated)");

        // express the canonical slice units through the accepted words
        int n = sdim;
        Matrix aug(n, 2 * n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) aug.at(r, c) = accepted[c].second[r];
        for (int r = 0; r < n; ++r) aug.at(r, n + r) = 1;
        Matrix red = rref(aug);  // [I | inverse]
        for (int p = 0; p < n; ++p) {
            EndoRep rep;
            for (int w = 0; w < n; ++w) {
                const Rat& c = red.at(w, n + p);
                if (sgn(c) != 0) rep.terms.emplace_back(c, accepted[w].first);
            }
            reps_.push_back(std::move(rep));
            degrees_.push_back(d);
            Vec bv(weyl_->dim(d), Rat(0));
            bv[slice[p]] = 1;
            basis_vectors_.push_back(std::move(bv));
        }
    }

    // structure constants: a * b = (a's words applied to the value of b)
    int n = dim();
    products_.assign(n, std::vector<Vec>(n));
    for (int b = 0; b < n; ++b) {
        int db = degrees_[b];
        for (int a = 0; a < n; ++a) {
            int target = degrees_[a] + db;
            Vec out(n, Rat(0));
            if (target <= top && !slice_[target].empty()) {
                Vec img = apply(*weyl_, a, basis_vectors_[b], db);
                for (size_t p = 0; p < slice_[target].size(); ++p)
                    out[first_index_per_degree_[target] + int(p)] = img[slice_[target][p]];
            }
            products_[a][b] = std::move(out);
        }
    }
}

std::vector<long> EndomorphismAlgebra::graded_dims() const {
    std::vector<long> out(size_t(weyl_->hi_degree() + 1), 0);
    for (int d : degrees_) out[d] += 1;
    return out;
}

Vec EndomorphismAlgebra::multiply(const Vec& x, const Vec& y) const {
    int n = dim();
    Vec out(n, Rat(0));
    for (int a = 0; a < n; ++a) {
        if (sgn(x[a]) == 0) continue;
        for (int b = 0; b < n; ++b) {
            if (sgn(y[b]) == 0) continue;
            vec_add_scaled(out, products_[a][b], x[a] * y[b]);
        }
    }
    return out;
}

Vec EndomorphismAlgebra::apply(const GradedWeightedModule& V, int a, const Vec& v, int d) const {
    Vec out;
    for (const auto& [c, w] : reps_[a].terms) {
        Vec img = apply_word(V, w, v, d);
        if (out.empty()) out = Vec(img.size(), Rat(0));
        vec_add_scaled(out, img, c);
    }
    if (out.empty()) out = Vec(V.dim(d + degrees_[a]), Rat(0));
    return out;
}

bool EndomorphismAlgebra::is_associative() const {
    int n = dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Vec left = multiply(products_[a][b], unit_vec(n, c));
                Vec right = multiply(unit_vec(n, a), products_[b][c]);
                if (left != right) return false;
            }
    return true;
}

bool EndomorphismAlgebra::is_unital() const {
    int n = dim();
    if (n == 0 || degrees_[0] != 0) return false;
    for (int a = 0; a < n; ++a) {
        if (products_[0][a] != unit_vec(n, a)) return false;
        if (products_[a][0] != unit_vec(n, a)) return false;
    }
    return true;
}

int EndomorphismAlgebra::positive_nilpotency_order() const {
    int n = dim();
    std::vector<Vec> power;
    for (int a = 0; a < n; ++a)
        if (degrees_[a] >= 1) power.push_back(unit_vec(n, a));
    int order = 0;
    while (!power.empty() && order <= n + 1) {
        ++order;
        std::vector<Vec> next_gen;
        RrefBuilder span(n);
        for (int a = 0; a < n; ++a) {
            if (degrees_[a] < 1) continue;
            for (const Vec& x : power) {
                Vec y = multiply(unit_vec(n, a), x);
                if (span.insert(y)) next_gen.push_back(std::move(y));
            }
        }
        power = std::move(next_gen);
    }
    return order;
}

std::map<int, long> ALambdaModule::graded_dims() const {
    std::map<int, long> out;
    for (int d : degrees) out[d] += 1;
    return out;
}

ALambdaModule regular_module(const EndomorphismAlgebra& A) {
    ALambdaModule M;
    int n = A.dim();
    for (int a = 0; a < n; ++a) M.degrees.push_back(A.degree_of(a));
    for (int a = 0; a < n; ++a) {
        Matrix act(n, n);
        for (int b = 0; b < n; ++b) {
            const Vec& p = A.product(a, b);
            for (int r = 0; r < n; ++r) act.at(r, b) = p[r];
        }
        M.actions.push_back(std::move(act));
    }
    return M;
}

ALambdaModule trivial_module(const EndomorphismAlgebra& A, int shift) {
    ALambdaModule M;
    M.degrees = {shift};
    for (int a = 0; a < A.dim(); ++a) {
        Matrix act(1, 1);
        if (A.degree_of(a) == 0) act.at(0, 0) = 1;
        M.actions.push_back(std::move(act));
    }
    return M;
}

void check_alambda_module(const EndomorphismAlgebra& A, const ALambdaModule& M) {
    int n = M.dim();
    if (int(M.actions.size()) != A.dim())
        throw wk_error(wk_error::code::invalid_input, "module needs one action matrix per algebra basis element");
    for (int a = 0; a < A.dim(); ++a) {
        const Matrix& act = M.actions[a];
        if (act.rows() != n || act.cols() != n)
            throw wk_error(wk_error::code::invalid_input, "action matrix has wrong shape");
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (sgn(act.at(r, c)) != 0 && M.degrees[r] != M.degrees[c] + A.degree_of(a))
                    throw wk_error(wk_error::code::invalid_input, "action matrix is not graded");
    }
    // identity and compatibility with the structure constants
    if (A.dim() > 0) {
        if (!(M.actions[0] == Matrix::identity(n)))
            throw wk_error(wk_error::code::invalid_input, "unit of A_la must act as the identity");
        for (int a = 0; a < A.dim(); ++a)
            for (int b = 0; b < A.dim(); ++b) {
                Matrix lhs = M.actions[a].multiply(M.actions[b]);
                Matrix rhs(n, n);
                const Vec& p = A.product(a, b);
                for (int c = 0; c < A.dim(); ++c) {
                    if (sgn(p[c]) == 0) continue;
                    for (int r = 0; r < n; ++r)
                        for (int s = 0; s < n; ++s) rhs.at(r, s) += p[c] * M.actions[c].at(r, s);
                }
                if (!(lhs == rhs))
                    throw wk_error(wk_error::code::invalid_input,
                                   "action matrices inconsistent with the structure constants");
            }
    }
}

ALambdaModule restriction_R_lambda(const EndomorphismAlgebra& A, const GradedWeightedModule& V) {
    long la = A.lambda();
    for (int d = V.lo_degree(); d <= V.hi_degree(); ++d)
        for (int k = 0; k < V.dim(d); ++k)
            if (V.weight(d, k) > la)
                throw wk_error(wk_error::code::invalid_input,
                               "restriction needs every isotypic weight <= la");
    ALambdaModule M;
    std::vector<std::pair<int, int>> slice;  // (degree, component index)
    std::map<std::pair<int, int>, int> pos;
    for (int d = V.lo_degree(); d <= V.hi_degree(); ++d)
        for (int k : V.weight_slice(d, la)) {
            pos[{d, k}] = int(slice.size());
            slice.emplace_back(d, k);
            M.degrees.push_back(d);
        }
    int n = int(slice.size());
    for (int a = 0; a < A.dim(); ++a) {
        Matrix act(n, n);
        for (int c = 0; c < n; ++c) {
            auto [d, k] = slice[c];
            Vec v(V.dim(d), Rat(0));
            v[k] = 1;
            Vec img = A.apply(V, a, v, d);
            int dt = d + A.degree_of(a);
            for (int kk : V.weight_slice(dt, la)) {
                if (sgn(img[kk]) != 0) act.at(pos.at({dt, kk}), c) = img[kk];
            }
        }
        M.actions.push_back(std::move(act));
    }
    return M;
}

ModulePtr weyl_functor_apply(const EndomorphismAlgebra& A, const ALambdaModule& M) {
    check_alambda_module(A, M);
    const WeylModuleResult& W = *A.weyl();
    AlgebraPtr g = W.algebra();
    int wtop = W.hi_degree();
    int mlo = M.dim() == 0 ? 0 : *std::min_element(M.degrees.begin(), M.degrees.end());
    int mhi = M.dim() == 0 ? 0 : *std::max_element(M.degrees.begin(), M.degrees.end());
    int lo = mlo, hi = wtop + mhi;

    // tensor basis per total degree
    struct Pair {
        int d, k, s;
    };
    std::map<int, std::vector<Pair>> pairs;
    std::map<int, std::map<std::tuple<int, int, int>, int>> pair_pos;
    for (int d = 0; d <= wtop; ++d)
        for (int k = 0; k < W.dim(d); ++k)
            for (int s = 0; s < M.dim(); ++s) {
                int n = d + M.degrees[s];
                pair_pos[n][{d, k, s}] = int(pairs[n].size());
                pairs[n].push_back({d, k, s});
            }

    // right action w.a on W basis vectors, cached
    std::map<std::pair<std::pair<int, int>, int>, Vec> right;
    auto right_act = [&](int d, int k, int a) -> const Vec& {
        auto key = std::make_pair(std::make_pair(d, k), a);
        auto it = right.find(key);
        if (it == right.end()) {
            Vec v = W.apply_chain(d, k, A.basis_vector(a), A.degree_of(a));
            it = right.emplace(key, std::move(v)).first;
        }
        return it->second;
    };

    // relation span per total degree, blocked by weight
    std::map<int, std::map<long, RrefBuilder>> rel;
    std::map<int, std::map<long, std::vector<int>>> block_members;
    for (auto& [n, ps] : pairs) {
        for (size_t i = 0; i < ps.size(); ++i) block_members[n][W.weight(ps[i].d, ps[i].k)].push_back(int(i));
        for (auto& [w, members] : block_members[n]) rel[n].emplace(w, RrefBuilder(int(members.size())));
    }
    std::map<int, std::map<int, int>> pos_in_block;  // n -> pair idx -> pos
    for (auto& [n, blocks] : block_members)
        for (auto& [w, members] : blocks)
            for (size_t p = 0; p < members.size(); ++p) pos_in_block[n][members[p]] = int(p);

    for (int d = 0; d <= wtop; ++d)
        for (int k = 0; k < W.dim(d); ++k)
            for (int a = 1; a < A.dim(); ++a) {  // the unit gives trivial relations
                int da = A.degree_of(a);
                const Vec& wa = right_act(d, k, a);
                for (int s = 0; s < M.dim(); ++s) {
                    int n = d + da + M.degrees[s];
                    auto pit = pairs.find(n);
                    if (pit == pairs.end()) continue;
                    long wt = W.weight(d, k);
                    auto bit = block_members[n].find(wt);
                    if (bit == block_members[n].end()) continue;
                    RrefBuilder& builder = rel[n].at(wt);
                    if (builder.dim() == int(bit->second.size())) continue;
                    Vec v(bit->second.size(), Rat(0));
                    bool any = false;
                    // (w.a) (x) s
                    for (int r = 0; r < int(wa.size()); ++r) {
                        if (sgn(wa[r]) == 0) continue;
                        v[pos_in_block[n].at(pair_pos[n].at({d + da, r, s}))] += wa[r];
                        any = true;
                    }
                    // - w (x) (a.s)
                    const Matrix& act = M.actions[a];
                    for (int r = 0; r < M.dim(); ++r) {
                        if (sgn(act.at(r, s)) == 0) continue;
                        v[pos_in_block[n].at(pair_pos[n].at({d, k, r}))] -= act.at(r, s);
                        any = true;
                    }
                    if (any) builder.insert(std::move(v));
                }
            }

    // quotient basis per total degree, weight descending
    auto out = std::make_shared<StoredModule>(g, lo);
    std::map<int, std::vector<std::pair<long, int>>> kept;  // n -> (weight, pair idx)
    for (int n = lo; n <= hi; ++n) {
        std::vector<long> ws;
        auto bit = block_members.find(n);
        if (bit != block_members.end()) {
            for (auto it = bit->second.rbegin(); it != bit->second.rend(); ++it) {
                const auto& members = it->second;
                RrefBuilder& builder = rel[n].at(it->first);
                std::vector<bool> is_pivot(members.size(), false);
                for (int c : builder.pivots()) is_pivot[c] = true;
                for (size_t p = 0; p < members.size(); ++p)
                    if (!is_pivot[p]) {
                        kept[n].emplace_back(it->first, members[p]);
                        ws.push_back(it->first);
                    }
            }
        }
        out->push_component(std::move(ws));
    }

    // project an ambient vector at total degree n to quotient coordinates
    auto project = [&](int n, const std::map<int, Rat>& ambient) -> Vec {
        Vec res(kept[n].size(), Rat(0));
        std::map<long, Vec> per_block;
        for (const auto& [idx, c] : ambient) {
            if (sgn(c) == 0) continue;
            const Pair& p = pairs[n][idx];
            long w = W.weight(p.d, p.k);
            auto& v = per_block[w];
            if (v.empty()) v = Vec(block_members[n][w].size(), Rat(0));
            v[pos_in_block[n].at(idx)] += c;
        }
        for (auto& [w, v] : per_block) {
            Vec red = rel[n].at(w).reduce(std::move(v));
            // read off coordinates at kept positions of this block
            for (size_t q = 0; q < kept[n].size(); ++q) {
                if (kept[n][q].first != w) continue;
                res[q] = red[pos_in_block[n].at(kept[n][q].second)];
            }
        }
        return res;
    };

    // inherited algebra action x (w (x) s) = (x w) (x) s
    int max_adeg = hi - lo;
    if (g->max_degree_available() >= 0) max_adeg = std::min(max_adeg, g->max_degree_available());
    for (int n = lo; n <= hi; ++n) {
        if (kept[n].empty()) continue;
        for (int adeg = 0; adeg <= max_adeg && n + adeg <= hi; ++adeg) {
            if (kept[n + adeg].empty() && adeg > 0) continue;
            for (int aidx = 0; aidx < g->dim(adeg); ++aidx) {
                if (adeg == 0 && aidx == g->sl2().h) continue;
                Matrix act(int(kept[n + adeg].size()), int(kept[n].size()));
                bool nonzero = false;
                for (size_t c = 0; c < kept[n].size(); ++c) {
                    const Pair& p = pairs[n][kept[n][c].second];
                    Matrix xw = W.action(adeg, aidx, p.d);
                    std::map<int, Rat> ambient;
                    for (int r = 0; r < xw.rows(); ++r)
                        if (sgn(xw.at(r, p.k)) != 0)
                            ambient[pair_pos[n + adeg].at({p.d + adeg, r, p.s})] = xw.at(r, p.k);
                    Vec q = project(n + adeg, ambient);
                    for (size_t r = 0; r < q.size(); ++r)
                        if (sgn(q[r]) != 0) {
                            act.at(int(r), int(c)) = q[r];
                            nonzero = true;
                        }
                }
                if (nonzero) out->set_action(adeg, aidx, n, std::move(act));
            }
        }
    }
    return out;
}

}  // namespace weylkit
