#include "weylkit/weyl.hpp"

#include <algorithm>

namespace weylkit {

Vec WeylModuleResult::apply_chain(int d, int k, Vec start, int start_degree) const {
    const Chain& c = chains_.at(d).at(k);
    Sl2Triple t = alg_->sl2();
    int deg = start_degree;
    for (int r = 0; r < c.root; ++r) start = action(0, t.f, deg).apply(start);
    for (int pos = int(c.word.size()) - 1; pos >= 0; --pos) {
        auto [adeg, aidx] = c.word[pos];
        start = action(adeg, aidx, deg).apply(start);
        deg += adeg;
    }
    return start;
}

void WeylModuleResult::push_degree(std::vector<long> weights, std::vector<Chain> chains) {
    weights_.push_back(std::move(weights));
    chains_.push_back(std::move(chains));
}

void WeylModuleResult::set_action(int adeg, int aidx, int d, Matrix m) {
    actions_[{adeg, aidx, d}] = std::move(m);
}

const Matrix* WeylModuleResult::action_ptr(int adeg, int aidx, int d) const {
    auto it = actions_.find({adeg, aidx, d});
    return it == actions_.end() ? nullptr : &it->second;
}

Matrix WeylModuleResult::action_impl(int adeg, int aidx, int d) const {
    auto it = actions_.find({adeg, aidx, d});
    if (it != actions_.end()) return it->second;
    return Matrix(dim(d + adeg), dim(d));
}

void WeylModuleResult::finalize() {
    // trim trailing zero components
    int top = termination.top_degree;
    weights_.resize(size_t(top + 1));
    chains_.resize(size_t(top + 1));
    for (auto it = actions_.begin(); it != actions_.end();) {
        auto [adeg, aidx, d] = it->first;
        if (d > top || d + adeg > top) it = actions_.erase(it);
        else ++it;
    }
    decomposition_ = decompose_module(*this);
    for (const auto& [d, mults] : decomposition_.components)
        for (const auto& [m, cnt] : mults)
            if (cnt > 0 && !omega.contains(m))
                throw wk_error(wk_error::code::internal, "isotypic weight escaped Omega");
}

int stopping_threshold(const GradedLieAlgebra& g, const TruncationSet& om) {
    if (om.empty()) return 0;
    long bound = 2 * om.max();
    int horizon = g.max_degree_available();
    int T = 0;
    if (horizon >= 0) {
        for (int i = 1; i <= horizon; ++i) {
            if (g.dim(i) == 0) continue;
            if (g.component_decomposition(i).begin()->first <= bound) T = i;
        }
        return T;
    }
    if (!g.min_hw_monotone())
        throw wk_error(wk_error::code::invalid_input,
                       "stopping threshold needs a finite oracle or a monotone min-highest-weight");
    int guard = int(4 * bound + 16);
    for (int i = 1; i <= guard; ++i) {
        if (g.dim(i) == 0) continue;
        long min_hw = g.component_decomposition(i).begin()->first;
        if (min_hw <= bound) T = i;
        else return T;  // monotone: no later component can qualify
    }
    throw wk_error(wk_error::code::internal, "monotone threshold scan did not terminate");
}

namespace {

// does some constituent of L(m) (x) L(mu), m in gi, mu in wj, land in Omega?
bool tensor_meets_omega(const std::map<long, long>& gi, const std::map<long, long>& wj,
                        const TruncationSet& om) {
    for (const auto& [m, km] : gi)
        for (const auto& [mu, kmu] : wj)
            for (long nu = std::abs(m - mu); nu <= m + mu; nu += 2)
                if (om.contains(nu)) return true;
    return false;
}

class WeylEngine {
  public:
    WeylEngine(AlgebraPtr g, const GradedWeightedModule& V0, TruncationSet om, EngineOptions opt,
               bool local, WeylKind kind, long lambda)
        : g_(std::move(g)), v0_(V0), om_(std::move(om)), opt_(opt), local_(local) {
        res_ = std::make_shared<WeylModuleResult>();
        res_->kind = kind;
        res_->lambda = lambda;
        res_->omega = om_;
        res_->set_algebra(g_);
        res_->algebra_id = g_->id();
        res_->omega_not_lower_warning = !om_.is_lower_set();
    }

    WeylResultPtr run() {
        if (!g_->degree0_is_sl2())
            throw wk_error(wk_error::code::invalid_input,
                           "Weyl engine needs the degree-0 component to be exactly sl2");
        if (v0_.lo_degree() != 0 || v0_.hi_degree() != 0)
            throw wk_error(wk_error::code::invalid_input, "V0 must be concentrated in degree 0");
        T_ = stopping_threshold(*g_, om_);
        res_->termination.T = T_;
        degree_zero();
        bool certified = false;
        if (res_->dim(0) == 0 || T_ == 0) {
            certified = true;
        } else {
            for (int d = 1; d <= opt_.max_degree; ++d) {
                compute_degree(d);
                int zeros = 0;
                for (int dd = d; dd >= 0 && res_->dim(dd) == 0; --dd) ++zeros;
                if (zeros >= T_) {
                    certified = true;
                    break;
                }
            }
        }
        res_->termination.rule =
            certified ? Termination::Rule::threshold : Termination::Rule::cap;
        res_->termination.certified = certified;
        int top = -1;
        for (int d = 0; d <= res_->hi_degree(); ++d)
            if (res_->dim(d) > 0) top = d;
        res_->termination.top_degree = top;
        res_->finalize();
        return res_;
    }

  private:
    AlgebraPtr g_;
    const GradedWeightedModule& v0_;
    TruncationSet om_;
    EngineOptions opt_;
    bool local_;
    std::shared_ptr<WeylModuleResult> res_;
    int T_ = 0;

    const Matrix* action_ref(int adeg, int aidx, int d) const {
        return res_->action_ptr(adeg, aidx, d);
    }

    void degree_zero() {
        Sl2Triple t = g_->sl2();
        auto keys = v0_.decomposition_at(0);
        bool all_kept = true;
        for (const auto& [m, k] : keys)
            if (!om_.contains(m)) all_kept = false;

        if (all_kept) {
            std::vector<long> ws;
            std::vector<WeylModuleResult::Chain> chains;
            for (int k = 0; k < v0_.dim(0); ++k) {
                ws.push_back(v0_.weight(0, k));
                chains.push_back({{}, k});
            }
            res_->push_degree(std::move(ws), std::move(chains));
            res_->set_action(0, t.e, 0, v0_.act_e(0));
            res_->set_action(0, t.f, 0, v0_.act_f(0));
            return;
        }
        IsotypicSplit split = truncate_isotypic(v0_, om_);
        const Subspace& kept = split.kept.at(0);
        int n = kept.dim();
        // coordinates on the kept subspace = values at its RREF pivot columns
        std::vector<int> pivots;
        for (int r = 0; r < kept.basis().rows(); ++r)
            for (int c = 0; c < kept.basis().cols(); ++c)
                if (sgn(kept.basis().at(r, c)) != 0) {
                    pivots.push_back(c);
                    break;
                }
        std::vector<long> ws;
        std::vector<WeylModuleResult::Chain> chains;
        for (int r = 0; r < n; ++r) {
            ws.push_back(v0_.weight(0, pivots[r]));
            chains.push_back({{}, r});  // generic roots; not words on v_la
        }
        auto restrict = [&](const Matrix& A) {
            Matrix M(n, n);
            for (int c = 0; c < n; ++c) {
                Vec img = A.apply(kept.basis().row(c));
                for (int r = 0; r < n; ++r) M.at(r, c) = img[pivots[r]];
            }
            return M;
        };
        res_->push_degree(std::move(ws), std::move(chains));
        res_->set_action(0, t.e, 0, restrict(v0_.act_e(0)));
        res_->set_action(0, t.f, 0, restrict(v0_.act_f(0)));
    }

    struct Summand {
        int i;       // algebra degree
        int j;       // module degree, i + j = d
        int offset;  // first candidate index
        int adim, wdim;
    };

    struct Block {
        std::vector<int> members;  // candidate indices, ascending
        RrefBuilder rel{0};
        std::vector<int> mprime;        // members-local positions spanning M'
        Matrix e_up, f_down;            // M'_w -> M'_{w+2} / M'_{w-2}
        RrefBuilder bad{0};
        std::vector<int> final_pos;     // positions into mprime that survive
        int final_offset = 0;           // first global basis index at this degree
    };

    void compute_degree(int d) {
        Sl2Triple t = g_->sl2();
        std::vector<Summand> summands;
        std::map<int, int> summand_by_adeg;
        int total = 0;
        for (int i = 1; i <= d; ++i) {
            int j = d - i;
            if (g_->dim(i) == 0 || res_->dim(j) == 0) continue;
            if (!tensor_meets_omega(g_->component_decomposition(i), res_->decomposition_at(j), om_))
                continue;  // image lies in the discarded isotypic part
            summand_by_adeg[i] = int(summands.size());
            summands.push_back({i, j, total, g_->dim(i), res_->dim(j)});
            total += g_->dim(i) * res_->dim(j);
        }
        if (total == 0) {
            res_->push_degree({}, {});
            return;
        }

        std::vector<long> entry_weight(total);
        std::vector<int> entry_pos(total);
        std::map<long, Block> blocks;
        for (const Summand& s : summands)
            for (int a = 0; a < s.adim; ++a) {
                long wa = g_->weight(s.i, a);
                for (int u = 0; u < s.wdim; ++u) {
                    int idx = s.offset + a * s.wdim + u;
                    long w = wa + res_->weight(s.j, u);
                    entry_weight[idx] = w;
                    blocks[w].members.push_back(idx);
                }
            }
        for (auto& [w, blk] : blocks) {
            for (size_t p = 0; p < blk.members.size(); ++p) entry_pos[blk.members[p]] = int(p);
            blk.rel = RrefBuilder(int(blk.members.size()));
        }

        // relation space R_d, assembled per weight block
        for (int i1 = 1; i1 <= d - 1; ++i1) {
            if (g_->dim(i1) == 0) continue;
            for (int i2 = i1; i1 + i2 <= d; ++i2) {
                if (g_->dim(i2) == 0) continue;
                int jw = d - i1 - i2;
                if (res_->dim(jw) == 0) continue;
                auto live1 = summand_by_adeg.find(i1);
                auto live2 = summand_by_adeg.find(i2);
                auto live3 = summand_by_adeg.find(i1 + i2);
                bool s1 = live1 != summand_by_adeg.end();
                bool s2 = live2 != summand_by_adeg.end();
                bool s3 = live3 != summand_by_adeg.end();
                if (!s1 && !s2 && !s3) continue;
                for (int a = 0; a < g_->dim(i1); ++a) {
                    const Matrix* Ax = action_ref(i1, a, jw);  // W_jw -> W_{d-i2}
                    long wx = g_->weight(i1, a);
                    for (int b = 0; b < g_->dim(i2); ++b) {
                        if (i1 == i2 && b <= a) continue;
                        const Matrix* Ay = action_ref(i2, b, jw);  // W_jw -> W_{d-i1}
                        const SparseVec& br = g_->bracket(i1, a, i2, b);
                        if (!Ax && !Ay && br.empty()) continue;
                        long wxy = wx + g_->weight(i2, b);
                        for (int u = 0; u < res_->dim(jw); ++u) {
                            long w = wxy + res_->weight(jw, u);
                            auto bit = blocks.find(w);
                            if (bit == blocks.end()) continue;
                            Block& blk = bit->second;
                            if (blk.rel.dim() == int(blk.members.size())) continue;
                            Vec v(blk.members.size(), Rat(0));
                            bool any = false;
                            if (s1 && Ay) {
                                const Summand& s = summands[live1->second];
                                for (int r = 0; r < Ay->rows(); ++r) {
                                    const Rat& c = Ay->at(r, u);
                                    if (sgn(c) == 0) continue;
                                    v[entry_pos[s.offset + a * s.wdim + r]] += c;
                                    any = true;
                                }
                            }
                            if (s2 && Ax) {
                                const Summand& s = summands[live2->second];
                                for (int r = 0; r < Ax->rows(); ++r) {
                                    const Rat& c = Ax->at(r, u);
                                    if (sgn(c) == 0) continue;
                                    v[entry_pos[s.offset + b * s.wdim + r]] -= c;
                                    any = true;
                                }
                            }
                            if (s3 && !br.empty()) {
                                const Summand& s = summands[live3->second];
                                for (const auto& [k, c] : br) {
                                    v[entry_pos[s.offset + k * s.wdim + u]] -= c;
                                    any = true;
                                }
                            }
                            if (any) blk.rel.insert(std::move(v));
                        }
                    }
                }
            }
        }

        // M' basis per block: candidate positions not pivotal for relations
        for (auto& [w, blk] : blocks) {
            std::vector<bool> is_pivot(blk.members.size(), false);
            for (int c : blk.rel.pivots()) is_pivot[c] = true;
            for (size_t p = 0; p < blk.members.size(); ++p)
                if (!is_pivot[p]) blk.mprime.push_back(int(p));
            blk.bad = RrefBuilder(int(blk.mprime.size()));
        }

        // sl2 action of e (resp. f) on a candidate unit, as a raw block vector
        auto cand_sl2 = [&](int op_idx, int cand_idx, long w_src, long w_dst) -> Vec {
            auto bit = blocks.find(w_dst);
            if (bit == blocks.end()) return {};
            Vec v(bit->second.members.size(), Rat(0));
            // decode candidate
            int si = 0;
            while (si + 1 < int(summands.size()) && summands[si + 1].offset <= cand_idx) ++si;
            const Summand& s = summands[si];
            int rem = cand_idx - s.offset;
            int a = rem / s.wdim, u = rem % s.wdim;
            for (const auto& [k, c] : g_->bracket(0, op_idx, s.i, a))
                v[entry_pos[s.offset + k * s.wdim + u]] += c;
            const Matrix* Aw = action_ref(0, op_idx, s.j);
            if (Aw)
                for (int r = 0; r < Aw->rows(); ++r) {
                    const Rat& c = Aw->at(r, u);
                    if (sgn(c) != 0) v[entry_pos[s.offset + a * s.wdim + r]] += c;
                }
            (void)w_src;
            return v;
        };

        // reduce a raw block vector to M' coordinates
        auto to_mprime = [&](Block& blk, Vec raw) -> Vec {
            Vec red = blk.rel.reduce(std::move(raw));
            Vec out(blk.mprime.size());
            for (size_t p = 0; p < blk.mprime.size(); ++p) out[p] = red[blk.mprime[p]];
            return out;
        };

        // E and F block maps on M'
        for (auto& [w, blk] : blocks) {
            auto make = [&](int op, long wdst) {
                auto bit = blocks.find(wdst);
                int rows = bit == blocks.end() ? 0 : int(bit->second.mprime.size());
                Matrix M(rows, int(blk.mprime.size()));
                if (rows == 0) return M;
                Block& dst = bit->second;
                for (size_t p = 0; p < blk.mprime.size(); ++p) {
                    Vec raw = cand_sl2(op, blk.members[blk.mprime[p]], w, wdst);
                    Vec q = to_mprime(dst, std::move(raw));
                    for (int r = 0; r < rows; ++r) M.at(r, int(p)) = q[r];
                }
                return M;
            };
            blk.e_up = make(t.e, w + 2);
            blk.f_down = make(t.f, w - 2);
        }

        if (opt_.self_check) self_check_relations(d, blocks, summands, entry_pos, cand_sl2);

        // bad subspace: the isotypic complement of Omega, via e-singular vectors
        std::vector<std::pair<long, Vec>> frontier;
        for (auto& [w, blk] : blocks) {
            if (blk.mprime.empty()) continue;
            Subspace ker = kernel(blk.e_up);
            if (ker.dim() == 0) continue;
            if (w < 0)
                throw wk_error(wk_error::code::internal, "e-singular vector of negative weight");
            if (om_.contains(w)) continue;
            for (int r = 0; r < ker.basis().rows(); ++r) frontier.emplace_back(w, ker.basis().row(r));
        }
        if (local_) {
            // kill x (x) v_la for x in the positive weight-zero part of g_(d)
            auto live = summand_by_adeg.find(d);
            if (live != summand_by_adeg.end()) {
                const Summand& s = summands[live->second];
                long la = res_->weight(0, 0);
                for (int a : g_->weight_zero_indices(d)) {
                    int cand = s.offset + a * s.wdim + 0;
                    Block& blk = blocks.at(la);
                    Vec raw(blk.members.size(), Rat(0));
                    raw[entry_pos[cand]] = 1;
                    Vec q = to_mprime(blk, std::move(raw));
                    if (!vec_is_zero(q)) frontier.emplace_back(la, std::move(q));
                }
            }
        }
        // close under e and f, collecting into the per-block bad builders
        std::vector<std::pair<long, Vec>> queue = std::move(frontier);
        for (auto& [w, v] : queue)
            blocks.at(w).bad.insert(v);
        while (!queue.empty()) {
            std::vector<std::pair<long, Vec>> next;
            for (const auto& [w, v] : queue) {
                Block& blk = blocks.at(w);
                for (int dir = 0; dir < 2; ++dir) {
                    long wdst = dir == 0 ? w + 2 : w - 2;
                    const Matrix& M = dir == 0 ? blk.e_up : blk.f_down;
                    if (M.rows() == 0) continue;
                    Vec img = M.apply(v);
                    if (vec_is_zero(img)) continue;
                    if (blocks.at(wdst).bad.insert(img)) next.emplace_back(wdst, std::move(img));
                }
            }
            queue = std::move(next);
        }

        // final basis: blocks in weight-descending order
        std::vector<long> ws;
        std::vector<WeylModuleResult::Chain> chains;
        int final_total = 0;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            Block& blk = it->second;
            std::vector<bool> bad_pivot(blk.mprime.size(), false);
            for (int c : blk.bad.pivots()) bad_pivot[c] = true;
            blk.final_offset = final_total;
            for (size_t p = 0; p < blk.mprime.size(); ++p) {
                if (bad_pivot[p]) continue;
                blk.final_pos.push_back(int(p));
                int cand = blk.members[blk.mprime[p]];
                int si = 0;
                while (si + 1 < int(summands.size()) && summands[si + 1].offset <= cand) ++si;
                const Summand& s = summands[si];
                int rem = cand - s.offset;
                int a = rem / s.wdim, u = rem % s.wdim;
                const WeylModuleResult::Chain& parent = res_->chain(s.j, u);
                WeylModuleResult::Chain c;
                c.word.emplace_back(s.i, a);
                c.word.insert(c.word.end(), parent.word.begin(), parent.word.end());
                c.root = parent.root;
                chains.push_back(std::move(c));
                ws.push_back(it->first);
                ++final_total;
            }
        }
        res_->push_degree(std::move(ws), std::move(chains));
        if (final_total == 0) return;

        // project a raw block vector all the way to final coordinates of W_d
        auto to_final = [&](Block& blk, Vec raw, Vec& out) {
            Vec q = blk.bad.reduce(to_mprime(blk, std::move(raw)));
            for (size_t p = 0; p < blk.final_pos.size(); ++p)
                out[blk.final_offset + int(p)] = q[blk.final_pos[p]];
        };

        // action matrices: pi restricted to each live summand
        for (const Summand& s : summands) {
            for (int a = 0; a < s.adim; ++a) {
                Matrix M(final_total, s.wdim);
                bool nonzero = false;
                for (int u = 0; u < s.wdim; ++u) {
                    int cand = s.offset + a * s.wdim + u;
                    Block& blk = blocks.at(entry_weight[cand]);
                    Vec raw(blk.members.size(), Rat(0));
                    raw[entry_pos[cand]] = 1;
                    Vec out(final_total, Rat(0));
                    to_final(blk, std::move(raw), out);
                    for (int r = 0; r < final_total; ++r)
                        if (sgn(out[r]) != 0) {
                            M.at(r, u) = out[r];
                            nonzero = true;
                        }
                }
                if (nonzero) res_->set_action(s.i, a, s.j, std::move(M));
            }
        }

        // e and f on W_d
        for (int op : {t.e, t.f}) {
            Matrix M(final_total, final_total);
            for (auto& [w, blk] : blocks) {
                long wdst = op == t.e ? w + 2 : w - 2;
                auto bit = blocks.find(wdst);
                if (bit == blocks.end()) continue;
                Block& dst = bit->second;
                const Matrix& block_map = op == t.e ? blk.e_up : blk.f_down;
                for (size_t p = 0; p < blk.final_pos.size(); ++p) {
                    Vec col(blk.mprime.size(), Rat(0));
                    col[blk.final_pos[p]] = 1;
                    Vec img = block_map.apply(col);
                    Vec q = dst.bad.reduce(std::move(img));
                    for (size_t r = 0; r < dst.final_pos.size(); ++r)
                        M.at(dst.final_offset + int(r), blk.final_offset + int(p)) = q[dst.final_pos[r]];
                }
            }
            res_->set_action(0, op, d, std::move(M));
        }

        if (opt_.self_check) {
            // [e,f] = h on the finished component
            Matrix E = res_->act_e(d), F = res_->act_f(d);
            Matrix C = E.multiply(F);
            Matrix FE = F.multiply(E);
            for (int r = 0; r < final_total; ++r)
                for (int c = 0; c < final_total; ++c) {
                    Rat want = r == c ? rat(res_->weight(d, r)) : Rat(0);
                    if (C.at(r, c) - FE.at(r, c) != want)
                        throw wk_error(wk_error::code::internal, "sl2 commutator failed on W_d");
                }
        }
    }

    template <typename CandSl2>
    void self_check_relations(int d, std::map<long, Block>& blocks,
                              const std::vector<Summand>& summands,
                              const std::vector<int>& entry_pos, CandSl2&& cand_sl2) {
        (void)d;
        (void)summands;
        (void)entry_pos;
        // e-image of every relation row must again be a relation (sl2-stability of R_d)
        Sl2Triple t = g_->sl2();
        for (auto& [w, blk] : blocks) {
            auto rows = blk.rel.sorted_rows();
            auto bit = blocks.find(w + 2);
            for (const Vec& row : rows) {
                Vec img;
                for (size_t p = 0; p < row.size(); ++p) {
                    if (sgn(row[p]) == 0) continue;
                    Vec part = cand_sl2(t.e, blk.members[p], w, w + 2);
                    if (part.empty()) continue;
                    if (img.empty()) img = Vec(part.size(), Rat(0));
                    vec_add_scaled(img, part, row[p]);
                }
                if (img.empty()) continue;
                if (bit == blocks.end()) {
                    if (!vec_is_zero(img))
                        throw wk_error(wk_error::code::internal, "relation space not sl2-stable");
                    continue;
                }
                if (!vec_is_zero(bit->second.rel.reduce(img)))
                    throw wk_error(wk_error::code::internal, "relation space not sl2-stable");
            }
        }
    }
};

}  // namespace

WeylResultPtr compute_bind(AlgebraPtr g, const GradedWeightedModule& V0, const TruncationSet& om,
                           const EngineOptions& opt) {
    WeylEngine engine(g, V0, om, opt, false, WeylKind::bind, -1);
    return engine.run();
}

WeylResultPtr compute_global_weyl(AlgebraPtr g, long la, const EngineOptions& opt) {
    if (la < 0)
        throw wk_error(wk_error::code::non_dominant, "W(la) = 0 unless la is dominant");
    ModulePtr v0 = pullback_module(g, {la});
    WeylEngine engine(g, *v0, TruncationSet::lower(la), opt, false, WeylKind::global, la);
    return engine.run();
}

WeylResultPtr compute_local_weyl(AlgebraPtr g, long la, const EngineOptions& opt) {
    if (la < 0)
        throw wk_error(wk_error::code::non_dominant, "W_pi(la) = 0 unless la is dominant");
    ModulePtr v0 = pullback_module(g, {la});
    WeylEngine engine(g, *v0, TruncationSet::lower(la), opt, true, WeylKind::local, la);
    return engine.run();
}

Decomposition compute_socle(const GradedWeightedModule& V) {
    AlgebraPtr g = V.algebra();
    Decomposition out;
    int span = V.hi_degree() - V.lo_degree();
    for (int d = V.lo_degree(); d <= V.hi_degree(); ++d) {
        int n = V.dim(d);
        Subspace socle = Subspace::full(n);
        for (int i = 1; i <= span && socle.dim() > 0; ++i) {
            if (g->max_degree_available() >= 0 && i > g->max_degree_available()) break;
            for (int a = 0; a < g->dim(i) && socle.dim() > 0; ++a)
                socle = socle.intersect(kernel(V.action(i, a, d)));
        }
        std::map<long, long> dims;
        for (int r = 0; r < socle.basis().rows(); ++r) {
            // rows of an RREF of weight vectors are weight-homogeneous
            int pivot = -1;
            for (int c = 0; c < n; ++c)
                if (sgn(socle.basis().at(r, c)) != 0) {
                    pivot = c;
                    break;
                }
            dims[V.weight(d, pivot)] += 1;
        }
        out.components.emplace_back(d, decompose_sl2_dims(dims));
        out.total_dim += socle.dim();
    }
    return out;
}

}  // namespace weylkit
