#include "weylkit/induced.hpp"

namespace weylkit {

InducedModule::InducedModule(AlgebraPtr alg, long la, int max_degree)
    : alg_(std::move(alg)), la_(la), max_degree_(max_degree) {
    if (la_ < 0) throw wk_error(wk_error::code::non_dominant, "induced module needs a dominant weight");
    for (int i = 1; i <= max_degree_; ++i)
        for (int a = 0; a < alg_->dim(i); ++a) {
            gen_id_[{i, a}] = int(gens_.size());
            gens_.emplace_back(i, a);
        }
    monos_.resize(max_degree_ + 1);
    mono_index_.resize(max_degree_ + 1);
    // lex enumeration of weakly increasing generator sequences per degree
    for (int d = 0; d <= max_degree_; ++d) {
        std::vector<Mono>& out = monos_[d];
        Mono cur;
        auto rec = [&](auto&& self, int remaining, int min_gid) -> void {
            if (remaining == 0) {
                out.push_back(cur);
                return;
            }
            for (int g = min_gid; g < gen_count(); ++g) {
                if (gen_degree(g) > remaining) continue;
                cur.push_back(g);
                self(self, remaining - gen_degree(g), g);
                cur.pop_back();
            }
        };
        rec(rec, d, 0);
        for (size_t i = 0; i < out.size(); ++i) mono_index_[d][out[i]] = int(i);
    }
}

int InducedModule::gen_id(int adeg, int aidx) const {
    auto it = gen_id_.find({adeg, aidx});
    if (it == gen_id_.end()) throw wk_error(wk_error::code::internal, "generator outside served degrees");
    return it->second;
}

int InducedModule::dim(int d) const {
    if (d < 0 || d > max_degree_) return 0;
    return int(monos_[d].size()) * int(la_ + 1);
}

long InducedModule::weight(int d, int k) const {
    int mono_idx = k / int(la_ + 1), j = k % int(la_ + 1);
    long w = la_ - 2 * j;
    for (int g : monos_[d][mono_idx]) w += gen_weight(g);
    return w;
}

const InducedModule::MonoPoly& InducedModule::straighten(const Mono& seq) const {
    auto it = straighten_cache_.find(seq);
    if (it != straighten_cache_.end()) return it->second;
    MonoPoly out;
    int bad = -1;
    for (size_t t = 0; t + 1 < seq.size(); ++t)
        if (seq[t] > seq[t + 1]) {
            bad = int(t);
            break;
        }
    if (bad < 0) {
        out[seq] = 1;
    } else {
        // X Y = Y X + [X, Y]
        int X = seq[bad], Y = seq[bad + 1];
        Mono swapped = seq;
        std::swap(swapped[bad], swapped[bad + 1]);
        for (const auto& [m, c] : straighten(swapped)) {
            Rat& slot = out[m];
            slot += c;
            if (sgn(slot) == 0) out.erase(m);
        }
        const SparseVec& br = alg_->bracket(gen_degree(X), gen_index(X), gen_degree(Y), gen_index(Y));
        if (!br.empty()) {
            int target_deg = gen_degree(X) + gen_degree(Y);
            Mono shorter(seq.begin(), seq.begin() + bad);
            shorter.push_back(0);  // placeholder for the bracket term
            shorter.insert(shorter.end(), seq.begin() + bad + 2, seq.end());
            for (const auto& [k, c] : br) {
                shorter[bad] = gen_id(target_deg, k);
                for (const auto& [m, cm] : straighten(shorter)) {
                    Rat& slot = out[m];
                    slot += cm * c;
                    if (sgn(slot) == 0) out.erase(m);
                }
            }
        }
    }
    return straighten_cache_.emplace(seq, std::move(out)).first->second;
}

Matrix InducedModule::action_impl(int adeg, int aidx, int d) const {
    auto key = std::make_tuple(adeg, aidx, d);
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;

    int rows = dim(d + adeg), cols = dim(d);
    Matrix M(rows, cols);
    int nl = int(la_ + 1);
    Sl2Triple t = alg_->sl2();
    for (size_t mi = 0; mi < monos_[d].size(); ++mi) {
        const Mono& mono = monos_[d][mi];
        for (int j = 0; j < nl; ++j) {
            int col = basis_index(d, int(mi), j);
            if (adeg >= 1) {
                // left multiplication by the generator, then straighten
                Mono seq;
                seq.push_back(gen_id(adeg, aidx));
                seq.insert(seq.end(), mono.begin(), mono.end());
                for (const auto& [m, c] : straighten(seq))
                    M.at(basis_index(d + adeg, monomial_index(d + adeg, m), j), col) += c;
            } else {
                // a.(z1..zk (x) u) = sum_t z1..[a,zt]..zk (x) u + z1..zk (x) a.u
                for (size_t pos = 0; pos < mono.size(); ++pos) {
                    int g = mono[pos];
                    const SparseVec& br = alg_->bracket(0, aidx, gen_degree(g), gen_index(g));
                    for (const auto& [k, c] : br) {
                        Mono seq = mono;
                        seq[pos] = gen_id(gen_degree(g), k);
                        for (const auto& [m, cm] : straighten(seq))
                            M.at(basis_index(d, monomial_index(d, m), j), col) += cm * c;
                    }
                }
                if (aidx == t.e && j > 0)
                    M.at(col - 1, col) += rat(long(j) * (la_ + 1 - j));
                else if (aidx == t.f && j < nl - 1)
                    M.at(col + 1, col) += 1;
                else if (aidx == t.h)
                    M.at(col, col) += rat(la_ - 2 * j);
            }
        }
    }
    return action_cache_.emplace(key, std::move(M)).first->second;
}

std::shared_ptr<const InducedModule> induced_module(AlgebraPtr alg, long la, int max_degree) {
    return std::make_shared<InducedModule>(std::move(alg), la, max_degree);
}

long pbw_monomial_count(const GradedLieAlgebra& g, int d) {
    // coefficient of t^d in prod_{i>=1} (1-t^i)^{-dim g_(i)}
    std::vector<long> ways(d + 1, 0);
    ways[0] = 1;
    for (int i = 1; i <= d; ++i)
        for (int copy = 0; copy < g.dim(i); ++copy)
            for (int n = i; n <= d; ++n) ways[n] += ways[n - i];
    return ways[d];
}

}  // namespace weylkit
