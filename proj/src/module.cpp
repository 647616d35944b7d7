#include "weylkit/module.hpp"

#include <sstream>

namespace weylkit {

std::string TruncationSet::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (long m : omega) {
        if (!first) os << ",";
        os << m;
        first = false;
    }
    os << "}";
    return os.str();
}

long Decomposition::dim_at(int d) const {
    for (const auto& [deg, mults] : components)
        if (deg == d) {
            long n = 0;
            for (const auto& [m, k] : mults) n += k * (m + 1);
            return n;
        }
    return 0;
}

long Decomposition::mult(int d, long m) const {
    for (const auto& [deg, mults] : components)
        if (deg == d) {
            auto it = mults.find(m);
            return it == mults.end() ? 0 : it->second;
        }
    return 0;
}

std::map<long, long> Decomposition::total_mults() const {
    std::map<long, long> out;
    for (const auto& [deg, mults] : components)
        for (const auto& [m, k] : mults) out[m] += k;
    return out;
}

Matrix GradedWeightedModule::action(int adeg, int aidx, int d) const {
    int rows = dim(d + adeg), cols = dim(d);
    if (rows == 0 || cols == 0) return Matrix(rows, cols);
    if (adeg == 0 && aidx == algebra()->sl2().h) {
        Matrix m(rows, cols);
        for (int k = 0; k < cols; ++k) m.at(k, k) = rat(weight(d, k));
        return m;
    }
    return action_impl(adeg, aidx, d);
}

std::map<long, long> GradedWeightedModule::weight_dims(int d) const {
    std::map<long, long> dims;
    for (int k = 0; k < dim(d); ++k) dims[weight(d, k)] += 1;
    return dims;
}

std::map<long, long> GradedWeightedModule::decomposition_at(int d) const {
    return decompose_sl2_dims(weight_dims(d));
}

long GradedWeightedModule::total_dim() const {
    long n = 0;
    for (int d = lo_degree(); d <= hi_degree(); ++d) n += dim(d);
    return n;
}

std::vector<int> GradedWeightedModule::weight_slice(int d, long m) const {
    std::vector<int> out;
    for (int k = 0; k < dim(d); ++k)
        if (weight(d, k) == m) out.push_back(k);
    return out;
}

Decomposition decompose_module(const GradedWeightedModule& V) {
    Decomposition out;
    for (int d = V.lo_degree(); d <= V.hi_degree(); ++d) {
        out.components.emplace_back(d, V.decomposition_at(d));
        out.total_dim += V.dim(d);
    }
    return out;
}

void StoredModule::push_component(std::vector<long> weights) { comps_.push_back(std::move(weights)); }

void StoredModule::set_action(int adeg, int aidx, int d, Matrix m) {
    if (m.rows() != dim(d + adeg) || m.cols() != dim(d))
        throw wk_error(wk_error::code::internal, "stored action has wrong shape");
    actions_[{adeg, aidx, d}] = std::move(m);
}

int StoredModule::dim(int d) const {
    int i = d - lo_;
    return (i < 0 || i >= int(comps_.size())) ? 0 : int(comps_[i].size());
}

Matrix StoredModule::action_impl(int adeg, int aidx, int d) const {
    auto it = actions_.find({adeg, aidx, d});
    if (it != actions_.end()) return it->second;
    return Matrix(dim(d + adeg), dim(d));
}

ModulePtr pullback_module(AlgebraPtr alg, const std::vector<long>& highest_weights, int degree) {
    auto mod = std::make_shared<StoredModule>(alg, degree);
    std::vector<long> weights;
    for (long m : highest_weights) {
        if (m < 0) throw wk_error(wk_error::code::non_dominant, "pullback of L(m) needs m >= 0");
        for (long j = 0; j <= m; ++j) weights.push_back(m - 2 * j);
    }
    int n = int(weights.size());
    mod->push_component(weights);
    Matrix E(n, n), F(n, n);
    int base = 0;
    for (long m : highest_weights) {
        for (long j = 0; j <= m; ++j) {
            if (j > 0) E.at(base + int(j) - 1, base + int(j)) = rat(j * (m + 1 - j));
            if (j < m) F.at(base + int(j) + 1, base + int(j)) = 1;
        }
        base += int(m) + 1;
    }
    Sl2Triple t = alg->sl2();
    mod->set_action(0, t.e, degree, std::move(E));
    mod->set_action(0, t.f, degree, std::move(F));
    return mod;
}

namespace {

class ShiftedModule final : public GradedWeightedModule {
  public:
    ShiftedModule(ModulePtr base, int n) : base_(std::move(base)), n_(n) {}
    AlgebraPtr algebra() const override { return base_->algebra(); }
    int lo_degree() const override { return base_->lo_degree() + n_; }
    int hi_degree() const override { return base_->hi_degree() + n_; }
    int dim(int d) const override { return base_->dim(d - n_); }
    long weight(int d, int k) const override { return base_->weight(d - n_, k); }

  protected:
    Matrix action_impl(int adeg, int aidx, int d) const override {
        return base_->action(adeg, aidx, d - n_);
    }

  private:
    ModulePtr base_;
    int n_;
};

}  // namespace

ModulePtr shift_module(ModulePtr v, int n) {
    if (n == 0) return v;
    return std::make_shared<ShiftedModule>(std::move(v), n);
}

ModulePtr twisted_dual(const GradedWeightedModule& v, const GradedAutomorphism& sigma) {
    AlgebraPtr alg = v.algebra();
    int lo = -v.hi_degree(), hi = -v.lo_degree();
    auto out = std::make_shared<StoredModule>(alg, lo);
    for (int d = lo; d <= hi; ++d) {
        std::vector<long> ws;
        for (int k = 0; k < v.dim(-d); ++k) ws.push_back(v.weight(-d, k));
        out->push_component(std::move(ws));
    }
    int top_adeg = v.hi_degree() - v.lo_degree();
    for (int adeg = 0; adeg <= top_adeg; ++adeg) {
        if (alg->max_degree_available() >= 0 && adeg > alg->max_degree_available()) break;
        const Matrix& S = sigma.matrix(adeg);
        for (int d = lo; d <= hi; ++d) {
            if (out->dim(d) == 0 || out->dim(d + adeg) == 0) continue;
            for (int a = 0; a < alg->dim(adeg); ++a) {
                // (x phi)(w) = -phi(sigma(x) w): matrix is -(sum_k S_{k,a} A_k)^T
                Matrix M(out->dim(d + adeg), out->dim(d));
                bool nonzero = false;
                for (int k = 0; k < alg->dim(adeg); ++k) {
                    if (sgn(S.at(k, a)) == 0) continue;
                    Matrix A = v.action(adeg, k, -d - adeg);  // V_{-d-adeg} -> V_{-d}
                    for (int p = 0; p < M.rows(); ++p)
                        for (int q = 0; q < M.cols(); ++q) {
                            if (sgn(A.at(q, p)) == 0) continue;
                            M.at(p, q) -= S.at(k, a) * A.at(q, p);
                            nonzero = true;
                        }
                }
                if (nonzero) out->set_action(adeg, a, d, std::move(M));
            }
        }
    }
    return out;
}

Subspace highest_weight_vectors(const GradedWeightedModule& V, int d, long m) {
    int n = V.dim(d);
    std::vector<int> slice = V.weight_slice(d, m);
    if (slice.empty()) return Subspace::zero(n);
    std::vector<int> target = V.weight_slice(d, m + 2);
    Matrix E = V.act_e(d);
    // restriction of e to the weight-m slice
    Matrix R(int(target.size()), int(slice.size()));
    for (size_t c = 0; c < slice.size(); ++c)
        for (size_t r = 0; r < target.size(); ++r) R.at(int(r), int(c)) = E.at(target[r], slice[c]);
    Subspace ker_slice = kernel(R);
    std::vector<Vec> rows;
    for (int r = 0; r < ker_slice.basis().rows(); ++r) {
        Vec v(n, Rat(0));
        for (size_t c = 0; c < slice.size(); ++c) v[slice[c]] = ker_slice.basis().at(r, int(c));
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, n);
}

Subspace sl2_submodule_closure(const GradedWeightedModule& V, int d, const std::vector<Vec>& seeds) {
    int n = V.dim(d);
    Matrix E = V.act_e(d), F = V.act_f(d);
    RrefBuilder span(n);
    std::vector<Vec> frontier;
    for (const Vec& s : seeds)
        if (span.insert(s)) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (const Matrix* op : {&E, &F}) {
                Vec w = op->apply(v);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return Subspace::span(span.sorted_rows(), n);
}

IsotypicSplit truncate_isotypic(const GradedWeightedModule& V, const TruncationSet& om) {
    IsotypicSplit out;
    for (int d = V.lo_degree(); d <= V.hi_degree(); ++d) {
        int n = V.dim(d);
        std::vector<Vec> kept_rows, disc_rows;
        for (const auto& [m, k] : V.decomposition_at(d)) {
            Subspace hw = highest_weight_vectors(V, d, m);
            std::vector<Vec> seeds;
            for (int r = 0; r < hw.basis().rows(); ++r) seeds.push_back(hw.basis().row(r));
            Subspace closure = sl2_submodule_closure(V, d, seeds);
            auto& rows = om.contains(m) ? kept_rows : disc_rows;
            for (int r = 0; r < closure.basis().rows(); ++r) rows.push_back(closure.basis().row(r));
        }
        out.kept[d] = Subspace::span(kept_rows, n);
        out.discarded[d] = Subspace::span(disc_rows, n);
        if (out.kept[d].dim() + out.discarded[d].dim() != n)
            throw wk_error(wk_error::code::internal, "isotypic split does not fill the component");
    }
    return out;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    auto comps = nlohmann::json::array();
    for (const auto& [deg, mults] : d.components) {
        nlohmann::json c;
        c["degree"] = deg;
        nlohmann::json ms = nlohmann::json::object();
        for (const auto& [m, k] : mults) ms[std::to_string(m)] = k;
        c["mults"] = ms;
        c["dim"] = d.dim_at(deg);
        comps.push_back(c);
    }
    j["components"] = comps;
    j["total_dim"] = d.total_dim;
    return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    Decomposition d;
    for (const auto& c : j.at("components")) {
        std::map<long, long> mults;
        for (const auto& [key, val] : c.at("mults").items()) mults[std::stol(key)] = val.get<long>();
        d.components.emplace_back(c.at("degree").get<int>(), std::move(mults));
    }
    d.total_dim = j.at("total_dim").get<long>();
    return d;
}

}  // namespace weylkit
