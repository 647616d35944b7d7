#pragma once

#include "weylkit/module.hpp"

namespace weylkit {

// Truncation to degrees <= max_degree of the induced module
// U(gbar) (x)_{U(g)} L(la). Component d has basis {PBW monomials of total
// degree d in the positive-part generators} x {standard basis of L(la)};
// generators are ordered (degree asc, weight desc, index) and monomials are
// weakly increasing in that order. Also the brute-force side of the Weyl
// engine's oracle checks.
class InducedModule final : public GradedWeightedModule {
  public:
    using Mono = std::vector<int>;  // weakly increasing flat generator ids
    using MonoPoly = std::map<Mono, Rat>;

    InducedModule(AlgebraPtr alg, long la, int max_degree);

    AlgebraPtr algebra() const override { return alg_; }
    int lo_degree() const override { return 0; }
    int hi_degree() const override { return max_degree_; }
    int dim(int d) const override;
    long weight(int d, int k) const override;

    long lambda() const { return la_; }

    int gen_count() const { return int(gens_.size()); }
    int gen_degree(int gid) const { return gens_[gid].first; }
    int gen_index(int gid) const { return gens_[gid].second; }
    long gen_weight(int gid) const { return alg_->weight(gens_[gid].first, gens_[gid].second); }
    int gen_id(int adeg, int aidx) const;

    const std::vector<Mono>& monomials(int d) const { return monos_.at(d); }
    int monomial_index(int d, const Mono& m) const { return mono_index_.at(d).at(m); }
    // basis vector = (monomial, L(la) basis index j)
    int basis_index(int d, int mono_idx, int j) const { return mono_idx * int(la_ + 1) + j; }

    // PBW normal form of an arbitrary generator-id sequence.
    const MonoPoly& straighten(const Mono& seq) const;

  protected:
    Matrix action_impl(int adeg, int aidx, int d) const override;

  private:
    AlgebraPtr alg_;
    long la_;
    int max_degree_;
    std::vector<std::pair<int, int>> gens_;            // flat id -> (degree, index)
    std::map<std::pair<int, int>, int> gen_id_;
    std::vector<std::vector<Mono>> monos_;             // per degree
    std::vector<std::map<Mono, int>> mono_index_;
    mutable std::map<Mono, MonoPoly> straighten_cache_;
    mutable std::map<std::tuple<int, int, int>, Matrix> action_cache_;
};

std::shared_ptr<const InducedModule> induced_module(AlgebraPtr alg, long la, int max_degree);

// Number of degree-d PBW monomials predicted by the graded product
// prod_i (1 - t^i)^(-dim g_(i)); the independent count for the dimension
// invariant of induced components.
long pbw_monomial_count(const GradedLieAlgebra& g, int d);

}  // namespace weylkit
