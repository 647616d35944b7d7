#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include <json.hpp>

#include "weylkit/lie_algebra.hpp"
#include "weylkit/subspace.hpp"

namespace weylkit {

// Finite set of dominant weights (rank 1: nonnegative integers).
struct TruncationSet {
    std::set<long> omega;

    TruncationSet() = default;
    TruncationSet(std::initializer_list<long> ms) : omega(ms) {}
    explicit TruncationSet(std::set<long> ms) : omega(std::move(ms)) {}
    static TruncationSet lower(long la) {
        TruncationSet om;
        for (long m = 0; m <= la; ++m) om.omega.insert(m);
        return om;
    }

    bool contains(long m) const { return omega.count(m) > 0; }
    bool empty() const { return omega.empty(); }
    long max() const { return omega.empty() ? -1 : *omega.rbegin(); }
    // lower set for the rank-1 root order restricted to P_+: {0,...,max}
    bool is_lower_set() const { return omega.empty() || long(omega.size()) == max() + 1; }
    std::string to_string() const;
};

// degree -> (highest weight -> multiplicity)
struct Decomposition {
    std::vector<std::pair<int, std::map<long, long>>> components;  // sorted by degree
    long total_dim = 0;

    long dim_at(int d) const;
    long mult(int d, long m) const;
    std::map<long, long> total_mults() const;
    bool operator==(const Decomposition& o) const {
        return components == o.components && total_dim == o.total_dim;
    }
};

// Degree- and weight-graded module over a graded Lie algebra with an exact
// action oracle per algebra basis element. Components live on a contiguous
// finite degree range; h always acts diagonally by the stored weights.
class GradedWeightedModule {
  public:
    virtual ~GradedWeightedModule() = default;

    virtual AlgebraPtr algebra() const = 0;
    virtual int lo_degree() const = 0;
    virtual int hi_degree() const = 0;
    virtual int dim(int d) const = 0;
    virtual long weight(int d, int k) const = 0;

    // Matrix of the algebra basis element (adeg, aidx) from component d to
    // component d + adeg; zero when either side is empty.
    Matrix action(int adeg, int aidx, int d) const;

    Matrix act_e(int d) const { return action(0, algebra()->sl2().e, d); }
    Matrix act_f(int d) const { return action(0, algebra()->sl2().f, d); }
    Matrix act_h(int d) const { return action(0, algebra()->sl2().h, d); }

    std::map<long, long> weight_dims(int d) const;
    std::map<long, long> decomposition_at(int d) const;
    long total_dim() const;
    std::vector<int> weight_slice(int d, long m) const;  // basis indices of weight m

  protected:
    virtual Matrix action_impl(int adeg, int aidx, int d) const = 0;
};

using ModulePtr = std::shared_ptr<const GradedWeightedModule>;

Decomposition decompose_module(const GradedWeightedModule& V);

// Explicitly stored module; used for pullbacks, duals and engine results.
class StoredModule final : public GradedWeightedModule {
  public:
    StoredModule(AlgebraPtr alg, int lo) : alg_(std::move(alg)), lo_(lo) {}

    void push_component(std::vector<long> weights);
    void set_action(int adeg, int aidx, int d, Matrix m);

    AlgebraPtr algebra() const override { return alg_; }
    int lo_degree() const override { return lo_; }
    int hi_degree() const override { return lo_ + int(comps_.size()) - 1; }
    int dim(int d) const override;
    long weight(int d, int k) const override { return comps_.at(size_t(d - lo_)).at(size_t(k)); }

  protected:
    Matrix action_impl(int adeg, int aidx, int d) const override;

  private:
    AlgebraPtr alg_;
    int lo_;
    std::vector<std::vector<long>> comps_;
    std::map<std::tuple<int, int, int>, Matrix> actions_;
};

// Direct sum of irreducibles L(m) placed in one degree, with the algebra
// acting through the projection to its degree-0 part (positive part acts
// by zero). Basis is summand-major, each L(m) listed u_0..u_m from the
// highest weight down; for a single L(la) the vector v_la has index 0.
ModulePtr pullback_module(AlgebraPtr alg, const std::vector<long>& highest_weights, int degree = 0);

ModulePtr shift_module(ModulePtr v, int n);

// sigma-twisted dual: contragredient precomposed with a certified
// automorphism restricting to -id on the Cartan line; degrees are negated
// and per-weight dimensions preserved.
ModulePtr twisted_dual(const GradedWeightedModule& v, const GradedAutomorphism& sigma);

// ker(e) n (weight-m slice of V_(d)), as a subspace of V_(d).
Subspace highest_weight_vectors(const GradedWeightedModule& V, int d, long m);

// Smallest e,f,h-stable subspace of V_(d) containing the seeds.
Subspace sl2_submodule_closure(const GradedWeightedModule& V, int d, const std::vector<Vec>& seeds);

struct IsotypicSplit {
    std::map<int, Subspace> kept, discarded;  // per degree
};

// tau_Omega and its complement, computed per degree from closures of
// highest-weight vectors. kept + discarded = V componentwise.
IsotypicSplit truncate_isotypic(const GradedWeightedModule& V, const TruncationSet& om);

nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace weylkit
