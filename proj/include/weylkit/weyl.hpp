#pragma once

#include "weylkit/module.hpp"

namespace weylkit {

enum class WeylKind { global, local, bind };

struct Termination {
    enum class Rule { threshold, cap };
    Rule rule = Rule::threshold;
    int T = 0;
    int top_degree = -1;  // last nonzero degree
    bool certified = true;
    std::string rule_name() const { return rule == Rule::threshold ? "threshold" : "cap"; }
};

struct EngineOptions {
    int max_degree = 256;
    bool self_check = false;  // extra exactness assertions (relation-space stability, sl2 commutators)
};

// Certified stopping window: T = max{ i >= 1 : g_(i) contains some L(m) with
// m <= 2 max(Omega) }. For i > T the image of g_(i) (x) W in any
// Omega-bounded integrable quotient vanishes, so T consecutive zero
// components certify that all higher components vanish.
int stopping_threshold(const GradedLieAlgebra& g, const TruncationSet& om);

// Computed Bind_Omega(V0) / W(la) / W_pi(la) with per-degree bases, weights,
// action oracles and the chains expressing each basis vector as an algebra
// word applied to a degree-0 vector.
class WeylModuleResult final : public GradedWeightedModule {
  public:
    struct Chain {
        std::vector<std::pair<int, int>> word;  // algebra elements, applied left to right
        int root = 0;                           // basis index in W_(0)
    };

    WeylKind kind = WeylKind::bind;
    long lambda = -1;  // global/local only
    TruncationSet omega;
    Termination termination;
    bool omega_not_lower_warning = false;
    std::string algebra_id;

    AlgebraPtr algebra() const override { return alg_; }
    int lo_degree() const override { return 0; }
    int hi_degree() const override { return int(weights_.size()) - 1; }
    int dim(int d) const override {
        return (d < 0 || d >= int(weights_.size())) ? 0 : int(weights_[d].size());
    }
    long weight(int d, int k) const override { return weights_.at(d).at(k); }

    const Decomposition& decomposition() const { return decomposition_; }
    const Chain& chain(int d, int k) const { return chains_.at(d).at(k); }

    // Applies the full word of basis vector (d, k) -- its algebra chain
    // followed by the f-power taking v_la to the chain root -- to `start`
    // sitting in component `start_degree`. This evaluates any graded
    // endomorphism determined by v_la -> start on the basis vector.
    Vec apply_chain(int d, int k, Vec start, int start_degree) const;

    // engine use
    void set_algebra(AlgebraPtr alg) { alg_ = std::move(alg); }
    void push_degree(std::vector<long> weights, std::vector<Chain> chains);
    void set_action(int adeg, int aidx, int d, Matrix m);
    const Matrix* action_ptr(int adeg, int aidx, int d) const;
    void finalize();

  private:
    AlgebraPtr alg_;
    std::vector<std::vector<long>> weights_;            // per degree
    std::vector<std::vector<Chain>> chains_;            // per degree
    std::map<std::tuple<int, int, int>, Matrix> actions_;
    Decomposition decomposition_;

  protected:
    Matrix action_impl(int adeg, int aidx, int d) const override;
};

using WeylResultPtr = std::shared_ptr<const WeylModuleResult>;

// Degree-by-degree truncated induction. V0 must be a one-component module
// concentrated in degree 0 over the same algebra.
WeylResultPtr compute_bind(AlgebraPtr g, const GradedWeightedModule& V0, const TruncationSet& om,
                           const EngineOptions& opt = {});

// W(la) = Bind_{<=la}(L(la)); rank 1, so Omega = {0,...,la}.
WeylResultPtr compute_global_weyl(AlgebraPtr g, long la, const EngineOptions& opt = {});

// Local augmentation Weyl module W_pi(la): the global recursion with the
// extra generators x (x) v_la, x in the positive weight-zero part, killed
// degree by degree.
WeylResultPtr compute_local_weyl(AlgebraPtr g, long la, const EngineOptions& opt = {});

// socle = common kernel of the positive-degree action, decomposed as an
// sl2-module (valid since the positive part acts nilpotently).
Decomposition compute_socle(const GradedWeightedModule& V);

}  // namespace weylkit
