#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "weylkit/matrix.hpp"
#include "weylkit/sl2.hpp"

namespace weylkit {

// Sparse coefficient vector over a basis, sorted by index.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_normalize(std::map<int, Rat>&& acc);

struct Sl2Triple {
    int e = 0, f = 0, h = 0;  // indices in the degree-0 basis
};

// Nonnegatively graded Lie algebra with integrable adjoint sl2-action:
// weight-labeled bases per degree plus an exact bracket oracle. Immutable
// after construction; the bracket cache is populated deterministically and
// the class is intended for single-threaded construction phases.
class GradedLieAlgebra {
  public:
    virtual ~GradedLieAlgebra() = default;

    virtual std::string id() const = 0;
    // Largest degree the oracle serves, or -1 for closed-form builders.
    virtual int max_degree_available() const = 0;
    virtual int dim(int degree) const = 0;
    virtual long weight(int degree, int index) const = 0;
    virtual std::string basis_name(int degree, int index) const = 0;
    virtual Sl2Triple sl2() const = 0;

    // True when the degree-0 component is exactly the span of the sl2
    // triple (required by the Weyl engine; L0(W2) is served with this off).
    virtual bool degree0_is_sl2() const { return true; }
    // True when min{m : L(m) occurs in g_(i)} is nondecreasing in i,
    // letting threshold scans over unbounded oracles terminate.
    virtual bool min_hw_monotone() const { return false; }

    const SparseVec& bracket(int i, int a, int j, int b) const;
    // sl2 decomposition of g_(degree) from its weight labels.
    const std::map<long, long>& component_decomposition(int degree) const;
    std::vector<int> weight_zero_indices(int degree) const;

  protected:
    virtual SparseVec bracket_raw(int i, int a, int j, int b) const = 0;

  private:
    mutable std::map<std::tuple<int, int, int, int>, SparseVec> bracket_cache_;
    mutable std::map<int, std::map<long, long>> decomp_cache_;
};

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

// L0(H2): Hamiltonian vector fields on the plane of nonnegative degree,
// modeled on C[x,y]_{>=2} with [f,g] = f_x g_y - f_y g_x. g_(i) = L(i+2).
AlgebraPtr build_h2();

// L0(W2): all polynomial vector fields vanishing at the origin.
// g_(d) = L(d) + L(d+2); the degree-0 copy of L(0) is the Euler field.
AlgebraPtr build_l0w2();

AlgebraPtr build_from_json(const nlohmann::json& spec);
AlgebraPtr build_from_file(const std::string& path);
nlohmann::json algebra_to_json(const GradedLieAlgebra& g, int max_degree);

// Degree-preserving automorphism given by per-degree matrices in the
// stored bases (column = source basis index).
class GradedAutomorphism {
  public:
    GradedAutomorphism(AlgebraPtr alg, std::function<Matrix(int)> mats)
        : alg_(std::move(alg)), mats_(std::move(mats)) {}
    const GradedLieAlgebra& algebra() const { return *alg_; }
    const Matrix& matrix(int degree) const;
    Vec apply(int degree, const Vec& v) const { return matrix(degree).apply(v); }

  private:
    AlgebraPtr alg_;
    std::function<Matrix(int)> mats_;
    mutable std::map<int, Matrix> cache_;
};

// The symplectomorphism (x,y) -> (y,-x) of the plane, acting on L0(H2).
// Restricts to the Chevalley involution on sl2; sigma^4 = id.
GradedAutomorphism sigma_h2();

struct Violation {
    std::string identity;  // which law failed
    std::string detail;    // offending elements and values
};

struct ValidationReport {
    std::vector<Violation> violations;
    int checked_degree = 0;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Antisymmetry, Jacobi (total degree <= max_degree), weight additivity,
// ad(h) diagonality and the sl2-triple relations. Violations are data.
ValidationReport validate(const GradedLieAlgebra& g, int max_degree);

struct ThinReport {
    int max_degree = 0;
    bool thin = false;
    // degree -> {highest weight -> multiplicity}
    std::vector<std::pair<int, std::map<long, long>>> per_degree;
    std::map<long, long> cumulative;
    std::string to_string() const;
};

// Per-degree sl2 decomposition of the adjoint action and the L(0) count.
// Verdict covers degrees <= max_degree only: total finiteness of the
// multiplicities is not decidable from a finite prefix.
ThinReport check_thin(const GradedLieAlgebra& g, int max_degree);

}  // namespace weylkit
