#pragma once

#include "weylkit/weyl.hpp"

namespace weylkit {

// Word in the positive-degree weight-zero basis elements of the algebra;
// word[0] is applied last (the word acts as word[0] o ... o word[k-1]).
struct HbarWord {
    std::vector<std::pair<int, int>> elems;
    int degree() const {
        int d = 0;
        for (auto& [adeg, aidx] : elems) d += adeg;
        return d;
    }
};

struct EndoRep {
    std::vector<std::pair<Rat, HbarWord>> terms;
};

// A_la realized on the weight-la slices of a certified global Weyl module.
// Basis = the canonical basis vectors of the slices, degree by degree;
// each carries a rational combination of h-bar words producing it from v_la.
// The product a*b applies a's words to the value of b, making the slice of
// W(la) the left regular module on the nose.
class EndomorphismAlgebra {
  public:
    explicit EndomorphismAlgebra(WeylResultPtr weyl);

    long lambda() const { return weyl_->lambda; }
    WeylResultPtr weyl() const { return weyl_; }

    int dim() const { return int(degrees_.size()); }
    int degree_of(int a) const { return degrees_.at(a); }
    std::vector<long> graded_dims() const;  // index = degree, 0..top of W(la)
    const EndoRep& representative(int a) const { return reps_.at(a); }
    const Vec& basis_vector(int a) const { return basis_vectors_.at(a); }  // in W_(deg a)

    const Vec& product(int a, int b) const { return products_.at(a).at(b); }
    Vec multiply(const Vec& x, const Vec& y) const;

    // module action of a's representative on a vector of V sitting at degree d
    Vec apply(const GradedWeightedModule& V, int a, const Vec& v, int d) const;

    bool is_associative() const;  // all basis triples
    bool is_unital() const;
    int positive_nilpotency_order() const;

  private:
    WeylResultPtr weyl_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> slice_;        // per degree: W basis indices of weight la
    std::vector<int> first_index_per_degree_;
    std::vector<EndoRep> reps_;
    std::vector<Vec> basis_vectors_;
    std::vector<std::vector<Vec>> products_;
};

// Finite-dimensional graded left A_la-module in explicit coordinates:
// actions[a] is the square matrix of basis element a.
struct ALambdaModule {
    std::vector<int> degrees;
    std::vector<Matrix> actions;
    int dim() const { return int(degrees.size()); }
    std::map<int, long> graded_dims() const;
};

ALambdaModule regular_module(const EndomorphismAlgebra& A);
ALambdaModule trivial_module(const EndomorphismAlgebra& A, int shift = 0);  // C_la[shift]

// Rejects action data that is not graded, not unital or not compatible
// with the structure constants.
void check_alambda_module(const EndomorphismAlgebra& A, const ALambdaModule& M);

// The weight-la slice of V as a graded A_la-module. Requires every
// isotypic weight of V to be <= la.
ALambdaModule restriction_R_lambda(const EndomorphismAlgebra& A, const GradedWeightedModule& V);

// W(la) (x)_{A_la} M with the inherited algebra action and total grading.
ModulePtr weyl_functor_apply(const EndomorphismAlgebra& A, const ALambdaModule& M);

}  // namespace weylkit
