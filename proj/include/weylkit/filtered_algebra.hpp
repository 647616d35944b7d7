#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>

#include "weylkit/lie_algebra.hpp"

namespace weylkit {

// Filtered Lie algebra with finite-dimensional nested levels F_1 <= F_2 <= ...
// Basis elements carry a flat index ordered by (level asc, weight desc).
class FilteredLieAlgebra {
  public:
    virtual ~FilteredLieAlgebra() = default;

    virtual std::string id() const = 0;
    // number of basis elements of level <= N
    virtual int level_dim(int N) const = 0;
    virtual int max_level_available() const = 0;  // -1 for closed-form oracles
    virtual int level(int idx) const = 0;
    virtual long weight(int idx) const = 0;
    virtual std::string name(int idx) const = 0;
    virtual Sl2Triple sl2_flat() const = 0;  // flat indices, all in F_1

    const SparseVec& bracket(int i, int j) const;

  protected:
    virtual SparseVec bracket_raw(int i, int j) const = 0;

  private:
    mutable std::map<std::pair<int, int>, SparseVec> cache_;
};

using FilteredPtr = std::shared_ptr<const FilteredLieAlgebra>;

// ---------------------------------------------------------------------
// gl(lambda) = U(sl2)/(Casimir - c), c = (lambda^2-1)/2, with the normal
// monomial basis {f^a h^b} u {h^b e^c, c >= 1}; sl(lambda) is the quotient
// by the span of the unit monomial.
// ---------------------------------------------------------------------
struct SlLambdaParams {
    Rat lambda;
    Rat casimir_value;  // (lambda^2 - 1)/2
    explicit SlLambdaParams(const Rat& la) : lambda(la), casimir_value((la * la - 1) / 2) {}
};

struct GlMonomial {
    long a = 0, b = 0, c = 0;  // f^a h^b e^c with min(a,c) = 0
    auto operator<=>(const GlMonomial&) const = default;
    long level() const { return a + b + c; }
    long weight() const { return 2 * (c - a); }
};

using GlPoly = std::map<GlMonomial, Rat>;

// Exact arithmetic in gl(lambda) via normal-form rewriting.
class GlLambda {
  public:
    explicit GlLambda(const Rat& lambda) : params_(lambda) {}

    const SlLambdaParams& params() const { return params_; }

    GlPoly multiply(const GlMonomial& x, const GlMonomial& y) const;
    GlPoly multiply(const GlPoly& x, const GlPoly& y) const;
    GlPoly lie_bracket(const GlMonomial& x, const GlMonomial& y) const;

    // Literal rewriting of a word over letters {'f','h','e'} using the rules
    // ef -> fe + h, hf -> fh - 2f, eh -> he - 2e and the f..e eliminator
    // f h^b e = (h+2)^b (c - h - h^2/2)/2. Two strategies for the
    // confluence cross-check.
    GlPoly normalize_word_leftmost(const std::string& word) const;
    GlPoly normalize_word_rightfold(const std::string& word) const;

  private:
    SlLambdaParams params_;
    mutable std::map<std::pair<GlMonomial, char>, GlPoly> letter_cache_;
    mutable std::map<std::string, GlPoly> word_cache_;

    GlPoly mul_letter(const GlMonomial& m, char letter) const;
    GlPoly mul_letter(const GlPoly& p, char letter) const;
};

std::string gl_monomial_name(const GlMonomial& m);
std::string word_of(const GlMonomial& m);

class SlLambdaAlgebra final : public FilteredLieAlgebra {
  public:
    SlLambdaAlgebra(const Rat& lambda, int built_level) : gl_(lambda), built_level_(built_level) {}

    const GlLambda& gl() const { return gl_; }
    int built_level() const { return built_level_; }

    std::string id() const override;
    int level_dim(int N) const override { return N < 1 ? 0 : (N + 1) * (N + 1) - 1; }
    // counts the normal monomials of level <= N by enumeration, unit included
    int gl_level_dim(int N) const;
    int max_level_available() const override { return -1; }
    int level(int idx) const override { return int(monomial(idx).level()); }
    long weight(int idx) const override { return monomial(idx).weight(); }
    std::string name(int idx) const override { return gl_monomial_name(monomial(idx)); }
    Sl2Triple sl2_flat() const override { return {0, 2, 1}; }  // e, h, f at level 1

    GlMonomial monomial(int idx) const;
    int index_of(const GlMonomial& m) const;

  protected:
    SparseVec bracket_raw(int i, int j) const override;

  private:
    GlLambda gl_;
    int built_level_;
};

std::shared_ptr<const SlLambdaAlgebra> build_sl_lambda(const SlLambdaParams& p, int max_level);

// A nonnegatively graded algebra viewed as filtered with F_N = sum of the
// components of degree < N, truncated by the graded ideal g_(> cut): brackets
// landing above the cut are zero (an honest quotient algebra).
class GradedAsFiltered final : public FilteredLieAlgebra {
  public:
    GradedAsFiltered(AlgebraPtr g, int cut);

    std::string id() const override { return g_->id() + "_filtered"; }
    int level_dim(int N) const override;
    int max_level_available() const override { return cut_ + 1; }
    int level(int idx) const override { return locate(idx).first + 1; }
    long weight(int idx) const override;
    std::string name(int idx) const override;
    Sl2Triple sl2_flat() const override;

  protected:
    SparseVec bracket_raw(int i, int j) const override;

  private:
    AlgebraPtr g_;
    int cut_;
    std::vector<int> offsets_;  // flat offset of each degree block
    std::pair<int, int> locate(int idx) const;
};

ValidationReport validate_filtered(const FilteredLieAlgebra& g, int max_level);

// sl2 decomposition of F_N from the weight labels.
std::map<long, long> filtered_level_decomposition(const FilteredLieAlgebra& g, int N);

}  // namespace weylkit
