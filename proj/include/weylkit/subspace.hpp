#pragma once

#include "weylkit/matrix.hpp"

namespace weylkit {

// Subspace of Q^n stored by its unique RREF basis, so equal subspaces have
// bitwise-identical representations regardless of construction order.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace full(int ambient);
    static Subspace span(const Matrix& rows);
    static Subspace span(const std::vector<Vec>& rows, int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // {v : basis * v = 0}; for subspaces this is the annihilator under the dot pairing.
    Subspace perp() const;

  private:
    int ambient_ = 0;
    Matrix basis_;  // RREF, full row rank
};

// Kernel {v : m v = 0} in canonical form. dim ker + rank = cols.
Subspace kernel(const Matrix& m);

// Canonical surjection Q^n -> Q^(n - dim U) with kernel exactly U, given by
// reducing modulo U and reading off the non-pivot coordinates of U's RREF.
class QuotientMap {
  public:
    QuotientMap() = default;
    explicit QuotientMap(const Subspace& u);

    int source_dim() const { return source_; }
    int target_dim() const { return int(kept_cols_.size()); }
    const std::vector<int>& kept_cols() const { return kept_cols_; }

    Vec apply(const Vec& v) const;
    // Canonical lift: target basis vector j maps to source unit vector kept_cols[j].
    Vec lift(const Vec& q) const;

  private:
    int source_ = 0;
    Subspace u_;
    std::vector<int> kept_cols_;
};

}  // namespace weylkit
