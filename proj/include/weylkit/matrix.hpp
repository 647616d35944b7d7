#pragma once

#include <vector>

#include "weylkit/rational.hpp"

namespace weylkit {

using Vec = std::vector<Rat>;

Vec vec_scaled(const Vec& v, const Rat& c);
void vec_add_scaled(Vec& dst, const Vec& src, const Rat& c);
bool vec_is_zero(const Vec& v);

inline Vec unit_vec(int n, int i) {
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

// Dense matrix of exact rationals, row-major. Equality is entrywise.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec apply(const Vec& x) const;       // matrix * column vector
    Matrix multiply(const Matrix& o) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Unique reduced row-echelon form; zero rows dropped. Row space preserved.
Matrix rref(const Matrix& m);
int rank(const Matrix& m);

// Incremental reduced echelon basis. Rows are kept fully reduced at all
// times, so the stored rows are exactly the RREF of everything inserted.
class RrefBuilder {
  public:
    explicit RrefBuilder(int ambient) : ambient_(ambient), pivot_of_col_(ambient, -1) {}

    // Returns true if the vector increased the rank.
    bool insert(Vec v);
    // Reduces v modulo the current row space (no insertion).
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    int ambient() const { return ambient_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<int>& pivots() const { return pivot_cols_sorted_; }
    std::vector<Vec> sorted_rows() const;  // ascending pivot column

  private:
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivot_col_;          // pivot column of rows_[i]
    std::vector<int> pivot_of_col_;       // column -> row index or -1
    std::vector<int> pivot_cols_sorted_;  // maintained sorted
};

}  // namespace weylkit
