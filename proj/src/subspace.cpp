#include "weylkit/subspace.hpp"

#include <algorithm>

namespace weylkit {

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    return s;
}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    s.basis_ = rref(rows);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& rows, int ambient) {
    return span(Matrix::from_rows(rows, ambient));
}

bool Subspace::contains(const Vec& v) const {
    if (int(v.size()) != ambient_) throw wk_error(wk_error::code::invalid_input, "ambient mismatch");
    RrefBuilder b(ambient_);
    for (int r = 0; r < basis_.rows(); ++r) b.insert(basis_.row(r));
    return b.contains(v);
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw wk_error(wk_error::code::invalid_input, "ambient mismatch in sum");
    RrefBuilder b(ambient_);
    for (int r = 0; r < basis_.rows(); ++r) b.insert(basis_.row(r));
    for (int r = 0; r < o.basis_.rows(); ++r) b.insert(o.basis_.row(r));
    Subspace s(ambient_);
    s.basis_ = Matrix::from_rows(b.sorted_rows(), ambient_);
    return s;
}

Subspace Subspace::perp() const { return kernel(basis_); }

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw wk_error(wk_error::code::invalid_input, "ambient mismatch in intersect");
    // kernel duality: a n b = (a^perp + b^perp)^perp
    return perp().sum(o.perp()).perp();
}

Subspace kernel(const Matrix& m) {
    Matrix r = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    std::vector<int> pivot_row_of_col(n, -1);
    for (int i = 0; i < r.rows(); ++i) {
        for (int c = 0; c < n; ++c) {
            if (sgn(r.at(i, c)) != 0) {
                is_pivot[c] = true;
                pivot_row_of_col[c] = i;
                break;
            }
        }
    }
    std::vector<Vec> rows;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n);
        v[free] = 1;
        for (int c = 0; c < n; ++c) {
            if (!is_pivot[c]) continue;
            v[c] = -r.at(pivot_row_of_col[c], free);
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, n);
}

QuotientMap::QuotientMap(const Subspace& u) : source_(u.ambient_dim()), u_(u) {
    std::vector<bool> is_pivot(source_, false);
    const Matrix& b = u.basis();
    for (int i = 0; i < b.rows(); ++i)
        for (int c = 0; c < source_; ++c)
            if (sgn(b.at(i, c)) != 0) {
                is_pivot[c] = true;
                break;
            }
    for (int c = 0; c < source_; ++c)
        if (!is_pivot[c]) kept_cols_.push_back(c);
}

Vec QuotientMap::apply(const Vec& v) const {
    if (int(v.size()) != source_) throw wk_error(wk_error::code::invalid_input, "ambient mismatch");
    Vec w = v;
    const Matrix& b = u_.basis();
    for (int i = 0; i < b.rows(); ++i) {
        // pivot column of row i is its first nonzero entry
        int p = -1;
        for (int c = 0; c < source_; ++c)
            if (sgn(b.at(i, c)) != 0) {
                p = c;
                break;
            }
        if (p >= 0 && sgn(w[p]) != 0) {
            Rat coef = w[p];
            for (int c = 0; c < source_; ++c)
                if (sgn(b.at(i, c)) != 0) w[c] -= coef * b.at(i, c);
        }
    }
    Vec q(kept_cols_.size());
    for (size_t j = 0; j < kept_cols_.size(); ++j) q[j] = w[kept_cols_[j]];
    return q;
}

Vec QuotientMap::lift(const Vec& q) const {
    if (int(q.size()) != target_dim()) throw wk_error(wk_error::code::invalid_input, "quotient coordinate mismatch");
    Vec v(source_);
    for (size_t j = 0; j < kept_cols_.size(); ++j) v[kept_cols_[j]] = q[j];
    return v;
}

}  // namespace weylkit
