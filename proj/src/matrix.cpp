#include "weylkit/matrix.hpp"

#include <algorithm>

namespace weylkit {

Vec vec_scaled(const Vec& v, const Rat& c) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out[i] = v[i] * c;
    return out;
}

void vec_add_scaled(Vec& dst, const Vec& src, const Rat& c) {
    if (sgn(c) == 0) return;
    for (size_t i = 0; i < src.size(); ++i)
        if (sgn(src[i]) != 0) dst[i] += src[i] * c;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (int(rows[r].size()) != cols) throw wk_error(wk_error::code::invalid_input, "row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(int(r), c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::apply(const Vec& x) const {
    if (int(x.size()) != cols_) throw wk_error(wk_error::code::invalid_input, "matrix/vector dimension mismatch");
    Vec y(rows_);
    for (int c = 0; c < cols_; ++c) {
        if (sgn(x[c]) == 0) continue;
        for (int r = 0; r < rows_; ++r) {
            const Rat& m = at(r, c);
            if (sgn(m) != 0) y[r] += m * x[c];
        }
    }
    return y;
}

Matrix Matrix::multiply(const Matrix& o) const {
    if (cols_ != o.rows_) throw wk_error(wk_error::code::invalid_input, "matrix product dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& m = at(i, k);
            if (sgn(m) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& n = o.at(k, j);
                if (sgn(n) != 0) out.at(i, j) += m * n;
            }
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Matrix rref(const Matrix& m) {
    RrefBuilder b(m.cols());
    for (int r = 0; r < m.rows(); ++r) b.insert(m.row(r));
    return Matrix::from_rows(b.sorted_rows(), m.cols());
}

int rank(const Matrix& m) {
    RrefBuilder b(m.cols());
    for (int r = 0; r < m.rows(); ++r) b.insert(m.row(r));
    return b.dim();
}

bool RrefBuilder::insert(Vec v) {
    if (int(v.size()) != ambient_) throw wk_error(wk_error::code::invalid_input, "vector/ambient mismatch");
    int lead = -1;
    for (int c = 0; c < ambient_; ++c) {
        if (sgn(v[c]) == 0) continue;
        int p = pivot_of_col_[c];
        if (p >= 0) {
            vec_add_scaled(v, rows_[p], -v[c]);
        } else {
            lead = c;
            break;
        }
    }
    if (lead < 0) return false;
    // finish reducing the tail, normalize, then back-substitute
    for (int c = lead + 1; c < ambient_; ++c) {
        if (sgn(v[c]) == 0) continue;
        int p = pivot_of_col_[c];
        if (p >= 0) vec_add_scaled(v, rows_[p], -v[c]);
    }
    Rat inv = 1 / v[lead];
    for (auto& x : v)
        if (sgn(x) != 0) x *= inv;
    for (auto& row : rows_) {
        if (sgn(row[lead]) != 0) vec_add_scaled(row, v, -row[lead]);
    }
    pivot_of_col_[lead] = int(rows_.size());
    pivot_col_.push_back(lead);
    pivot_cols_sorted_.insert(std::upper_bound(pivot_cols_sorted_.begin(), pivot_cols_sorted_.end(), lead), lead);
    rows_.push_back(std::move(v));
    return true;
}

Vec RrefBuilder::reduce(Vec v) const {
    if (int(v.size()) != ambient_) throw wk_error(wk_error::code::invalid_input, "vector/ambient mismatch");
    for (int c = 0; c < ambient_; ++c) {
        if (sgn(v[c]) == 0) continue;
        int p = pivot_of_col_[c];
        if (p >= 0) vec_add_scaled(v, rows_[p], -v[c]);
    }
    return v;
}

bool RrefBuilder::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

std::vector<Vec> RrefBuilder::sorted_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (int c : pivot_cols_sorted_) out.push_back(rows_[pivot_of_col_[c]]);
    return out;
}

}  // namespace weylkit
