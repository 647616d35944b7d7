#include "weylkit/weight.hpp"

#include "weylkit/subspace.hpp"

namespace weylkit {

bool leq_in_root_order(const WeightVector& mu, const WeightVector& la, const RootData& rd) {
    if (mu.rank() != rd.rank || la.rank() != rd.rank)
        throw wk_error(wk_error::code::invalid_input, "weight rank does not match root data");
    int r = rd.rank;
    // solve sum_i c_i alpha_i = la - mu, i.e. cartan^T c = la - mu
    Matrix aug(r, r + 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = rat(rd.cartan[j][i]);
        aug.at(i, r) = rat(la.coords[i] - mu.coords[i]);
    }
    Matrix red = rref(aug);
    Vec c(r, Rat(0));
    for (int i = 0; i < red.rows(); ++i) {
        int p = -1;
        for (int j = 0; j <= r; ++j)
            if (sgn(red.at(i, j)) != 0) {
                p = j;
                break;
            }
        if (p == r) throw wk_error(wk_error::code::invalid_input, "inconsistent system: invalid root data");
        if (p >= 0) c[p] = red.at(i, r);
    }
    // Cartan matrices in scope are invertible; a rank-deficient system that
    // stayed consistent would signal degenerate root data.
    if (rank(rref(Matrix::from_rows(
            [&] {
                std::vector<Vec> rows;
                for (int i = 0; i < r; ++i) {
                    Vec row(r);
                    for (int j = 0; j < r; ++j) row[j] = rat(rd.cartan[j][i]);
                    rows.push_back(row);
                }
                return rows;
            }(),
            r))) < r)
        throw wk_error(wk_error::code::invalid_input, "singular Cartan matrix: invalid root data");
    for (int i = 0; i < r; ++i)
        if (sgn(c[i]) < 0) return false;
    return true;
}

}  // namespace weylkit
