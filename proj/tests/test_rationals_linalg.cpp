#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "weylkit/subspace.hpp"

using namespace weylkit;

namespace {

Matrix mat(std::vector<std::vector<long>> rows) {
    std::vector<Vec> vs;
    for (auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(rat(x));
        vs.push_back(v);
    }
    return Matrix::from_rows(vs, rows.empty() ? 0 : int(rows[0].size()));
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return rat(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = random_rat(rng);
    return m;
}

std::string serialize(const Matrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) os << rat_to_string(m.at(r, c)) << " ";
        os << "\n";
    }
    return os.str();
}

}  // namespace

TEST_CASE("rref drops dependent rows") {
    CHECK(rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}}));
}

TEST_CASE("rref fixes the identity") {
    CHECK(rref(Matrix::identity(4)) == Matrix::identity(4));
}

TEST_CASE("rref sorts a permutation") {
    CHECK(rref(mat({{0, 1}, {1, 0}})) == Matrix::identity(2));
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(rng, 3 + trial % 4, 2 + trial % 5);
        Matrix r = rref(m);
        CHECK(rref(r) == r);
    }
}

TEST_CASE("kernel examples") {
    Subspace k = kernel(mat({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains({rat(1), rat(-1)}));

    CHECK(kernel(mat({{1, 2}, {3, 4}})).dim() == 0);
    CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("kernel rank-nullity on random matrices") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 4, 6);
        Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == 6);
        for (int r = 0; r < k.basis().rows(); ++r) CHECK(vec_is_zero(m.apply(k.basis().row(r))));
    }
}

TEST_CASE("sum and intersect basics") {
    Subspace e1 = Subspace::span(mat({{1, 0}}));
    Subspace e2 = Subspace::span(mat({{0, 1}}));
    CHECK(e1.sum(e2) == Subspace::full(2));
    Subspace diag = Subspace::span(mat({{1, 1}}));
    CHECK(diag.intersect(e1).dim() == 0);
}

TEST_CASE("Grassmann identity on random subspaces") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 6;
        Subspace a = Subspace::span(random_matrix(rng, 1 + trial % 4, n));
        Subspace b = Subspace::span(random_matrix(rng, 1 + (trial + 2) % 4, n));
        CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
    }
}

TEST_CASE("canonical bases are construction-order independent") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 5;
        Matrix gens = random_matrix(rng, 3, n);
        Subspace s1 = Subspace::span(gens);
        // same space from shuffled random combinations of the generators
        std::vector<Vec> combos;
        for (int k = 0; k < 6; ++k) {
            Vec v(n, Rat(0));
            for (int r = 0; r < gens.rows(); ++r) vec_add_scaled(v, gens.row(r), random_rat(rng));
            combos.push_back(v);
        }
        for (int r = gens.rows() - 1; r >= 0; --r) combos.push_back(gens.row(r));
        Subspace s2 = Subspace::span(combos, n);
        CHECK(s1 == s2);
        CHECK(serialize(s1.basis()) == serialize(s2.basis()));
    }
}

TEST_CASE("quotient map projects onto non-pivot coordinates") {
    Subspace u = Subspace::span(mat({{1, 0, 0}}));
    QuotientMap q(u);
    CHECK(q.target_dim() == 2);
    CHECK(q.kept_cols() == std::vector<int>{1, 2});
    Vec image = q.apply({rat(5), rat(2), rat(3)});
    CHECK(image == Vec{rat(2), rat(3)});
    CHECK(vec_is_zero(q.apply({rat(7), rat(0), rat(0)})));
}

TEST_CASE("quotient map kernel equals the subspace on random data") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6;
        Subspace u = Subspace::span(random_matrix(rng, 2, n));
        QuotientMap q(u);
        CHECK(q.target_dim() == n - u.dim());
        for (int r = 0; r < u.basis().rows(); ++r) CHECK(vec_is_zero(q.apply(u.basis().row(r))));
        for (int j = 0; j < q.target_dim(); ++j) {
            Vec unit(q.target_dim(), Rat(0));
            unit[j] = 1;
            CHECK(q.apply(q.lift(unit)) == unit);
        }
    }
}

TEST_CASE("ambient mismatch raises a dimension error") {
    Subspace a = Subspace::span(mat({{1, 0}}));
    Subspace b = Subspace::span(mat({{1, 0, 0}}));
    CHECK_THROWS_AS(a.sum(b), wk_error);
    CHECK_THROWS_AS(a.intersect(b), wk_error);
    CHECK_THROWS_AS(a.contains({rat(1)}), wk_error);
}

TEST_CASE("rational string round trip is lossless") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<long> big(-1000000007L, 1000000007L), den(1, 999983);
        Rat r = rat(big(rng), den(rng));
        r *= rat(big(rng), den(rng));
        CHECK(rat_from_string(rat_to_string(r)) == r);
    }
    CHECK(rat_to_string(rat(6, 4)) == "3/2");
    CHECK(rat_to_string(rat(-6, 3)) == "-2");
    CHECK(rat_from_string("7") == rat(7));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("RrefBuilder matches batch rref and reports rank growth") {
    std::mt19937 rng(555);
    Matrix m = random_matrix(rng, 8, 5);
    RrefBuilder b(5);
    int grew = 0;
    for (int r = 0; r < m.rows(); ++r)
        if (b.insert(m.row(r))) ++grew;
    CHECK(grew == rank(m));
    CHECK(Matrix::from_rows(b.sorted_rows(), 5) == rref(m));
}
