#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylkit/filtered_algebra.hpp"
#include "weylkit/lie_algebra.hpp"

using namespace weylkit;

namespace {

// Independent oracle for L0(H2): bivariate polynomials with the Poisson
// bracket [f,g] = f_x g_y - f_y g_x, evaluated directly on monomials.
using Poly = std::map<std::pair<long, long>, Rat>;  // (x-exp, y-exp) -> coeff

Poly poisson(const Poly& f, const Poly& g) {
    Poly out;
    for (const auto& [fm, fc] : f)
        for (const auto& [gm, gc] : g) {
            auto [fa, fb] = fm;
            auto [ga, gb] = gm;
            // f_x g_y
            if (fa >= 1 && gb >= 1) {
                Rat c = fc * gc * rat(fa) * rat(gb);
                out[{fa + ga - 1, fb + gb - 1}] += c;
            }
            // - f_y g_x
            if (fb >= 1 && ga >= 1) {
                Rat c = fc * gc * rat(fb) * rat(ga);
                out[{fa + ga - 1, fb + gb - 1}] -= c;
            }
        }
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

// polynomial representative of the h2 basis element (degree, index)
Poly h2_poly(int degree, int index) {
    long a = degree + 1 - index, b = degree - a;
    Rat c(1);
    if (degree == 0) {
        if (index == 0) c = rat(1, 2);
        else if (index == 1) c = rat(-1);
        else c = rat(-1, 2);
    }
    return {{{a + 1, b + 1}, c}};
}

int h2_index(int degree, long a) { return int(degree + 1 - a); }

std::string file_algebra_sl2_semidirect() {
    // sl2 with the adjoint module as an abelian ideal in degree 1
    nlohmann::json j;
    j["rank"] = 1;
    j["id"] = "sl2_semidirect_L2";
    j["components"] = nlohmann::json::array();
    j["components"].push_back(
        {{"degree", 0},
         {"basis",
          {{{"name", "e"}, {"weight", {2}}}, {{"name", "h"}, {"weight", {0}}}, {{"name", "f"}, {"weight", {-2}}}}}});
    j["components"].push_back(
        {{"degree", 1},
         {"basis",
          {{{"name", "E"}, {"weight", {2}}}, {{"name", "H"}, {"weight", {0}}}, {{"name", "F"}, {"weight", {-2}}}}}});
    auto put = [&j](int d1, int i1, int d2, int i2, std::vector<std::tuple<int, int, std::string>> val) {
        nlohmann::json value = nlohmann::json::array();
        for (auto& [d, k, c] : val) value.push_back({d, k, c});
        j["brackets"].push_back({{"left", {d1, i1}}, {"right", {d2, i2}}, {"value", value}});
    };
    j["brackets"] = nlohmann::json::array();
    // degree 0 x degree 0: sl2
    put(0, 1, 0, 0, {{0, 0, "2"}});   // [h,e]=2e
    put(0, 0, 0, 1, {{0, 0, "-2"}});
    put(0, 1, 0, 2, {{0, 2, "-2"}});  // [h,f]=-2f
    put(0, 2, 0, 1, {{0, 2, "2"}});
    put(0, 0, 0, 2, {{0, 1, "1"}});   // [e,f]=h
    put(0, 2, 0, 0, {{0, 1, "-1"}});
    // degree 0 x degree 1: adjoint action on {E,H,F}
    put(0, 1, 1, 0, {{1, 0, "2"}});   // [h,E]=2E
    put(1, 0, 0, 1, {{1, 0, "-2"}});
    put(0, 1, 1, 2, {{1, 2, "-2"}});
    put(1, 2, 0, 1, {{1, 2, "2"}});
    put(0, 0, 1, 1, {{1, 0, "-2"}});  // [e,H]=-2E
    put(1, 1, 0, 0, {{1, 0, "2"}});
    put(0, 0, 1, 2, {{1, 1, "1"}});   // [e,F]=H
    put(1, 2, 0, 0, {{1, 1, "-1"}});
    put(0, 2, 1, 0, {{1, 1, "-1"}});  // [f,E]=-H  (mirror of [e,F]=H under the adjoint model)
    put(1, 0, 0, 2, {{1, 1, "1"}});
    put(0, 2, 1, 1, {{1, 2, "2"}});   // [f,H]=2F
    put(1, 1, 0, 2, {{1, 2, "-2"}});
    j["sl2"] = {{"e", {0, 0}}, {"f", {0, 2}}, {"h", {0, 1}}};
    return j.dump();
}

}  // namespace

TEST_CASE("h2 bracket matches the determinant formula: [e01,e10] = -3 e11") {
    AlgebraPtr g = build_h2();
    // e01 = x y^2 is degree 1 index with a=0; e10 = x^2 y with a=1
    int i01 = h2_index(1, 0), i10 = h2_index(1, 1);
    const SparseVec& v = g->bracket(1, i01, 1, i10);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == h2_index(2, 1));  // e11
    CHECK(v[0].second == rat(-3));
}

TEST_CASE("h2 brackets agree with the polynomial Poisson oracle to degree 8") {
    AlgebraPtr g = build_h2();
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 8 && j <= 4; ++j)
            for (int a = 0; a < g->dim(i); ++a)
                for (int b = 0; b < g->dim(j); ++b) {
                    Poly expected = poisson(h2_poly(i, a), h2_poly(j, b));
                    Poly got;
                    for (const auto& [k, c] : g->bracket(i, a, j, b)) {
                        for (const auto& [mono, pc] : h2_poly(i + j, k)) got[mono] += pc * c;
                    }
                    for (auto it = got.begin(); it != got.end();)
                        it = sgn(it->second) == 0 ? got.erase(it) : std::next(it);
                    CHECK(got == expected);
                }
}

TEST_CASE("h2 components decompose as single L(i+2)") {
    AlgebraPtr g = build_h2();
    for (int i = 0; i <= 20; ++i) {
        auto mults = g->component_decomposition(i);
        REQUIRE(mults.size() == 1);
        CHECK(mults.begin()->first == i + 2);
        CHECK(mults.begin()->second == 1);
    }
}

TEST_CASE("ad(h) eigenvalues on h2 are a-b") {
    AlgebraPtr g = build_h2();
    Sl2Triple t = g->sl2();
    for (int i = 0; i <= 6; ++i)
        for (int a = 0; a < g->dim(i); ++a) {
            const SparseVec& v = g->bracket(0, t.h, i, a);
            if (g->weight(i, a) == 0) {
                CHECK(v.empty());
            } else {
                REQUIRE(v.size() == 1);
                CHECK(v[0].first == a);
                CHECK(v[0].second == rat(g->weight(i, a)));
            }
        }
}

TEST_CASE("h2 validates cleanly to degree 6") {
    AlgebraPtr g = build_h2();
    ValidationReport r = validate(*g, 6);
    INFO(r.to_string());
    CHECK(r.ok());
}

TEST_CASE("ad e and ad f are locally nilpotent on each h2 component") {
    AlgebraPtr g = build_h2();
    Sl2Triple t = g->sl2();
    for (int i = 1; i <= 8; ++i) {
        long top = g->component_decomposition(i).rbegin()->first;
        for (int a = 0; a < g->dim(i); ++a) {
            for (int op : {t.e, t.f}) {
                std::map<int, Rat> cur{{a, rat(1)}};
                for (long step = 0; step <= 2 * top + 1 && !cur.empty(); ++step) {
                    std::map<int, Rat> next;
                    for (const auto& [k, c] : cur)
                        for (const auto& [k2, c2] : g->bracket(0, op, i, k)) {
                            next[k2] += c * c2;
                            if (sgn(next[k2]) == 0) next.erase(k2);
                        }
                    cur = std::move(next);
                }
                CHECK(cur.empty());
            }
        }
    }
}

TEST_CASE("l0w2 components decompose as L(d) + L(d+2)") {
    AlgebraPtr g = build_l0w2();
    auto d0 = g->component_decomposition(0);
    CHECK(d0 == std::map<long, long>{{0, 1}, {2, 1}});
    for (int d = 1; d <= 8; ++d) {
        auto mults = g->component_decomposition(d);
        CHECK(mults == std::map<long, long>{{long(d), 1}, {long(d) + 2, 1}});
    }
}

TEST_CASE("l0w2 sl2 relation [e,f] = h = x dx - y dy") {
    AlgebraPtr g = build_l0w2();
    Sl2Triple t = g->sl2();
    const SparseVec& v = g->bracket(0, t.e, 0, t.f);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == t.h);
    CHECK(v[0].second == rat(1));
}

TEST_CASE("l0w2 validates cleanly to degree 6") {
    AlgebraPtr g = build_l0w2();
    ValidationReport r = validate(*g, 6);
    INFO(r.to_string());
    CHECK(r.ok());
}

TEST_CASE("thinness: h2 is thin to degree 20, l0w2 is not (Euler field)") {
    ThinReport h2r = check_thin(*build_h2(), 20);
    CHECK(h2r.thin);
    for (long m = 2; m <= 22; ++m) CHECK(h2r.cumulative.at(m) == 1);
    CHECK(h2r.cumulative.count(0) == 0);

    ThinReport wr = check_thin(*build_l0w2(), 6);
    CHECK_FALSE(wr.thin);
    CHECK(wr.per_degree[0].second.at(0) == 1);
}

TEST_CASE("algebra with no positive part is thin") {
    auto j = nlohmann::json::parse(file_algebra_sl2_semidirect());
    j["components"].erase(1);
    j["brackets"] = nlohmann::json::array();
    auto put = [&j](int i1, int i2, std::vector<std::tuple<int, int, std::string>> val) {
        nlohmann::json value = nlohmann::json::array();
        for (auto& [d, k, c] : val) value.push_back({d, k, c});
        j["brackets"].push_back({{"left", {0, i1}}, {"right", {0, i2}}, {"value", value}});
    };
    put(1, 0, {{0, 0, "2"}});
    put(0, 1, {{0, 0, "-2"}});
    put(1, 2, {{0, 2, "-2"}});
    put(2, 1, {{0, 2, "2"}});
    put(0, 2, {{0, 1, "1"}});
    put(2, 0, {{0, 1, "-1"}});
    AlgebraPtr g = build_from_json(j);
    ThinReport r = check_thin(*g, 4);
    CHECK(r.thin);
}

TEST_CASE("file algebra: sl2 semidirect abelian L(2) is valid and 6-dimensional") {
    AlgebraPtr g = build_from_json(nlohmann::json::parse(file_algebra_sl2_semidirect()));
    CHECK(g->dim(0) + g->dim(1) == 6);
    CHECK(validate(*g, 4).ok());
    // abelian ideal: [E,H] = 0 etc.
    CHECK(g->bracket(1, 0, 1, 1).empty());
}

TEST_CASE("file algebra with [e,f] = 2h is rejected naming the violation") {
    auto j = nlohmann::json::parse(file_algebra_sl2_semidirect());
    for (auto& br : j["brackets"])
        if (br["left"] == nlohmann::json({0, 0}) && br["right"] == nlohmann::json({0, 2}))
            br["value"] = {{0, 1, "2"}};
    try {
        build_from_json(j);
        FAIL("expected validation failure");
    } catch (const wk_error& e) {
        CHECK(e.kind == wk_error::code::invalid_input);
        CHECK(std::string(e.what()).find("sl2 relation") != std::string::npos);
    }
}

TEST_CASE("h2 serialized to a file and reloaded matches the closed-form oracle") {
    AlgebraPtr h2 = build_h2();
    nlohmann::json j = algebra_to_json(*h2, 4);
    AlgebraPtr file = build_from_json(j);
    CHECK(file->max_degree_available() == 4);
    for (int i = 0; i <= 2; ++i)
        for (int jdeg = 0; i + jdeg <= 4 && jdeg <= 2; ++jdeg)
            for (int a = 0; a < h2->dim(i); ++a)
                for (int b = 0; b < h2->dim(jdeg); ++b)
                    CHECK(file->bracket(i, a, jdeg, b) == h2->bracket(i, a, jdeg, b));
}

TEST_CASE("sigma_h2: sigma(h) = -h, sigma^4 = id, bracket-preserving") {
    GradedAutomorphism sigma = sigma_h2();
    AlgebraPtr g = build_h2();
    Sl2Triple t = g->sl2();
    // sigma(h) = -h
    const Matrix& S0 = sigma.matrix(0);
    for (int k = 0; k < 3; ++k)
        CHECK(S0.at(k, t.h) == (k == t.h ? rat(-1) : Rat(0)));
    // sigma^4 = id on degrees <= 10
    for (int d = 0; d <= 10; ++d) {
        const Matrix& S = sigma.matrix(d);
        Matrix P = S.multiply(S).multiply(S).multiply(S);
        CHECK(P == Matrix::identity(g->dim(d)));
    }
    // automorphism property on random pairs up to degree 8
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int i = int(rng() % 5), j = int(rng() % 4);
        if (i + j > 8) continue;
        int a = int(rng() % g->dim(i)), b = int(rng() % g->dim(j));
        // sigma([x,y])
        std::map<int, Rat> lhs;
        for (const auto& [k, c] : g->bracket(i, a, j, b)) {
            const Matrix& S = sigma.matrix(i + j);
            for (int r = 0; r < S.rows(); ++r)
                if (sgn(S.at(r, k)) != 0) lhs[r] += S.at(r, k) * c;
        }
        // [sigma(x), sigma(y)]
        std::map<int, Rat> rhs;
        const Matrix& Si = sigma.matrix(i);
        const Matrix& Sj = sigma.matrix(j);
        for (int p = 0; p < Si.rows(); ++p) {
            if (sgn(Si.at(p, a)) == 0) continue;
            for (int q = 0; q < Sj.rows(); ++q) {
                if (sgn(Sj.at(q, b)) == 0) continue;
                for (const auto& [k, c] : g->bracket(i, p, j, q)) rhs[k] += Si.at(p, a) * Sj.at(q, b) * c;
            }
        }
        for (auto* m : {&lhs, &rhs})
            for (auto it = m->begin(); it != m->end();)
                it = sgn(it->second) == 0 ? m->erase(it) : std::next(it);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gl(lambda): e*f reduces to (c + h - h^2/2)/2") {
    GlLambda gl(rat(1, 2));
    const Rat& cas = gl.params().casimir_value;
    CHECK(cas == rat(-3, 8));  // ((1/2)^2 - 1)/2
    GlPoly p = gl.multiply(GlMonomial{0, 0, 1}, GlMonomial{1, 0, 0});
    GlPoly expected{{GlMonomial{0, 0, 0}, cas / 2}, {GlMonomial{0, 1, 0}, rat(1, 2)}, {GlMonomial{0, 2, 0}, rat(-1, 4)}};
    CHECK(p == expected);
}

TEST_CASE("gl(lambda) level dimensions are (N+1)^2") {
    for (const char* ls : {"1/2", "3", "10/3"}) {
        auto alg = build_sl_lambda(SlLambdaParams(rat_from_string(ls)), 6);
        for (int n = 1; n <= 6; ++n) {
            CHECK(alg->gl_level_dim(n) == (n + 1) * (n + 1));
            CHECK(alg->level_dim(n) == (n + 1) * (n + 1) - 1);
        }
    }
}

TEST_CASE("sl(lambda) adjoint decomposition is L(2) + L(4) + ... + L(2N)") {
    auto alg = build_sl_lambda(SlLambdaParams(rat(1, 2)), 6);
    for (int n = 1; n <= 6; ++n) {
        std::map<long, long> expected;
        for (long k = 1; k <= n; ++k) expected[2 * k] = 1;
        CHECK(filtered_level_decomposition(*alg, n) == expected);
    }
}

TEST_CASE("sl(lambda) validates cleanly (lambda = 3, level 5)") {
    auto alg = build_sl_lambda(SlLambdaParams(rat(3)), 5);
    ValidationReport r = validate_filtered(*alg, 5);
    INFO(r.to_string());
    CHECK(r.ok());
}

TEST_CASE("word rewriting is confluent across strategies on level <= 4 products") {
    GlLambda gl(rat(10, 3));
    SlLambdaAlgebra alg(rat(10, 3), 4);
    int n = alg.level_dim(4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GlMonomial x = alg.monomial(i), y = alg.monomial(j);
            std::string word = word_of(x) + word_of(y);
            CHECK(gl.normalize_word_leftmost(word) == gl.normalize_word_rightfold(word));
        }
}

TEST_CASE("graded-as-filtered truncation of h2 is a valid Lie algebra") {
    auto filt = std::make_shared<GradedAsFiltered>(build_h2(), 3);
    ValidationReport r = validate_filtered(*filt, 4);
    INFO(r.to_string());
    CHECK(r.ok());
    CHECK(filt->level_dim(1) == 3);
    CHECK(filt->level_dim(4) == 3 + 4 + 5 + 6);
}
