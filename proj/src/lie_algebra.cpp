#include "weylkit/lie_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace weylkit {

SparseVec sparse_normalize(std::map<int, Rat>&& acc) {
    SparseVec out;
    for (auto& [k, v] : acc)
        if (sgn(v) != 0) out.emplace_back(k, std::move(v));
    return out;
}

const SparseVec& GradedLieAlgebra::bracket(int i, int a, int j, int b) const {
    auto key = std::make_tuple(i, a, j, b);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    return bracket_cache_.emplace(key, bracket_raw(i, a, j, b)).first->second;
}

const std::map<long, long>& GradedLieAlgebra::component_decomposition(int degree) const {
    auto it = decomp_cache_.find(degree);
    if (it != decomp_cache_.end()) return it->second;
    std::map<long, long> dims;
    for (int k = 0; k < dim(degree); ++k) dims[weight(degree, k)] += 1;
    return decomp_cache_.emplace(degree, decompose_sl2_dims(dims)).first->second;
}

std::vector<int> GradedLieAlgebra::weight_zero_indices(int degree) const {
    std::vector<int> out;
    for (int k = 0; k < dim(degree); ++k)
        if (weight(degree, k) == 0) out.push_back(k);
    return out;
}

const Matrix& GradedAutomorphism::matrix(int degree) const {
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(degree, mats_(degree)).first->second;
}

// ---------------------------------------------------------------------
// L0(H2). Basis monomials e(a,b) = x^{a+1} y^{b+1}, a,b >= -1, a+b = degree,
// weight a-b, stored with a scalar so that the degree-0 basis is the exact
// sl2 triple e = x^2/2, h = -xy, f = -y^2/2.
// ---------------------------------------------------------------------
namespace {

struct H2Elem {
    Rat coeff;
    long a, b;
};

class H2Algebra final : public GradedLieAlgebra {
  public:
    std::string id() const override { return "h2"; }
    int max_degree_available() const override { return -1; }
    int dim(int degree) const override { return degree < 0 ? 0 : degree + 3; }
    // index k <-> a = degree+1-k (weight descending)
    long weight(int degree, int index) const override {
        long a = degree + 1 - index;
        long b = degree - a;
        return a - b;
    }
    std::string basis_name(int degree, int index) const override {
        H2Elem t = elem(degree, index);
        if (degree == 0) {
            if (index == 0) return "e";
            if (index == 1) return "h";
            return "f";
        }
        std::ostringstream os;
        os << "e(" << t.a << "," << t.b << ")";
        return os.str();
    }
    Sl2Triple sl2() const override { return {0, 2, 1}; }
    bool min_hw_monotone() const override { return true; }

    H2Elem elem(int degree, int index) const {
        long a = degree + 1 - index;
        long b = degree - a;
        Rat c(1);
        if (degree == 0) {
            if (index == 0) c = rat(1, 2);        // e = (1/2) x^2
            else if (index == 1) c = rat(-1);     // h = -xy
            else c = rat(-1, 2);                  // f = -(1/2) y^2
        }
        return {c, a, b};
    }

  protected:
    SparseVec bracket_raw(int i, int a, int j, int b) const override {
        H2Elem x = elem(i, a), y = elem(j, b);
        Rat det = rat((x.a + 1) * (y.b + 1) - (x.b + 1) * (y.a + 1));
        long ta = x.a + y.a, tb = x.b + y.b;
        if (sgn(det) == 0 || ta < -1 || tb < -1) return {};
        int deg = i + j;
        int index = int(deg + 1 - ta);
        Rat target_coeff = elem(deg, index).coeff;
        std::map<int, Rat> acc;
        acc[index] = x.coeff * y.coeff * det / target_coeff;
        return sparse_normalize(std::move(acc));
    }
};

// ---------------------------------------------------------------------
// L0(W2). Monomial vector fields x^a y^b d/dx, x^a y^b d/dy with a+b >= 1;
// algebra degree a+b-1. The degree-0 basis is adapted to {e, h, euler, f}.
// ---------------------------------------------------------------------
enum class Fam { DX, DY };

struct W2Term {
    Rat coeff;
    long a, b;
    Fam fam;
};

using W2Value = std::map<std::tuple<long, long, Fam>, Rat>;

class W2Algebra final : public GradedLieAlgebra {
  public:
    W2Algebra() {
        // degree 0, weight-descending: e(2), h(0), euler(0), f(-2)
        deg0_.push_back({{rat(1), 1, 0, Fam::DY}});                          // e = x d/dy
        deg0_.push_back({{rat(1), 1, 0, Fam::DX}, {rat(-1), 0, 1, Fam::DY}});  // h
        deg0_.push_back({{rat(1), 1, 0, Fam::DX}, {rat(1), 0, 1, Fam::DY}});   // euler
        deg0_.push_back({{rat(1), 0, 1, Fam::DX}});                          // f = y d/dx
    }

    std::string id() const override { return "l0w2"; }
    int max_degree_available() const override { return -1; }
    int dim(int degree) const override { return degree < 0 ? 0 : 2 * (degree + 2); }
    long weight(int degree, int index) const override { return weight_of(degree, index); }
    std::string basis_name(int degree, int index) const override {
        if (degree == 0) {
            static const char* names[] = {"e", "h", "euler", "f"};
            return names[index];
        }
        const auto& ts = basis_terms(degree, index);
        std::ostringstream os;
        os << "x^" << ts[0].a << "y^" << ts[0].b << (ts[0].fam == Fam::DX ? "dx" : "dy");
        return os.str();
    }
    Sl2Triple sl2() const override { return {0, 3, 1}; }
    bool degree0_is_sl2() const override { return false; }
    bool min_hw_monotone() const override { return true; }

  protected:
    SparseVec bracket_raw(int i, int a, int j, int b) const override {
        const auto& xs = basis_terms(i, a);
        const auto& ys = basis_terms(j, b);
        W2Value acc;
        for (const auto& x : xs)
            for (const auto& y : ys) bracket_terms(x, y, acc);
        return expand(i + j, acc);
    }

  private:
    std::vector<std::vector<W2Term>> deg0_;

    long weight_of(int degree, int index) const {
        const auto& ts = basis_terms(degree, index);
        // all terms of a basis element share one weight
        const W2Term& t = ts.front();
        return t.a - t.b + (t.fam == Fam::DY ? 1 : -1);
    }

    const std::vector<W2Term>& basis_terms(int degree, int index) const {
        if (degree == 0) return deg0_.at(index);
        auto it = cache_.find(degree);
        if (it == cache_.end()) {
            std::vector<std::vector<W2Term>> basis;
            std::vector<std::tuple<long, int, long, Fam>> order;  // (-weight, fam order, -a)
            for (long a = 0; a <= degree + 1; ++a) {
                long b = degree + 1 - a;
                order.emplace_back(-(a - b + 1), 0, -a, Fam::DY);
                order.emplace_back(-(a - b - 1), 1, -a, Fam::DX);
            }
            std::sort(order.begin(), order.end());
            for (auto& [nw, fo, na, fam] : order) {
                long a = -na, b = degree + 1 - a;
                basis.push_back({{rat(1), a, b, fam}});
            }
            it = cache_.emplace(degree, std::move(basis)).first;
        }
        return it->second.at(index);
    }

    static void bracket_terms(const W2Term& x, const W2Term& y, W2Value& acc) {
        // [f du, g dv] = f (du g) dv - g (dv f) du
        auto add = [&acc](const Rat& c, long a, long b, Fam fam) {
            if (sgn(c) == 0 || a < 0 || b < 0) return;
            acc[{a, b, fam}] += c;
        };
        Rat c = x.coeff * y.coeff;
        if (x.fam == Fam::DX) add(c * rat(y.a), x.a + y.a - 1, x.b + y.b, y.fam);
        else add(c * rat(y.b), x.a + y.a, x.b + y.b - 1, y.fam);
        if (y.fam == Fam::DX) add(-c * rat(x.a), x.a + y.a - 1, x.b + y.b, x.fam);
        else add(-c * rat(x.b), x.a + y.a, x.b + y.b - 1, x.fam);
    }

    SparseVec expand(int degree, const W2Value& value) const {
        std::map<int, Rat> acc;
        for (const auto& [key, c] : value) {
            if (sgn(c) == 0) continue;
            auto [a, b, fam] = key;
            if (degree == 0) {
                // x dy -> e; y dx -> f; x dx -> (h+euler)/2; y dy -> (euler-h)/2
                if (fam == Fam::DY && a == 1) acc[0] += c;
                else if (fam == Fam::DX && b == 1) acc[3] += c;
                else if (fam == Fam::DX && a == 1) { acc[1] += c / 2; acc[2] += c / 2; }
                else { acc[2] += c / 2; acc[1] -= c / 2; }
            } else {
                for (int k = 0; k < dim(degree); ++k) {
                    const W2Term& t = basis_terms(degree, k).front();
                    if (t.a == a && t.b == b && t.fam == fam) {
                        acc[k] += c;
                        break;
                    }
                }
            }
        }
        return sparse_normalize(std::move(acc));
    }

    mutable std::map<int, std::vector<std::vector<W2Term>>> cache_;
};

// ---------------------------------------------------------------------
// File-backed algebras. The file lists every nonzero bracket explicitly
// (both orientations); omitted pairs are zero and validation catches
// inconsistencies.
// ---------------------------------------------------------------------
class FileAlgebra final : public GradedLieAlgebra {
  public:
    std::string id_ = "file";
    struct Comp {
        std::vector<std::string> names;
        std::vector<long> weights;
    };
    std::vector<Comp> comps;
    std::map<std::tuple<int, int, int, int>, SparseVec> brackets;
    Sl2Triple triple;
    bool deg0_sl2 = true;

    std::string id() const override { return id_; }
    int max_degree_available() const override { return int(comps.size()) - 1; }
    int dim(int degree) const override {
        return (degree < 0 || degree >= int(comps.size())) ? 0 : int(comps[degree].names.size());
    }
    long weight(int degree, int index) const override { return comps.at(degree).weights.at(index); }
    std::string basis_name(int degree, int index) const override { return comps.at(degree).names.at(index); }
    Sl2Triple sl2() const override { return triple; }
    bool degree0_is_sl2() const override { return deg0_sl2; }

  protected:
    SparseVec bracket_raw(int i, int a, int j, int b) const override {
        auto it = brackets.find({i, a, j, b});
        return it == brackets.end() ? SparseVec{} : it->second;
    }
};

}  // namespace

AlgebraPtr build_h2() { return std::make_shared<H2Algebra>(); }
AlgebraPtr build_l0w2() { return std::make_shared<W2Algebra>(); }

AlgebraPtr build_from_json(const nlohmann::json& spec) {
    auto alg = std::make_shared<FileAlgebra>();
    try {
        if (spec.value("rank", 1) != 1)
            throw wk_error(wk_error::code::invalid_input, "only rank-1 algebra files are supported");
        if (spec.contains("id")) alg->id_ = spec["id"].get<std::string>();
        int max_deg = -1;
        for (const auto& c : spec.at("components")) max_deg = std::max(max_deg, c.at("degree").get<int>());
        alg->comps.resize(max_deg + 1);
        for (const auto& c : spec.at("components")) {
            auto& comp = alg->comps.at(c.at("degree").get<int>());
            for (const auto& e : c.at("basis")) {
                comp.names.push_back(e.at("name").get<std::string>());
                comp.weights.push_back(e.at("weight").at(0).get<long>());
            }
        }
        for (const auto& br : spec.at("brackets")) {
            int d1 = br.at("left").at(0).get<int>(), i1 = br.at("left").at(1).get<int>();
            int d2 = br.at("right").at(0).get<int>(), i2 = br.at("right").at(1).get<int>();
            std::map<int, Rat> acc;
            for (const auto& term : br.at("value")) {
                int d = term.at(0).get<int>();
                if (d != d1 + d2)
                    throw wk_error(wk_error::code::invalid_input, "bracket value not in degree left+right");
                acc[term.at(1).get<int>()] += rat_from_string(term.at(2).get<std::string>());
            }
            alg->brackets[{d1, i1, d2, i2}] = sparse_normalize(std::move(acc));
        }
        const auto& t = spec.at("sl2");
        alg->triple = {t.at("e").at(1).get<int>(), t.at("f").at(1).get<int>(), t.at("h").at(1).get<int>()};
        if (spec.contains("degree0_is_sl2")) alg->deg0_sl2 = spec["degree0_is_sl2"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw wk_error(wk_error::code::invalid_input, std::string("algebra file parse error: ") + e.what());
    }
    ValidationReport report = validate(*alg, alg->max_degree_available());
    if (!report.ok())
        throw wk_error(wk_error::code::invalid_input, "algebra file failed validation:\n" + report.to_string());
    return alg;
}

AlgebraPtr build_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wk_error(wk_error::code::invalid_input, "cannot open algebra file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw wk_error(wk_error::code::invalid_input, std::string("algebra file parse error: ") + e.what());
    }
    return build_from_json(j);
}

nlohmann::json algebra_to_json(const GradedLieAlgebra& g, int max_degree) {
    nlohmann::json j;
    j["rank"] = 1;
    j["id"] = g.id() + "_to_" + std::to_string(max_degree);
    auto comps = nlohmann::json::array();
    for (int d = 0; d <= max_degree; ++d) {
        nlohmann::json c;
        c["degree"] = d;
        auto basis = nlohmann::json::array();
        for (int k = 0; k < g.dim(d); ++k)
            basis.push_back({{"name", g.basis_name(d, k)}, {"weight", {g.weight(d, k)}}});
        c["basis"] = basis;
        comps.push_back(c);
    }
    j["components"] = comps;
    auto brackets = nlohmann::json::array();
    for (int i = 0; i <= max_degree; ++i)
        for (int jdeg = 0; i + jdeg <= max_degree; ++jdeg)
            for (int a = 0; a < g.dim(i); ++a)
                for (int b = 0; b < g.dim(jdeg); ++b) {
                    const SparseVec& v = g.bracket(i, a, jdeg, b);
                    if (v.empty()) continue;
                    auto value = nlohmann::json::array();
                    for (const auto& [k, c] : v) value.push_back({i + jdeg, k, rat_to_string(c)});
                    brackets.push_back({{"left", {i, a}}, {"right", {jdeg, b}}, {"value", value}});
                }
    j["brackets"] = brackets;
    Sl2Triple t = g.sl2();
    j["sl2"] = {{"e", {0, t.e}}, {"f", {0, t.f}}, {"h", {0, t.h}}};
    if (!g.degree0_is_sl2()) j["degree0_is_sl2"] = false;
    return j;
}

GradedAutomorphism sigma_h2() {
    AlgebraPtr alg = build_h2();
    auto h2 = std::static_pointer_cast<const H2Algebra>(alg);
    return GradedAutomorphism(alg, [h2](int degree) {
        int n = h2->dim(degree);
        Matrix m(n, n);
        for (int k = 0; k < n; ++k) {
            H2Elem t = h2->elem(degree, k);
            // sigma(x^{a+1} y^{b+1}) = (-1)^{b+1} x^{b+1} y^{a+1}
            long sa = t.b, sb = t.a;
            int target = int(degree + 1 - sa);
            H2Elem s = h2->elem(degree, target);
            Rat c = t.coeff * rat((t.b + 1) % 2 == 0 ? 1 : -1) / s.coeff;
            m.at(target, k) = c;
        }
        return m;
    });
}

// ---------------------------------------------------------------------
// Validation and thinness
// ---------------------------------------------------------------------
namespace {

std::string elem_label(const GradedLieAlgebra& g, int d, int k) {
    std::ostringstream os;
    os << "(" << d << "," << k << ":" << g.basis_name(d, k) << ")";
    return os.str();
}

std::map<int, Rat> to_map(const SparseVec& v) {
    std::map<int, Rat> m;
    for (const auto& [k, c] : v) m[k] = c;
    return m;
}

void add_sparse(std::map<int, Rat>& acc, const SparseVec& v, const Rat& scale) {
    for (const auto& [k, c] : v) acc[k] += c * scale;
}

bool sparse_zero(const std::map<int, Rat>& m) {
    for (const auto& [k, c] : m)
        if (sgn(c) != 0) return false;
    return true;
}

}  // namespace

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    if (ok()) {
        os << "no violations up to degree " << checked_degree << "\n";
        return os.str();
    }
    for (const auto& v : violations) os << v.identity << ": " << v.detail << "\n";
    return os.str();
}

ValidationReport validate(const GradedLieAlgebra& g, int max_degree) {
    ValidationReport report;
    report.checked_degree = max_degree;
    auto violate = [&](const std::string& id, const std::string& detail) {
        if (report.violations.size() < 64) report.violations.push_back({id, detail});
    };

    Sl2Triple t = g.sl2();
    // sl2 relations [h,e]=2e, [h,f]=-2f, [e,f]=h
    {
        auto he = to_map(g.bracket(0, t.h, 0, t.e));
        auto hf = to_map(g.bracket(0, t.h, 0, t.f));
        auto ef = to_map(g.bracket(0, t.e, 0, t.f));
        std::map<int, Rat> want_he, want_hf, want_ef;
        want_he[t.e] = rat(2);
        want_hf[t.f] = rat(-2);
        want_ef[t.h] = rat(1);
        if (he != want_he) violate("sl2 relation", "[h,e] != 2e");
        if (hf != want_hf) violate("sl2 relation", "[h,f] != -2f");
        if (ef != want_ef) violate("sl2 relation", "[e,f] != h");
    }
    if (g.degree0_is_sl2() && g.dim(0) != 3)
        violate("degree-0 component", "flagged as sl2 but dimension != 3");

    int top = max_degree;
    if (g.max_degree_available() >= 0) top = std::min(top, g.max_degree_available());

    // antisymmetry, weight additivity, ad(h) diagonality
    for (int i = 0; i <= top; ++i)
        for (int j = i; i + j <= top; ++j)
            for (int a = 0; a < g.dim(i); ++a)
                for (int b = (i == j ? a : 0); b < g.dim(j); ++b) {
                    const SparseVec& xy = g.bracket(i, a, j, b);
                    std::map<int, Rat> acc = to_map(xy);
                    add_sparse(acc, g.bracket(j, b, i, a), rat(1));
                    if (!sparse_zero(acc))
                        violate("antisymmetry", elem_label(g, i, a) + ", " + elem_label(g, j, b));
                    long w = g.weight(i, a) + g.weight(j, b);
                    for (const auto& [k, c] : xy)
                        if (g.weight(i + j, k) != w)
                            violate("weight additivity", elem_label(g, i, a) + ", " + elem_label(g, j, b));
                }
    for (int i = 0; i <= top; ++i)
        for (int a = 0; a < g.dim(i); ++a) {
            std::map<int, Rat> acc = to_map(g.bracket(0, t.h, i, a));
            acc[a] -= rat(g.weight(i, a));
            if (!sparse_zero(acc)) violate("ad(h) diagonality", elem_label(g, i, a));
        }

    // Jacobi on basis triples with total degree <= max_degree
    for (int i = 0; i <= top; ++i)
        for (int j = i; j <= top; ++j)
            for (int k = j; i + j + k <= top; ++k)
                for (int a = 0; a < g.dim(i); ++a)
                    for (int b = (j == i ? a : 0); b < g.dim(j); ++b)
                        for (int c = (k == j ? b : 0); c < g.dim(k); ++c) {
                            // [x,[y,z]] - [[x,y],z] - [y,[x,z]]
                            std::map<int, Rat> acc;
                            for (const auto& [m, cm] : g.bracket(j, b, k, c))
                                add_sparse(acc, g.bracket(i, a, j + k, m), cm);
                            for (const auto& [m, cm] : g.bracket(i, a, j, b))
                                add_sparse(acc, g.bracket(i + j, m, k, c), -cm);
                            for (const auto& [m, cm] : g.bracket(i, a, k, c))
                                add_sparse(acc, g.bracket(j, b, i + k, m), -cm);
                            if (!sparse_zero(acc))
                                violate("jacobi", elem_label(g, i, a) + ", " + elem_label(g, j, b) + ", " +
                                                      elem_label(g, k, c));
                        }
    return report;
}

std::string ThinReport::to_string() const {
    std::ostringstream os;
    for (const auto& [d, mults] : per_degree) {
        os << "degree " << d << ":";
        for (auto it = mults.rbegin(); it != mults.rend(); ++it)
            os << " " << it->second << "xL(" << it->first << ")";
        os << "\n";
    }
    os << (thin ? "thin up to degree " : "NOT thin up to degree ") << max_degree << "\n";
    os << "note: total multiplicity finiteness is not decidable from a finite prefix\n";
    return os.str();
}

ThinReport check_thin(const GradedLieAlgebra& g, int max_degree) {
    ThinReport r;
    r.max_degree = max_degree;
    r.thin = true;
    int top = max_degree;
    if (g.max_degree_available() >= 0) top = std::min(top, g.max_degree_available());
    for (int d = 0; d <= top; ++d) {
        const auto& mults = g.component_decomposition(d);
        r.per_degree.emplace_back(d, mults);
        for (const auto& [m, k] : mults) {
            r.cumulative[m] += k;
            if (m == 0 && k > 0) r.thin = false;
        }
    }
    return r;
}

}  // namespace weylkit
