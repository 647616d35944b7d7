#include "weylkit/filtered_algebra.hpp"

#include <cmath>
#include <sstream>

namespace weylkit {

const SparseVec& FilteredLieAlgebra::bracket(int i, int j) const {
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, bracket_raw(i, j)).first->second;
}

namespace {

void poly_add(GlPoly& acc, const GlPoly& p, const Rat& scale) {
    if (sgn(scale) == 0) return;
    for (const auto& [m, c] : p) {
        Rat& slot = acc[m];
        slot += c * scale;
        if (sgn(slot) == 0) acc.erase(m);
    }
}

void poly_add_mono(GlPoly& acc, const GlMonomial& m, const Rat& c) {
    if (sgn(c) == 0) return;
    Rat& slot = acc[m];
    slot += c;
    if (sgn(slot) == 0) acc.erase(m);
}

// coefficients of (h + shift)^b as a polynomial in h
std::vector<Rat> h_shift_pow(long shift, long b) {
    std::vector<Rat> coef{rat(1)};
    for (long t = 0; t < b; ++t) {
        std::vector<Rat> next(coef.size() + 1, Rat(0));
        for (size_t j = 0; j < coef.size(); ++j) {
            next[j + 1] += coef[j];
            next[j] += coef[j] * rat(shift);
        }
        coef = std::move(next);
    }
    return coef;
}

}  // namespace

std::string word_of(const GlMonomial& m) {
    std::string w;
    w.append(size_t(m.a), 'f');
    w.append(size_t(m.b), 'h');
    w.append(size_t(m.c), 'e');
    return w;
}

std::string gl_monomial_name(const GlMonomial& m) {
    if (m.a == 0 && m.b == 0 && m.c == 0) return "1";
    std::ostringstream os;
    auto put = [&os](const char* s, long k) {
        if (k == 0) return;
        os << s;
        if (k > 1) os << "^" << k;
    };
    put("f", m.a);
    put("h", m.b);
    put("e", m.c);
    return os.str();
}

GlPoly GlLambda::mul_letter(const GlMonomial& m, char letter) const {
    auto key = std::make_pair(m, letter);
    auto it = letter_cache_.find(key);
    if (it != letter_cache_.end()) return it->second;

    GlPoly out;
    const Rat& cas = params_.casimir_value;
    if (m.c == 0) {
        // f^a h^b
        if (letter == 'h') {
            poly_add_mono(out, {m.a, m.b + 1, 0}, rat(1));
        } else if (letter == 'f') {
            // f^a h^b f = f^{a+1} (h-2)^b
            auto coef = h_shift_pow(-2, m.b);
            for (size_t j = 0; j < coef.size(); ++j) poly_add_mono(out, {m.a + 1, long(j), 0}, coef[j]);
        } else {
            if (m.a == 0) {
                poly_add_mono(out, {0, m.b, 1}, rat(1));
            } else {
                // f^a h^b e = f^{a-1} (h+2)^b (cas - h - h^2/2)/2
                auto shift = h_shift_pow(2, m.b);
                std::vector<Rat> q(shift.size() + 2, Rat(0));
                for (size_t j = 0; j < shift.size(); ++j) {
                    q[j] += shift[j] * cas / 2;
                    q[j + 1] -= shift[j] / 2;
                    q[j + 2] -= shift[j] / 4;
                }
                for (size_t j = 0; j < q.size(); ++j) poly_add_mono(out, {m.a - 1, long(j), 0}, q[j]);
            }
        }
    } else {
        // h^b e^c, c >= 1
        if (letter == 'h') {
            // e^c h = (h - 2c) e^c
            poly_add_mono(out, {0, m.b + 1, m.c}, rat(1));
            poly_add_mono(out, {0, m.b, m.c}, rat(-2 * m.c));
        } else if (letter == 'e') {
            poly_add_mono(out, {0, m.b, m.c + 1}, rat(1));
        } else {
            // e^c f = (e^{c-1} f) e + (h - 2(c-1)) e^{c-1}
            GlPoly t = mul_letter(GlMonomial{0, 0, m.c - 1}, 'f');
            GlPoly tf = mul_letter(t, 'e');
            poly_add_mono(tf, {0, 1, m.c - 1}, rat(1));
            poly_add_mono(tf, {0, 0, m.c - 1}, rat(-2 * (m.c - 1)));
            // left-multiply by h^b: h^b f^a' h^b' e^c' = f^a' (h-2a')^b h^b' e^c'
            for (const auto& [mm, cc] : tf) {
                auto coef = h_shift_pow(-2 * mm.a, m.b);
                for (size_t j = 0; j < coef.size(); ++j)
                    poly_add_mono(out, {mm.a, mm.b + long(j), mm.c}, cc * coef[j]);
            }
        }
    }
    letter_cache_.emplace(key, out);
    return out;
}

GlPoly GlLambda::mul_letter(const GlPoly& p, char letter) const {
    GlPoly out;
    for (const auto& [m, c] : p) poly_add(out, mul_letter(m, letter), c);
    return out;
}

GlPoly GlLambda::multiply(const GlMonomial& x, const GlMonomial& y) const {
    GlPoly acc{{x, rat(1)}};
    for (char letter : word_of(y)) acc = mul_letter(acc, letter);
    return acc;
}

GlPoly GlLambda::multiply(const GlPoly& x, const GlPoly& y) const {
    GlPoly out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) poly_add(out, multiply(mx, my), cx * cy);
    return out;
}

GlPoly GlLambda::lie_bracket(const GlMonomial& x, const GlMonomial& y) const {
    GlPoly out = multiply(x, y);
    poly_add(out, multiply(y, x), rat(-1));
    return out;
}

GlPoly GlLambda::normalize_word_leftmost(const std::string& word) const {
    auto it = word_cache_.find(word);
    if (it != word_cache_.end()) return it->second;

    GlPoly out;
    // leftmost adjacent violation among {ef, hf, eh}
    int pos = -1;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        char x = word[i], y = word[i + 1];
        if ((x == 'e' && y == 'f') || (x == 'h' && y == 'f') || (x == 'e' && y == 'h')) {
            pos = int(i);
            break;
        }
    }
    if (pos >= 0) {
        std::string pre = word.substr(0, pos), post = word.substr(pos + 2);
        char x = word[pos], y = word[pos + 1];
        if (x == 'e' && y == 'f') {  // ef -> fe + h
            poly_add(out, normalize_word_leftmost(pre + "fe" + post), rat(1));
            poly_add(out, normalize_word_leftmost(pre + "h" + post), rat(1));
        } else if (x == 'h' && y == 'f') {  // hf -> fh - 2f
            poly_add(out, normalize_word_leftmost(pre + "fh" + post), rat(1));
            poly_add(out, normalize_word_leftmost(pre + "f" + post), rat(-2));
        } else {  // eh -> he - 2e
            poly_add(out, normalize_word_leftmost(pre + "he" + post), rat(1));
            poly_add(out, normalize_word_leftmost(pre + "e" + post), rat(-2));
        }
    } else {
        // sorted word f^a h^b e^c
        long a = 0, b = 0, c = 0;
        for (char ch : word) {
            if (ch == 'f') ++a;
            else if (ch == 'h') ++b;
            else ++c;
        }
        if (a >= 1 && c >= 1) {
            // eliminate one f..e pair: f h^b e = (h+2)^b (cas - h - h^2/2)/2
            const Rat& cas = params_.casimir_value;
            auto shift = h_shift_pow(2, b);
            std::vector<Rat> q(shift.size() + 2, Rat(0));
            for (size_t j = 0; j < shift.size(); ++j) {
                q[j] += shift[j] * cas / 2;
                q[j + 1] -= shift[j] / 2;
                q[j + 2] -= shift[j] / 4;
            }
            for (size_t j = 0; j < q.size(); ++j) {
                if (sgn(q[j]) == 0) continue;
                std::string w;
                w.append(size_t(a - 1), 'f');
                w.append(j, 'h');
                w.append(size_t(c - 1), 'e');
                poly_add(out, normalize_word_leftmost(w), q[j]);
            }
        } else {
            poly_add_mono(out, {a, b, c}, rat(1));
        }
    }
    word_cache_.emplace(word, out);
    return out;
}

GlPoly GlLambda::normalize_word_rightfold(const std::string& word) const {
    GlPoly acc{{GlMonomial{}, rat(1)}};
    for (char letter : word) acc = mul_letter(acc, letter);
    return acc;
}

// ---------------------------------------------------------------------
// SlLambdaAlgebra flat basis: level n >= 1 block starts at n^2 - 1 and holds
// the 2n+1 monomials of weights 2n, 2n-2, ..., -2n.
// ---------------------------------------------------------------------
std::string SlLambdaAlgebra::id() const {
    return "sl_lambda:" + rat_to_string(gl_.params().lambda);
}

int SlLambdaAlgebra::gl_level_dim(int N) const {
    int count = 0;
    for (long a = 0; a <= N; ++a)
        for (long b = 0; a + b <= N; ++b) ++count;  // f^a h^b
    for (long c = 1; c <= N; ++c)
        for (long b = 0; b + c <= N; ++b) ++count;  // h^b e^c
    return count;
}

GlMonomial SlLambdaAlgebra::monomial(int idx) const {
    long n = long(std::sqrt(double(idx + 1)));
    while (n * n - 1 > idx) --n;
    while ((n + 1) * (n + 1) - 1 <= idx) ++n;
    long pos = idx - (n * n - 1);   // 0 .. 2n
    long w = 2 * n - 2 * pos;       // weight, descending
    if (w > 0) return {0, n - w / 2, w / 2};
    if (w < 0) return {-w / 2, n + w / 2, 0};
    return {0, n, 0};
}

int SlLambdaAlgebra::index_of(const GlMonomial& m) const {
    long n = m.level(), w = m.weight();
    return int(n * n - 1 + (2 * n - w) / 2);
}

SparseVec SlLambdaAlgebra::bracket_raw(int i, int j) const {
    GlPoly p = gl_.lie_bracket(monomial(i), monomial(j));
    std::map<int, Rat> acc;
    for (const auto& [m, c] : p) {
        if (m.level() == 0) continue;  // quotient by the center C*1
        acc[index_of(m)] += c;
    }
    return sparse_normalize(std::move(acc));
}

std::shared_ptr<const SlLambdaAlgebra> build_sl_lambda(const SlLambdaParams& p, int max_level) {
    if (max_level < 1) throw wk_error(wk_error::code::invalid_input, "sl(lambda) needs max_level >= 1");
    return std::make_shared<SlLambdaAlgebra>(p.lambda, max_level);
}

// ---------------------------------------------------------------------
GradedAsFiltered::GradedAsFiltered(AlgebraPtr g, int cut) : g_(std::move(g)), cut_(cut) {
    offsets_.push_back(0);
    for (int d = 0; d <= cut_; ++d) offsets_.push_back(offsets_.back() + g_->dim(d));
}

int GradedAsFiltered::level_dim(int N) const {
    if (N < 1) return 0;
    return offsets_[std::min(N, cut_ + 1)];
}

std::pair<int, int> GradedAsFiltered::locate(int idx) const {
    int d = 0;
    while (d + 1 < int(offsets_.size()) && offsets_[d + 1] <= idx) ++d;
    return {d, idx - offsets_[d]};
}

long GradedAsFiltered::weight(int idx) const {
    auto [d, k] = locate(idx);
    return g_->weight(d, k);
}

std::string GradedAsFiltered::name(int idx) const {
    auto [d, k] = locate(idx);
    return g_->basis_name(d, k);
}

Sl2Triple GradedAsFiltered::sl2_flat() const { return g_->sl2(); }

SparseVec GradedAsFiltered::bracket_raw(int i, int j) const {
    auto [d1, k1] = locate(i);
    auto [d2, k2] = locate(j);
    if (d1 + d2 > cut_) return {};  // ideal g_(> cut) is quotiented away
    const SparseVec& v = g_->bracket(d1, k1, d2, k2);
    SparseVec out;
    for (const auto& [k, c] : v) out.emplace_back(offsets_[d1 + d2] + k, c);
    return out;
}

// ---------------------------------------------------------------------
ValidationReport validate_filtered(const FilteredLieAlgebra& g, int max_level) {
    ValidationReport report;
    report.checked_degree = max_level;
    auto violate = [&](const std::string& id, const std::string& detail) {
        if (report.violations.size() < 64) report.violations.push_back({id, detail});
    };
    int n = g.level_dim(max_level);
    Sl2Triple t = g.sl2_flat();

    auto to_map = [](const SparseVec& v) {
        std::map<int, Rat> m;
        for (const auto& [k, c] : v) m[k] = c;
        return m;
    };

    {
        auto he = to_map(g.bracket(t.h, t.e));
        auto hf = to_map(g.bracket(t.h, t.f));
        auto ef = to_map(g.bracket(t.e, t.f));
        if (he != std::map<int, Rat>{{t.e, rat(2)}}) violate("sl2 relation", "[h,e] != 2e");
        if (hf != std::map<int, Rat>{{t.f, rat(-2)}}) violate("sl2 relation", "[h,f] != -2f");
        if (ef != std::map<int, Rat>{{t.h, rat(1)}}) violate("sl2 relation", "[e,f] != h");
    }

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::map<int, Rat> acc = to_map(g.bracket(i, j));
            for (const auto& [k, c] : g.bracket(j, i)) {
                acc[k] += c;
                if (sgn(acc[k]) == 0) acc.erase(k);
            }
            if (!acc.empty()) violate("antisymmetry", g.name(i) + ", " + g.name(j));
            long w = g.weight(i) + g.weight(j);
            for (const auto& [k, c] : g.bracket(i, j))
                if (g.weight(k) != w) violate("weight additivity", g.name(i) + ", " + g.name(j));
        }
    for (int i = 0; i < n; ++i) {
        std::map<int, Rat> acc = to_map(g.bracket(t.h, i));
        acc[i] -= rat(g.weight(i));
        if (sgn(acc[i]) == 0) acc.erase(i);
        if (!acc.empty()) violate("ad(h) diagonality", g.name(i));
    }
    // Jacobi on triples with total level <= max_level
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                if (g.level(i) + g.level(j) + g.level(k) > max_level) continue;
                std::map<int, Rat> acc;
                auto add = [&acc](const SparseVec& v, const Rat& s) {
                    for (const auto& [m, c] : v) {
                        acc[m] += c * s;
                        if (sgn(acc[m]) == 0) acc.erase(m);
                    }
                };
                for (const auto& [m, cm] : g.bracket(j, k)) add(g.bracket(i, m), cm);
                for (const auto& [m, cm] : g.bracket(i, j)) add(g.bracket(m, k), -cm);
                for (const auto& [m, cm] : g.bracket(i, k)) add(g.bracket(j, m), -cm);
                if (!acc.empty())
                    violate("jacobi", g.name(i) + ", " + g.name(j) + ", " + g.name(k));
            }
    return report;
}

std::map<long, long> filtered_level_decomposition(const FilteredLieAlgebra& g, int N) {
    std::map<long, long> dims;
    for (int i = 0; i < g.level_dim(N); ++i) dims[g.weight(i)] += 1;
    return decompose_sl2_dims(dims);
}

}  // namespace weylkit
