#include "weylkit/sl2.hpp"

namespace weylkit {

std::map<long, long> decompose_sl2_dims(const std::map<long, long>& dims) {
    for (const auto& [m, d] : dims) {
        if (d < 0) throw wk_error(wk_error::code::invalid_input, "negative weight dimension");
        auto it = dims.find(-m);
        long other = it == dims.end() ? 0 : it->second;
        if (other != d)
            throw wk_error(wk_error::code::invalid_input,
                           "weight dimensions not symmetric under m <-> -m at m = " + std::to_string(m));
    }
    auto dim_at = [&](long m) {
        auto it = dims.find(m);
        return it == dims.end() ? 0L : it->second;
    };
    std::map<long, long> mults;
    for (const auto& [m, d] : dims) {
        if (m < 0 || d == 0) continue;
        long mult = d - dim_at(m + 2);
        if (mult < 0)
            throw wk_error(wk_error::code::invalid_input,
                           "not an integrable character: negative multiplicity at m = " + std::to_string(m));
        if (mult > 0) mults[m] = mult;
    }
    return mults;
}

std::map<long, long> expand_sl2_mults(const std::map<long, long>& mults) {
    std::map<long, long> dims;
    for (const auto& [m, k] : mults)
        for (long w = -m; w <= m; w += 2) dims[w] += k;
    return dims;
}

}  // namespace weylkit
