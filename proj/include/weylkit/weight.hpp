#pragma once

#include <vector>

#include "weylkit/matrix.hpp"

namespace weylkit {

// Weight in the fundamental-weight basis (omega_1..omega_r). The shipped
// decomposition algorithms are rank 1, where a weight is a single integer.
struct WeightVector {
    std::vector<long> coords;

    WeightVector() = default;
    explicit WeightVector(std::vector<long> c) : coords(std::move(c)) {}
    static WeightVector rank1(long m) { return WeightVector({m}); }

    int rank() const { return int(coords.size()); }
    bool dominant() const {
        for (long c : coords)
            if (c < 0) return false;
        return true;
    }
    bool operator==(const WeightVector& o) const { return coords == o.coords; }
};

// Rank and Cartan matrix; row i gives the simple root alpha_i in the
// omega-basis. Rank 1 is [[2]].
struct RootData {
    int rank = 1;
    std::vector<std::vector<long>> cartan = {{2}};

    static RootData a1() { return RootData{1, {{2}}}; }
    static RootData a2() { return RootData{2, {{2, -1}, {-1, 2}}}; }
};

// True iff mu <= la in the root order, i.e. la - mu is a nonnegative
// rational combination of simple roots. Throws on singular Cartan data.
bool leq_in_root_order(const WeightVector& mu, const WeightVector& la, const RootData& rd);

}  // namespace weylkit
