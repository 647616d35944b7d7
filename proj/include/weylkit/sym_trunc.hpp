#pragma once

#include "weylkit/module.hpp"

namespace weylkit {

// S^d V of a one-component weighted sl2-module, as a module component in
// degree d with the Leibniz action (positive algebra part acts by zero).
ModulePtr sym_power(const GradedWeightedModule& V, int d);

struct TruncatedSymAlgebra {
    TruncationSet omega;
    ModulePtr module;             // the quotient algebra, degrees 0..top computed
    std::vector<long> graded_dims;
    Decomposition decomposition;
    long total_dim = 0;
    bool terminated = false;      // first zero component reached (generated in degree 1)
};

struct SymTruncOptions {
    int max_degree = 64;
    long basis_size_limit = 200000;  // safety valve for non-terminating inputs
    bool self_check = false;         // sl2-stability of the ideal, multiplicativity, zero propagation
};

// S_Omega(V) = SV / (SV . complement-of-Omega isotypic parts), computed
// degree by degree; stops at the first zero component or at the cap.
TruncatedSymAlgebra truncated_sym_algebra(const GradedWeightedModule& V, const TruncationSet& om,
                                          const SymTruncOptions& opt = {});

}  // namespace weylkit
