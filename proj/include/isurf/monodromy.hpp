#pragma once

#include <string>
#include <vector>

#include "isurf/lattice.hpp"

namespace isurf {

// Vanishing-cycle data: for each double curve D_i a pair (alpha_i, beta_i) spanning the
// image of H^1(D_i) inside an isotropic sublattice W1 of the ambient lattice.
struct MonodromyFrame {
    std::string label;
    IntegralLattice ambient;
    std::vector<IntVec> alpha;
    std::vector<IntVec> beta;
    IntMatrix w1;                 // saturated basis of the span of all cycles
    std::vector<IntVec> w1_dual;  // ambient vectors pairing to delta_{jk} with the w1 rows

    std::size_t k() const { return alpha.size(); }
};

// Recomputes W1 and checks the frame invariants (isotropy, rank 4, primitivity).
void finalize_frame(MonodromyFrame& f, bool require_rank4 = true);
MonodromyFrame build_frame(const std::string& stratum);

// N_i(x) = <x, beta_i> alpha_i - <x, alpha_i> beta_i, as a matrix on coordinate columns.
IntMatrix picard_lefschetz(const MonodromyFrame& f, std::size_t i);
IntMatrix total_monodromy(const MonodromyFrame& f, const std::vector<long>& weights);
// N_i(x) for every i: the coefficient of lambda_i in (sum lambda_i N_i)(x).
std::vector<IntVec> symbolic_action(const MonodromyFrame& f, const IntVec& x);

struct PrimitivityCertificate {
    IntVec divisors;  // Smith invariants of the operators flattened into columns
    bool primitive = false;
};

PrimitivityCertificate primitivity_certificate(const std::vector<IntMatrix>& ops);

struct WeightData {
    std::size_t rank = 0;
    IntMatrix image;   // saturated image of N (= W1), rows
    IntMatrix kernel;  // rows (= W2)
    bool image_was_saturated = false;
};

// Requires N^2 = 0.
WeightData weight_data(const IntMatrix& n);

// Index of Im N_i + Im N_j in W1 for every pair i < j (0 if not of finite index), sorted.
std::vector<Int> pair_index_pattern(const MonodromyFrame& f);

// Type of the limiting mixed Hodge structure: r = h^{0,0}, s = h^{1,0}.
struct LozengeType {
    int r = 0;
    int s = 0;
    std::string to_string() const;
    bool operator==(const LozengeType&) const = default;
};

LozengeType lozenge_type(std::size_t w0_rank, std::size_t w1_rank);
bool is_skew(const IntegralLattice& l, const IntMatrix& n);

}  // namespace isurf
